#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cxsim/calibration.hpp"
#include "cxsim/cognition.hpp"
#include "cxsim/scenario.hpp"

namespace cxsim {

inline constexpr std::string_view kToolVersion = "cxsim 0.1.0";
inline constexpr int kSchemaVersion = 1;

struct ScenarioFile {
  Scenario scenario;
  std::optional<CognitionParams> cognition;
};

// Values a params file supplies to scenario files that leave them out.
struct ScenarioDefaults {
  std::optional<GrowthParams> growth;
  std::optional<double> tau;
  std::optional<CognitionParams> cognition;
};

// Scenario files are JSON objects:
//
//   { "schema": 1, "label": "...",
//     "growth": {"n_max": .., "b": .., "tau_g": ..},
//     "mode": {"kind": "linear" | "double_exponential", "h": .., "tau": ..},
//     "events": [{"kind": "sudden", "month": .., "fraction": ..},
//                {"kind": "sustained", "start_month": .., "monthly_rate": ..}],
//     "cognition": {"k": .., "lambda": .., "E": .., "l": .., "K0": ..} }
//
// Unknown keys are rejected. Throws ParseError, SchemaError or
// ValidationError.
ScenarioFile parse_scenario_text(std::string_view text, const ScenarioDefaults& defaults = {});
ScenarioFile parse_scenario_file(const std::filesystem::path& path, const ScenarioDefaults& defaults = {});

std::string scenario_json(const Scenario& scenario, const std::optional<CognitionParams>& cognition = std::nullopt);

// month,log2_complexity[,cognitive_depth] with 9 significant digits.
std::string trajectory_csv(const Trajectory& trajectory);
void write_trajectory_csv(const Trajectory& trajectory, const std::filesystem::path& path);
Trajectory read_trajectory_csv(const std::filesystem::path& path);

struct PlotOptions {
  enum class YMode { Log2, EquivalentAge };
  std::string title;
  YMode y_mode = YMode::Log2;
  // Required for EquivalentAge; values outside its ascending branch are
  // clamped to [0, peak].
  std::optional<Scenario> baseline;
};

std::string plot_svg(std::span<const Trajectory> trajectories, const PlotOptions& options);
void emit_plot_svg(std::span<const Trajectory> trajectories, const std::filesystem::path& path,
                   const PlotOptions& options);

struct CalibrationRecord {
  Calibration calibration;
  RootFindConfig cfg;
  double horizon = kDefaultHorizon;
};

std::string params_json(const CalibrationRecord& record);
CalibrationRecord parse_params_text(std::string_view text);
CalibrationRecord read_params_file(const std::filesystem::path& path);
ScenarioDefaults defaults_from(const Calibration& calibration);

struct RunReport {
  std::string scenario_label;
  std::optional<double> peak_month;
  std::map<double, double> equivalent_ages;  // query month -> month
  std::map<double, std::string> equivalent_age_errors;  // "below-range" / "above-range"
  std::optional<double> intersection_month;
  ScenarioFile params_used;
  std::optional<std::string> baseline_used;  // baseline scenario echo (JSON)
  RootFindConfig cfg;
  double horizon = kDefaultHorizon;
  std::string tool_version{kToolVersion};
};

std::string report_json(std::span<const RunReport> reports);

void write_text_file(const std::filesystem::path& path, std::string_view contents);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace cxsim
