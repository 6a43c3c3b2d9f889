#include "cxsim/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cxsim/errors.hpp"

namespace cxsim {
namespace {

using json = nlohmann::json;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

std::string format_g9(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

std::string format_fixed2(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t offset = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::ostringstream os;
    os << "malformed input at line " << line << ", column " << column << ": " << e.what();
    throw ParseError(os.str(), line, column);
  } catch (const json::exception& e) {
    // Numbers out of double range and similar lexer-level rejections.
    throw ParseError(std::string("malformed input: ") + e.what(), 0, 0);
  }
}

// Typed access to one JSON object with unknown-key rejection.
class ObjectReader {
 public:
  ObjectReader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw SchemaError(path_.empty() ? "<root>" : path_, "expected an object");
  }

  bool has(const std::string& key) const { return j_.contains(key); }

  double number(const std::string& key) {
    const json& v = take(key);
    if (!v.is_number()) throw SchemaError(child(key), "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw SchemaError(child(key), "expected a finite number");
    return x;
  }

  double number_or(const std::string& key, double fallback) { return has(key) ? number(key) : fallback; }

  int integer(const std::string& key) {
    const json& v = take(key);
    if (!v.is_number_integer()) throw SchemaError(child(key), "expected an integer");
    const auto x = v.get<long long>();
    if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
      throw SchemaError(child(key), "integer out of range");
    return static_cast<int>(x);
  }

  std::string text(const std::string& key) {
    const json& v = take(key);
    if (!v.is_string()) throw SchemaError(child(key), "expected a string");
    return v.get<std::string>();
  }

  const json& array(const std::string& key) {
    const json& v = take(key);
    if (!v.is_array()) throw SchemaError(child(key), "expected an array");
    return v;
  }

  ObjectReader object(const std::string& key) { return ObjectReader(take(key), child(key)); }

  std::string child(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }
  const std::string& path() const { return path_; }

  // Call once every expected key has been read.
  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!seen_.contains(it.key())) throw SchemaError(child(it.key()), "unknown key");
    }
  }

 private:
  const json& take(const std::string& key) {
    if (!j_.contains(key)) throw SchemaError(child(key), "missing required key");
    seen_.insert(key);
    return j_.at(key);
  }

  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

void require(bool ok, const std::string& path, const std::string& what) {
  if (!ok) throw SchemaError(path, what);
}

GrowthParams read_growth(ObjectReader r) {
  GrowthParams g;
  g.n_max = r.number("n_max");
  require(g.n_max > 0.0, r.child("n_max"), "must be > 0");
  g.b = r.number("b");
  require(g.b > 0.0, r.child("b"), "must be > 0");
  g.tau_g = r.number("tau_g");
  require(g.tau_g > 0.0, r.child("tau_g"), "must be > 0");
  r.finish();
  return g;
}

WeakeningMode read_mode(ObjectReader r, const ScenarioDefaults& defaults) {
  const std::string kind = r.text("kind");
  const double h = r.number_or("h", kReferenceDecayRate);
  require(h >= 0.0, r.child("h"), "must be >= 0");
  WeakeningMode mode;
  if (kind == "linear") {
    mode = LinearExponent{h};
  } else if (kind == "double_exponential") {
    double tau = 0.0;
    if (r.has("tau")) {
      tau = r.number("tau");
    } else if (defaults.tau) {
      tau = *defaults.tau;
    } else {
      throw SchemaError(r.child("tau"), "missing required key (no params file supplies it)");
    }
    require(tau > 0.0, r.child("tau"), "must be > 0");
    mode = DoubleExponential{h, tau};
  } else {
    throw SchemaError(r.child("kind"), "expected \"linear\" or \"double_exponential\"");
  }
  r.finish();
  return mode;
}

DamageEvent read_event(ObjectReader r) {
  const std::string kind = r.text("kind");
  DamageEvent event;
  if (kind == "sudden") {
    SuddenLoss e;
    e.month = r.number("month");
    require(e.month >= 0.0, r.child("month"), "must be >= 0");
    e.fraction = r.number("fraction");
    require(e.fraction > 0.0 && e.fraction < 1.0, r.child("fraction"), "fraction out of (0,1)");
    event = e;
  } else if (kind == "sustained") {
    SustainedLoss e;
    e.start_month = r.number("start_month");
    require(e.start_month >= 0.0, r.child("start_month"), "must be >= 0");
    e.monthly_rate = r.number("monthly_rate");
    require(e.monthly_rate > 0.0 && e.monthly_rate < 1.0, r.child("monthly_rate"), "monthly_rate out of (0,1)");
    event = e;
  } else {
    throw SchemaError(r.child("kind"), "expected \"sudden\" or \"sustained\"");
  }
  r.finish();
  return event;
}

CognitionParams read_cognition(ObjectReader r, const GrowthParams& growth) {
  CognitionParams c;
  c.k = r.number("k");
  require(c.k > 0.0, r.child("k"), "must be > 0");
  c.lambda = r.number("lambda");
  require(c.lambda > 0.0, r.child("lambda"), "must be > 0");
  c.E = r.number_or("E", 1.0);
  require(c.E > 0.0, r.child("E"), "must be > 0");
  c.K0 = r.number_or("K0", 1.0);
  require(c.K0 > 0.0, r.child("K0"), "must be > 0");
  c.l = r.has("l") ? r.number("l") : default_coupling(growth);
  require(c.l >= 0.0, r.child("l"), "must be >= 0");
  r.finish();
  return c;
}

json growth_to_json(const GrowthParams& g) { return json{{"n_max", g.n_max}, {"b", g.b}, {"tau_g", g.tau_g}}; }

json mode_to_json(const WeakeningMode& mode) {
  return std::visit(overloaded{[](const LinearExponent& m) { return json{{"kind", "linear"}, {"h", m.h}}; },
                               [](const DoubleExponential& m) {
                                 return json{{"kind", "double_exponential"}, {"h", m.h}, {"tau", m.tau}};
                               }},
                    mode);
}

json cognition_to_json(const CognitionParams& c) {
  return json{{"k", c.k}, {"E", c.E}, {"l", c.l}, {"lambda", c.lambda}, {"K0", c.K0}};
}

json scenario_to_json(const Scenario& s, const std::optional<CognitionParams>& cognition) {
  json events = json::array();
  for (const auto& event : s.events) {
    events.push_back(std::visit(
        overloaded{[](const SuddenLoss& e) { return json{{"kind", "sudden"}, {"month", e.month}, {"fraction", e.fraction}}; },
                   [](const SustainedLoss& e) {
                     return json{{"kind", "sustained"}, {"start_month", e.start_month}, {"monthly_rate", e.monthly_rate}};
                   }},
        event));
  }
  json j{{"schema", kSchemaVersion},
         {"label", s.label},
         {"growth", growth_to_json(s.growth)},
         {"mode", mode_to_json(s.mode)},
         {"events", events}};
  if (cognition) j["cognition"] = cognition_to_json(*cognition);
  return j;
}

json cfg_to_json(const RootFindConfig& cfg) {
  return json{{"abs_tol", cfg.abs_tol}, {"max_iter", cfg.max_iter}, {"bracket_expansion", cfg.bracket_expansion}};
}

json pair_to_json(const EquivalencePair& p) {
  return json{{"query_month", p.query_month}, {"equivalent_month", p.equivalent_month}};
}

EquivalencePair read_pair(ObjectReader r) {
  EquivalencePair p{r.number("query_month"), r.number("equivalent_month")};
  r.finish();
  return p;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw UsageError("cannot open '" + path.string() + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw UsageError("failed writing '" + path.string() + "'");
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ScenarioFile parse_scenario_text(std::string_view text, const ScenarioDefaults& defaults) {
  const json root = parse_json(text);
  ObjectReader r(root, "");
  const int schema = r.integer("schema");
  require(schema == kSchemaVersion, "schema", "unsupported schema version " + std::to_string(schema));

  ScenarioFile file;
  auto& s = file.scenario;
  s.label = r.has("label") ? r.text("label") : "scenario";
  if (r.has("growth")) {
    s.growth = read_growth(r.object("growth"));
  } else if (defaults.growth) {
    s.growth = *defaults.growth;
  } else {
    throw SchemaError("growth", "missing required key (no params file supplies it)");
  }
  s.mode = r.has("mode") ? read_mode(r.object("mode"), defaults) : WeakeningMode{LinearExponent{}};
  if (r.has("events")) {
    const json& events = r.array("events");
    for (std::size_t i = 0; i < events.size(); ++i)
      s.events.push_back(read_event(ObjectReader(events[i], "events[" + std::to_string(i) + "]")));
  }
  if (r.has("cognition")) {
    file.cognition = read_cognition(r.object("cognition"), s.growth);
  } else if (defaults.cognition) {
    file.cognition = defaults.cognition;
  }
  r.finish();
  require_valid(s);
  return file;
}

ScenarioFile parse_scenario_file(const std::filesystem::path& path, const ScenarioDefaults& defaults) {
  std::ifstream probe(path);
  if (!probe) throw UsageError("scenario file '" + path.string() + "' not found or unreadable");
  return parse_scenario_text(read_text_file(path), defaults);
}

std::string scenario_json(const Scenario& scenario, const std::optional<CognitionParams>& cognition) {
  return scenario_to_json(scenario, cognition).dump(2) + "\n";
}

std::string trajectory_csv(const Trajectory& t) {
  const bool depth = t.cognitive_depth.has_value();
  if (t.log2_complexity.size() != t.months.size() || (depth && t.cognitive_depth->size() != t.months.size()))
    throw UsageError("trajectory series have unequal lengths");
  std::string out = depth ? "month,log2_complexity,cognitive_depth\n" : "month,log2_complexity\n";
  for (std::size_t i = 0; i < t.months.size(); ++i) {
    out += format_g9(t.months[i]);
    out += ',';
    out += format_g9(t.log2_complexity[i]);
    if (depth) {
      out += ',';
      out += format_g9((*t.cognitive_depth)[i]);
    }
    out += '\n';
  }
  return out;
}

void write_trajectory_csv(const Trajectory& trajectory, const std::filesystem::path& path) {
  write_text_file(path, trajectory_csv(trajectory));
}

Trajectory read_trajectory_csv(const std::filesystem::path& path) {
  std::istringstream in(read_text_file(path));
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty CSV", 1, 1);
  bool depth = false;
  if (line == "month,log2_complexity,cognitive_depth") {
    depth = true;
  } else if (line != "month,log2_complexity") {
    throw ParseError("unexpected CSV header '" + line + "'", 1, 1);
  }
  Trajectory t;
  t.scenario_label = path.stem().string();
  if (depth) t.cognitive_depth.emplace();
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string cell;
    std::vector<double> values;
    while (std::getline(fields, cell, ',')) {
      try {
        std::size_t used = 0;
        values.push_back(std::stod(cell, &used));
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw ParseError("bad number '" + cell + "' in CSV row " + std::to_string(row), row, 1);
      }
    }
    if (values.size() != (depth ? 3u : 2u))
      throw ParseError("wrong column count in CSV row " + std::to_string(row), row, 1);
    t.months.push_back(values[0]);
    t.log2_complexity.push_back(values[1]);
    if (depth) t.cognitive_depth->push_back(values[2]);
  }
  return t;
}

std::string plot_svg(std::span<const Trajectory> trajectories, const PlotOptions& options) {
  if (trajectories.empty()) throw UsageError("plot: no trajectories");
  const auto& grid = trajectories.front().months;
  if (grid.size() < 2) throw UsageError("plot: need at least two samples");
  for (const auto& t : trajectories) {
    if (t.months != grid) throw UsageError("plot: trajectories do not share a month grid");
    if (t.log2_complexity.size() != grid.size()) throw UsageError("plot: series length mismatch");
  }

  std::vector<std::vector<double>> series;
  std::optional<AscendingBranch> branch;
  if (options.y_mode == PlotOptions::YMode::EquivalentAge) {
    if (!options.baseline) throw UsageError("plot: equivalent-age mode needs a baseline scenario");
    branch.emplace(*options.baseline, RootFindConfig{});
  }
  for (const auto& t : trajectories) {
    if (!branch) {
      series.push_back(t.log2_complexity);
      continue;
    }
    std::vector<double> ys;
    for (double v : t.log2_complexity) {
      if (v < branch->floor_value()) {
        ys.push_back(0.0);
      } else if (v > branch->peak_value()) {
        ys.push_back(branch->peak_month());
      } else {
        ys.push_back(branch->invert(v));
      }
    }
    series.push_back(std::move(ys));
  }

  double y_min = std::numeric_limits<double>::infinity();
  double y_max = -std::numeric_limits<double>::infinity();
  for (const auto& ys : series) {
    for (double y : ys) {
      y_min = std::min(y_min, y);
      y_max = std::max(y_max, y);
    }
  }
  if (!(y_max > y_min)) {
    y_min -= 1.0;
    y_max += 1.0;
  }
  const double pad = 0.05 * (y_max - y_min);
  y_min -= pad;
  y_max += pad;
  const double x_min = grid.front();
  const double x_max = grid.back();

  constexpr double kWidth = 800, kHeight = 600;
  constexpr double kLeft = 90, kRight = 20, kTop = 50, kBottom = 60;
  constexpr double kPlotW = kWidth - kLeft - kRight, kPlotH = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * kPlotW; };
  auto py = [&](double y) { return kTop + (y_max - y) / (y_max - y_min) * kPlotH; };
  static constexpr const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n"
     << "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
  if (!options.title.empty())
    os << "<text x=\"400\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"18\">"
       << xml_escape(options.title) << "</text>\n";
  os << "<g stroke=\"black\" stroke-width=\"1\">\n"
     << "<line x1=\"" << format_fixed2(kLeft) << "\" y1=\"" << format_fixed2(kTop + kPlotH) << "\" x2=\""
     << format_fixed2(kLeft + kPlotW) << "\" y2=\"" << format_fixed2(kTop + kPlotH) << "\"/>\n"
     << "<line x1=\"" << format_fixed2(kLeft) << "\" y1=\"" << format_fixed2(kTop) << "\" x2=\"" << format_fixed2(kLeft)
     << "\" y2=\"" << format_fixed2(kTop + kPlotH) << "\"/>\n"
     << "</g>\n";
  os << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  constexpr int kTicks = 6;
  for (int i = 0; i <= kTicks; ++i) {
    const double xv = x_min + (x_max - x_min) * i / kTicks;
    const double yv = y_min + (y_max - y_min) * i / kTicks;
    os << "<text x=\"" << format_fixed2(px(xv)) << "\" y=\"" << format_fixed2(kTop + kPlotH + 16)
       << "\" text-anchor=\"middle\">" << format_g9(std::round(xv * 100) / 100) << "</text>\n";
    os << "<text x=\"" << format_fixed2(kLeft - 6) << "\" y=\"" << format_fixed2(py(yv) + 4)
       << "\" text-anchor=\"end\">" << xml_escape(format_g9(yv).substr(0, 10)) << "</text>\n";
  }
  os << "</g>\n";
  os << "<text x=\"" << format_fixed2(kLeft + kPlotW / 2) << "\" y=\"" << format_fixed2(kHeight - 15)
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">month</text>\n";
  const char* y_label = branch ? "equivalent age (months)" : "log2 complexity (states)";
  os << "<text x=\"18\" y=\"" << format_fixed2(kTop + kPlotH / 2) << "\" transform=\"rotate(-90 18 "
     << format_fixed2(kTop + kPlotH / 2) << ")\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
     << y_label << "</text>\n";

  for (std::size_t k = 0; k < series.size(); ++k) {
    const char* color = kPalette[k % std::size(kPalette)];
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (i) os << ' ';
      os << format_fixed2(px(grid[i])) << ',' << format_fixed2(py(series[k][i]));
    }
    os << "\"/>\n";
  }

  os << "<g class=\"legend\" font-family=\"sans-serif\" font-size=\"12\">\n";
  for (std::size_t k = 0; k < trajectories.size(); ++k) {
    const double y = kTop + 14 + 18 * static_cast<double>(k);
    const double x = kLeft + kPlotW - 200;
    os << "<line x1=\"" << format_fixed2(x) << "\" y1=\"" << format_fixed2(y) << "\" x2=\"" << format_fixed2(x + 24)
       << "\" y2=\"" << format_fixed2(y) << "\" stroke=\"" << kPalette[k % std::size(kPalette)]
       << "\" stroke-width=\"2\"/>\n";
    os << "<text x=\"" << format_fixed2(x + 30) << "\" y=\"" << format_fixed2(y + 4) << "\">"
       << xml_escape(trajectories[k].scenario_label) << "</text>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

void emit_plot_svg(std::span<const Trajectory> trajectories, const std::filesystem::path& path,
                   const PlotOptions& options) {
  write_text_file(path, plot_svg(trajectories, options));
}

std::string params_json(const CalibrationRecord& record) {
  const auto& c = record.calibration;
  json j{{"schema", kSchemaVersion},
         {"kind", "calibration"},
         {"tool_version", std::string(kToolVersion)},
         {"h", c.h},
         {"horizon", record.horizon},
         {"targets",
          {{"peak_month", c.targets.peak_month},
           {"baseline_equiv", pair_to_json(c.targets.baseline_equiv)},
           {"exp_weaken_equiv", pair_to_json(c.targets.exp_weaken_equiv)},
           {"intersection_month", c.targets.intersection_month}}},
         {"growth", growth_to_json(c.growth_fit.growth)},
         {"weakening_tau", c.tau_fit.tau},
         {"cognition", cognition_to_json(c.cognition)},
         {"residuals",
          {{"peak_month", c.growth_fit.peak_residual},
           {"baseline_equiv", c.growth_fit.equiv_residual},
           {"exp_weaken_equiv", c.tau_fit.residual},
           {"intersection_month", c.intersection_residual}}},
         {"iterations", {{"growth", c.growth_fit.iterations}, {"weakening_tau", c.tau_fit.iterations}}},
         {"growth_method", c.growth_fit.method},
         {"solver", cfg_to_json(record.cfg)}};
  return j.dump(2) + "\n";
}

CalibrationRecord parse_params_text(std::string_view text) {
  const json root = parse_json(text);
  ObjectReader r(root, "");
  require(r.integer("schema") == kSchemaVersion, "schema", "unsupported schema version");
  require(r.text("kind") == "calibration", "kind", "expected \"calibration\"");
  r.text("tool_version");

  CalibrationRecord rec;
  auto& c = rec.calibration;
  c.h = r.number("h");
  rec.horizon = r.number("horizon");
  {
    auto t = r.object("targets");
    c.targets.peak_month = t.number("peak_month");
    c.targets.baseline_equiv = read_pair(t.object("baseline_equiv"));
    c.targets.exp_weaken_equiv = read_pair(t.object("exp_weaken_equiv"));
    c.targets.intersection_month = t.number("intersection_month");
    t.finish();
  }
  c.growth_fit.growth = read_growth(r.object("growth"));
  c.tau_fit.tau = r.number("weakening_tau");
  require(c.tau_fit.tau > 0.0, "weakening_tau", "must be > 0");
  c.cognition = read_cognition(r.object("cognition"), c.growth_fit.growth);
  {
    auto res = r.object("residuals");
    c.growth_fit.peak_residual = res.number("peak_month");
    c.growth_fit.equiv_residual = res.number("baseline_equiv");
    c.tau_fit.residual = res.number("exp_weaken_equiv");
    c.intersection_residual = res.number("intersection_month");
    res.finish();
  }
  {
    auto it = r.object("iterations");
    c.growth_fit.iterations = it.integer("growth");
    c.tau_fit.iterations = it.integer("weakening_tau");
    it.finish();
  }
  c.growth_fit.method = r.text("growth_method");
  {
    auto s = r.object("solver");
    rec.cfg.abs_tol = s.number("abs_tol");
    rec.cfg.max_iter = s.integer("max_iter");
    rec.cfg.bracket_expansion = s.number("bracket_expansion");
    s.finish();
  }
  r.finish();
  return rec;
}

CalibrationRecord read_params_file(const std::filesystem::path& path) {
  return parse_params_text(read_text_file(path));
}

ScenarioDefaults defaults_from(const Calibration& calibration) {
  return ScenarioDefaults{calibration.growth_fit.growth, calibration.tau_fit.tau, calibration.cognition};
}

std::string report_json(std::span<const RunReport> reports) {
  json out = json::array();
  for (const auto& r : reports) {
    json equiv = json::object();
    for (const auto& [query, month] : r.equivalent_ages) equiv[format_g9(query)] = month;
    json errors = json::object();
    for (const auto& [query, what] : r.equivalent_age_errors) errors[format_g9(query)] = what;
    json params{{"scenario", scenario_to_json(r.params_used.scenario, r.params_used.cognition)},
                {"solver", cfg_to_json(r.cfg)},
                {"horizon", r.horizon}};
    if (r.baseline_used) params["baseline"] = json::parse(*r.baseline_used);
    out.push_back(json{{"scenario_label", r.scenario_label},
                       {"peak_month", r.peak_month ? json(*r.peak_month) : json(nullptr)},
                       {"equivalent_ages", equiv},
                       {"equivalent_age_errors", errors},
                       {"intersection_month", r.intersection_month ? json(*r.intersection_month) : json(nullptr)},
                       {"params_used", params},
                       {"tool_version", r.tool_version}});
  }
  return out.dump(2) + "\n";
}

}  // namespace cxsim
