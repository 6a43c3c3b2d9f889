#include "cxsim/cli.hpp"

#include <cstdio>
#include <future>
#include <optional>

#include <CLI11.hpp>

#include "cxsim/calibration.hpp"
#include "cxsim/combinatorics.hpp"
#include "cxsim/errors.hpp"
#include "cxsim/io.hpp"

namespace cxsim {
namespace {

std::string g9(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

struct Common {
  std::string params_path;
  double horizon = kDefaultHorizon;
  RootFindConfig cfg;

  void attach(CLI::App* cmd) {
    cmd->add_option("--params", params_path, "Params file written by `calibrate`");
    cmd->add_option("--horizon", horizon, "Time horizon in months")->capture_default_str();
    cmd->add_option("--abs-tol", cfg.abs_tol, "Solver tolerance in months")->capture_default_str();
    cmd->add_option("--max-iter", cfg.max_iter, "Solver iteration limit")->capture_default_str();
  }

  ScenarioDefaults defaults(bool with_cognition) const {
    if (params_path.empty()) return {};
    auto d = defaults_from(read_params_file(params_path).calibration);
    if (!with_cognition) d.cognition.reset();
    return d;
  }
};

ScenarioFile load(const std::string& path, const Common& common, bool with_cognition) {
  return parse_scenario_file(path, common.defaults(with_cognition));
}

void emit(const std::string& path, const std::string& contents, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << contents;
  } else {
    write_text_file(path, contents);
  }
}

RunReport report_for(const ScenarioFile& file, const AscendingBranch& branch, const std::vector<double>& queries,
                     const Common& common) {
  RunReport report;
  report.scenario_label = file.scenario.label;
  report.params_used = file;
  report.cfg = common.cfg;
  report.horizon = common.horizon;
  try {
    report.peak_month = find_peak(file.scenario, common.cfg, common.horizon);
  } catch (const ShapeError&) {
  }
  for (double q : queries) {
    try {
      report.equivalent_ages[q] = branch.invert(log2_complexity(q, file.scenario));
    } catch (const RangeError& e) {
      report.equivalent_age_errors[q] = e.side() == RangeError::Side::Below ? "below-range" : "above-range";
    }
  }
  if (file.cognition) {
    try {
      report.intersection_month = find_intersection(*file.cognition, file.scenario, common.cfg, common.horizon);
    } catch (const ShapeError&) {
    }
  }
  return report;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lifespan network-complexity simulator and calibration toolkit", "cxsim"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  // simulate
  Common sim_common;
  std::string sim_scenario, sim_out;
  double sim_from = 0.0, sim_to = kDefaultHorizon, sim_step = 1.0;
  bool sim_depth = false;
  auto* sim = app.add_subcommand("simulate", "Sample a scenario's complexity curve to CSV");
  sim->add_option("--scenario", sim_scenario, "Scenario file")->required();
  sim->add_option("--from", sim_from)->capture_default_str();
  sim->add_option("--to", sim_to)->capture_default_str();
  sim->add_option("--step", sim_step)->capture_default_str();
  sim->add_option("--out", sim_out, "CSV output path (default stdout)");
  sim->add_flag("--depth", sim_depth, "Include cognitive depth using the params file's cognition");
  sim_common.attach(sim);

  // calibrate
  Common cal_common;
  CalibrationTargets targets;
  double cal_h = kReferenceDecayRate, cal_n_max = 1e6;
  std::string cal_out;
  auto* cal = app.add_subcommand("calibrate", "Fit growth, weakening tau and cognition to the anchors");
  cal->add_option("--peak", targets.peak_month)->capture_default_str();
  cal->add_option("--query", targets.baseline_equiv.query_month, "Query month for both equivalence anchors")
      ->capture_default_str();
  cal->add_option("--baseline-equiv", targets.baseline_equiv.equivalent_month)->capture_default_str();
  cal->add_option("--exp-weaken-equiv", targets.exp_weaken_equiv.equivalent_month)->capture_default_str();
  cal->add_option("--intersection", targets.intersection_month)->capture_default_str();
  cal->add_option("--decay-rate", cal_h, "Per-neuron decay rate h")->capture_default_str();
  cal->add_option("--n-max", cal_n_max, "Neuron-count scale")->capture_default_str();
  cal->add_option("--out", cal_out, "Params file output path (default stdout)");
  cal_common.attach(cal);

  // equiv-age
  Common eq_common;
  std::string eq_scenario, eq_baseline;
  double eq_at = 1000.0;
  auto* eq = app.add_subcommand("equiv-age", "Month on the baseline's rising branch matching a scenario");
  eq->add_option("--scenario", eq_scenario)->required();
  eq->add_option("--baseline", eq_baseline)->required();
  eq->add_option("--at", eq_at)->capture_default_str();
  eq_common.attach(eq);

  // find-peak
  Common pk_common;
  std::string pk_scenario;
  double pk_scan = 1.0;
  auto* pk = app.add_subcommand("find-peak", "Month of the complexity maximum");
  pk->add_option("--scenario", pk_scenario)->required();
  pk->add_option("--scan-step", pk_scan)->capture_default_str();
  pk_common.attach(pk);

  // intersect
  Common ix_common;
  std::string ix_scenario;
  auto* ix = app.add_subcommand("intersect", "Month where cognitive depth meets complexity");
  ix->add_option("--scenario", ix_scenario)->required();
  ix_common.attach(ix);

  // compare
  Common cmp_common;
  std::string cmp_baseline, cmp_out;
  std::vector<std::string> cmp_scenarios;
  std::vector<double> cmp_at{1000.0};
  auto* cmp = app.add_subcommand("compare", "Peak and equivalent ages for several scenarios");
  cmp->add_option("--baseline", cmp_baseline)->required();
  cmp->add_option("--scenario", cmp_scenarios)->required();
  cmp->add_option("--at", cmp_at)->capture_default_str();
  cmp->add_option("--out", cmp_out, "Run report (JSON) output path");
  cmp_common.attach(cmp);

  // enumerate
  unsigned en_neurons = 0;
  bool en_formula = false;
  auto* en = app.add_subcommand("enumerate", "Firing-state histogram of a small network");
  en->add_option("--neurons", en_neurons)->required();
  en->add_flag("--formula", en_formula, "Use exact binomials instead of enumeration (N <= 64)");

  // plot
  Common pl_common;
  std::vector<std::string> pl_scenarios;
  std::string pl_out, pl_title, pl_mode = "log2", pl_baseline;
  double pl_from = 0.0, pl_to = kDefaultHorizon, pl_step = 1.0;
  auto* pl = app.add_subcommand("plot", "Render scenario curves as SVG");
  pl->add_option("--scenario", pl_scenarios)->required();
  pl->add_option("--out", pl_out)->required();
  pl->add_option("--title", pl_title);
  pl->add_option("--y-mode", pl_mode)->check(CLI::IsMember({"log2", "equivalent-age"}))->capture_default_str();
  pl->add_option("--baseline", pl_baseline, "Baseline scenario for equivalent-age mode");
  pl->add_option("--from", pl_from)->capture_default_str();
  pl->add_option("--to", pl_to)->capture_default_str();
  pl->add_option("--step", pl_step)->capture_default_str();
  pl_common.attach(pl);

  std::vector<const char*> argv{"cxsim"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "cxsim: " << e.what() << '\n';
    if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
      err << "see `cxsim " << sub->get_name() << " --help`\n";
    }
    return 1;
  }

  try {
    if (sim->parsed()) {
      const auto file = load(sim_scenario, sim_common, sim_depth);
      if (sim_depth && !file.cognition) throw UsageError("--depth needs a cognition section or --params");
      const auto* cognition = file.cognition ? &*file.cognition : nullptr;
      const auto trajectory = simulate(file.scenario, sim_from, sim_to, sim_step, cognition);
      emit(sim_out, trajectory_csv(trajectory), out);
    } else if (cal->parsed()) {
      targets.exp_weaken_equiv.query_month = targets.baseline_equiv.query_month;
      CalibrationRecord record{calibrate_all(targets, cal_h, cal_common.cfg, cal_n_max, cal_common.horizon),
                               cal_common.cfg, cal_common.horizon};
      const auto text = params_json(record);
      emit(cal_out, text, out);
      if (!cal_out.empty() && cal_out != "-") {
        const auto& c = record.calibration;
        out << "growth b=" << g9(c.growth_fit.growth.b) << " tau_g=" << g9(c.growth_fit.growth.tau_g)
            << " weakening_tau=" << g9(c.tau_fit.tau) << " k=" << g9(c.cognition.k)
            << " lambda=" << g9(c.cognition.lambda) << '\n';
      }
    } else if (eq->parsed()) {
      const auto scenario = load(eq_scenario, eq_common, false);
      const auto baseline = load(eq_baseline, eq_common, false);
      out << g9(equivalent_age(scenario.scenario, eq_at, baseline.scenario, eq_common.cfg, eq_common.horizon))
          << '\n';
    } else if (pk->parsed()) {
      const auto file = load(pk_scenario, pk_common, false);
      out << g9(find_peak(file.scenario, pk_common.cfg, pk_common.horizon, pk_scan)) << '\n';
    } else if (ix->parsed()) {
      const auto file = load(ix_scenario, ix_common, true);
      if (!file.cognition) throw UsageError("intersect needs a cognition section or --params");
      out << g9(find_intersection(*file.cognition, file.scenario, ix_common.cfg, ix_common.horizon)) << '\n';
    } else if (cmp->parsed()) {
      const auto baseline = load(cmp_baseline, cmp_common, false);
      const AscendingBranch branch(baseline.scenario, cmp_common.cfg, cmp_common.horizon);
      std::vector<ScenarioFile> files;
      for (const auto& path : cmp_scenarios) files.push_back(load(path, cmp_common, !cmp_common.params_path.empty()));
      std::vector<std::future<RunReport>> pending;
      for (std::size_t i = 0; i < files.size(); ++i) {
        pending.push_back(std::async(std::launch::async, [&, i] {
          return report_for(files[i], branch, cmp_at, cmp_common);
        }));
      }
      std::vector<RunReport> reports;
      for (auto& f : pending) reports.push_back(f.get());
      const auto baseline_echo = scenario_json(baseline.scenario);
      for (auto& r : reports) r.baseline_used = baseline_echo;

      out << "scenario\tpeak_month";
      for (double q : cmp_at) out << "\tequiv@" << g9(q);
      out << '\n';
      for (const auto& r : reports) {
        out << r.scenario_label << '\t' << (r.peak_month ? g9(*r.peak_month) : "none");
        for (double q : cmp_at) {
          auto it = r.equivalent_ages.find(q);
          out << '\t' << (it != r.equivalent_ages.end() ? g9(it->second) : r.equivalent_age_errors.at(q));
        }
        out << '\n';
      }
      if (!cmp_out.empty()) write_text_file(cmp_out, report_json(reports));
    } else if (en->parsed()) {
      std::vector<BigInt> counts;
      if (en_formula) {
        for (unsigned n = 0; n <= en_neurons; ++n) counts.push_back(states_with_n_firing(en_neurons, n));
      } else {
        for (auto c : enumerate_states(en_neurons).counts) counts.emplace_back(c);
      }
      BigInt total = 0;
      for (std::size_t n = 0; n < counts.size(); ++n) {
        out << (n ? " " : "") << counts[n];
        total += counts[n];
      }
      out << "\ntotal " << total << '\n';
    } else if (pl->parsed()) {
      std::vector<Trajectory> trajectories;
      for (const auto& path : pl_scenarios)
        trajectories.push_back(simulate(load(path, pl_common, false).scenario, pl_from, pl_to, pl_step));
      PlotOptions options;
      options.title = pl_title;
      if (pl_mode == "equivalent-age") {
        if (pl_baseline.empty()) throw UsageError("--y-mode equivalent-age needs --baseline");
        options.y_mode = PlotOptions::YMode::EquivalentAge;
        options.baseline = load(pl_baseline, pl_common, false).scenario;
      }
      emit_plot_svg(trajectories, pl_out, options);
    }
  } catch (const Error& e) {
    err << "cxsim: " << e.what() << '\n';
    return is_usage_error(e) ? 1 : 2;
  } catch (const std::exception& e) {
    err << "cxsim: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace cxsim
