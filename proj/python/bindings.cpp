#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "cxsim/calibration.hpp"
#include "cxsim/cli.hpp"
#include "cxsim/combinatorics.hpp"
#include "cxsim/errors.hpp"
#include "cxsim/io.hpp"

namespace py = pybind11;
using namespace cxsim;

namespace {

py::int_ to_python(const BigInt& value) {
  const auto text = value.str();
  return py::reinterpret_steal<py::int_>(PyLong_FromString(text.c_str(), nullptr, 10));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Lifespan network-complexity simulator and calibration toolkit";
  m.attr("__version__") = std::string(kToolVersion.substr(kToolVersion.find(' ') + 1));
  m.attr("REFERENCE_DECAY_RATE") = kReferenceDecayRate;
  m.attr("DEFAULT_HORIZON") = kDefaultHorizon;

  static py::exception<Error> base_error(m, "CxsimError");
  py::register_exception<ParameterError>(m, "ParameterError", base_error.ptr());
  py::register_exception<UsageError>(m, "UsageError", base_error.ptr());
  py::register_exception<ParseError>(m, "ParseError", base_error.ptr());
  py::register_exception<SchemaError>(m, "SchemaError", base_error.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base_error.ptr());
  py::register_exception<ShapeError>(m, "ShapeError", base_error.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base_error.ptr());
  py::register_exception<CalibrationError>(m, "CalibrationError", base_error.ptr());
  py::register_exception<BracketError>(m, "BracketError", base_error.ptr());
  py::register_exception<RangeError>(m, "RangeError", base_error.ptr());
  py::register_exception<ConfigurationError>(m, "ConfigurationError", base_error.ptr());
  py::register_exception<DomainError>(m, "DomainError", base_error.ptr());
  py::register_exception<ScaleError>(m, "ScaleError", base_error.ptr());

  py::class_<GrowthParams>(m, "GrowthParams")
      .def(py::init<>())
      .def(py::init([](double n_max, double b, double tau_g) { return GrowthParams{n_max, b, tau_g}; }),
           py::arg("n_max"), py::arg("b"), py::arg("tau_g"))
      .def_readwrite("n_max", &GrowthParams::n_max)
      .def_readwrite("b", &GrowthParams::b)
      .def_readwrite("tau_g", &GrowthParams::tau_g)
      .def("__repr__", [](const GrowthParams& g) {
        std::ostringstream os;
        os << "GrowthParams(n_max=" << g.n_max << ", b=" << g.b << ", tau_g=" << g.tau_g << ")";
        return os.str();
      });

  py::class_<LinearExponent>(m, "LinearExponent")
      .def(py::init([](double h) { return LinearExponent{h}; }), py::arg("h") = kReferenceDecayRate)
      .def_readwrite("h", &LinearExponent::h);

  py::class_<DoubleExponential>(m, "DoubleExponential")
      .def(py::init([](double h, double tau) { return DoubleExponential{h, tau}; }), py::arg("h"), py::arg("tau"))
      .def_readwrite("h", &DoubleExponential::h)
      .def_readwrite("tau", &DoubleExponential::tau);

  py::class_<SuddenLoss>(m, "SuddenLoss")
      .def(py::init([](double month, double fraction) { return SuddenLoss{month, fraction}; }), py::arg("month"),
           py::arg("fraction"))
      .def_readwrite("month", &SuddenLoss::month)
      .def_readwrite("fraction", &SuddenLoss::fraction);

  py::class_<SustainedLoss>(m, "SustainedLoss")
      .def(py::init([](double start, double rate) { return SustainedLoss{start, rate}; }), py::arg("start_month"),
           py::arg("monthly_rate"))
      .def_readwrite("start_month", &SustainedLoss::start_month)
      .def_readwrite("monthly_rate", &SustainedLoss::monthly_rate);

  py::class_<Scenario>(m, "Scenario")
      .def(py::init([](GrowthParams growth, WeakeningMode mode, std::vector<DamageEvent> events, std::string label) {
             return Scenario{growth, mode, std::move(events), std::move(label)};
           }),
           py::arg("growth"), py::arg("mode") = WeakeningMode{LinearExponent{}},
           py::arg("events") = std::vector<DamageEvent>{}, py::arg("label") = "baseline")
      .def_readwrite("growth", &Scenario::growth)
      .def_readwrite("mode", &Scenario::mode)
      .def_readwrite("events", &Scenario::events)
      .def_readwrite("label", &Scenario::label);

  py::class_<Trajectory>(m, "Trajectory")
      .def_readonly("months", &Trajectory::months)
      .def_readonly("log2_complexity", &Trajectory::log2_complexity)
      .def_readonly("cognitive_depth", &Trajectory::cognitive_depth)
      .def_readonly("scenario_label", &Trajectory::scenario_label)
      .def("__len__", [](const Trajectory& t) { return t.months.size(); });

  py::class_<CognitionParams>(m, "CognitionParams")
      .def(py::init([](double k, double E, double l, double lambda, double K0) {
             return CognitionParams{k, E, l, lambda, K0};
           }),
           py::arg("k"), py::arg("E") = 1.0, py::arg("l") = 0.0, py::arg("lambda_") = 0.002, py::arg("K0") = 1.0)
      .def_readwrite("k", &CognitionParams::k)
      .def_readwrite("E", &CognitionParams::E)
      .def_readwrite("l", &CognitionParams::l)
      .def_readwrite("lambda_", &CognitionParams::lambda)
      .def_readwrite("K0", &CognitionParams::K0);

  py::class_<RootFindConfig>(m, "RootFindConfig")
      .def(py::init<>())
      .def_readwrite("abs_tol", &RootFindConfig::abs_tol)
      .def_readwrite("max_iter", &RootFindConfig::max_iter)
      .def_readwrite("bracket_expansion", &RootFindConfig::bracket_expansion);

  py::class_<EquivalencePair>(m, "EquivalencePair")
      .def(py::init([](double q, double e) { return EquivalencePair{q, e}; }), py::arg("query_month"),
           py::arg("equivalent_month"))
      .def_readwrite("query_month", &EquivalencePair::query_month)
      .def_readwrite("equivalent_month", &EquivalencePair::equivalent_month);

  py::class_<CalibrationTargets>(m, "CalibrationTargets")
      .def(py::init<>())
      .def_readwrite("peak_month", &CalibrationTargets::peak_month)
      .def_readwrite("baseline_equiv", &CalibrationTargets::baseline_equiv)
      .def_readwrite("exp_weaken_equiv", &CalibrationTargets::exp_weaken_equiv)
      .def_readwrite("intersection_month", &CalibrationTargets::intersection_month);

  py::class_<GrowthFit>(m, "GrowthFit")
      .def_readonly("growth", &GrowthFit::growth)
      .def_readonly("peak_residual", &GrowthFit::peak_residual)
      .def_readonly("equiv_residual", &GrowthFit::equiv_residual)
      .def_readonly("iterations", &GrowthFit::iterations)
      .def_readonly("method", &GrowthFit::method);

  py::class_<TauFit>(m, "TauFit")
      .def_readonly("tau", &TauFit::tau)
      .def_readonly("residual", &TauFit::residual)
      .def_readonly("iterations", &TauFit::iterations);

  py::class_<Calibration>(m, "Calibration")
      .def_readonly("targets", &Calibration::targets)
      .def_readonly("h", &Calibration::h)
      .def_readonly("growth_fit", &Calibration::growth_fit)
      .def_readonly("tau_fit", &Calibration::tau_fit)
      .def_readonly("cognition", &Calibration::cognition)
      .def_readonly("intersection_residual", &Calibration::intersection_residual)
      .def("baseline", &Calibration::baseline)
      .def("weakened", &Calibration::weakened);

  m.def("neuron_count", &neuron_count, py::arg("t"), py::arg("growth"));
  m.def("neuron_count_derivative", &neuron_count_derivative, py::arg("t"), py::arg("growth"));
  m.def("base_log2", &base_log2, py::arg("t"), py::arg("mode"));
  m.def("damage_factor", [](double t, const std::vector<DamageEvent>& events) { return damage_factor(t, events); },
        py::arg("t"), py::arg("events"));
  m.def("effective_neurons", &effective_neurons, py::arg("t"), py::arg("scenario"));
  m.def("log2_complexity", &log2_complexity, py::arg("t"), py::arg("scenario"));
  m.def("validate_scenario",
        [](const Scenario& s, double horizon) { return validate_scenario(s, horizon).violations; },
        py::arg("scenario"), py::arg("horizon") = kDefaultHorizon,
        "List of invariant violations; empty when the scenario is valid.");
  m.def(
      "simulate",
      [](const Scenario& s, double t_start, double t_end, double step, std::optional<CognitionParams> cognition) {
        return simulate(s, t_start, t_end, step, cognition ? &*cognition : nullptr);
      },
      py::arg("scenario"), py::arg("t_start") = 0.0, py::arg("t_end") = kDefaultHorizon, py::arg("step") = 1.0,
      py::arg("cognition") = py::none());

  m.def("knowledge", &knowledge, py::arg("t"), py::arg("params"));
  m.def("cognitive_depth_raw",
        [](double t, const CognitionParams& p, const GrowthParams& g) { return cognitive_depth_raw(t, p, g); },
        py::arg("t"), py::arg("params"), py::arg("growth"));
  m.def("cognitive_depth",
        [](double t, const CognitionParams& p, const Scenario& s) { return cognitive_depth(t, p, s); }, py::arg("t"),
        py::arg("params"), py::arg("scenario"));

  const RootFindConfig default_cfg;
  m.def("find_peak", &find_peak, py::arg("scenario"), py::arg("cfg") = default_cfg,
        py::arg("horizon") = kDefaultHorizon, py::arg("scan_step") = 1.0);
  m.def("equivalent_age", &equivalent_age, py::arg("scenario"), py::arg("query_month"), py::arg("baseline"),
        py::arg("cfg") = default_cfg, py::arg("horizon") = kDefaultHorizon);
  m.def("calibrate_growth", &calibrate_growth, py::arg("targets") = CalibrationTargets{},
        py::arg("h") = kReferenceDecayRate, py::arg("cfg") = default_cfg, py::arg("n_max") = 1e6,
        py::arg("horizon") = kDefaultHorizon);
  m.def("calibrate_weakening_tau", &calibrate_weakening_tau, py::arg("growth"), py::arg("h"), py::arg("target"),
        py::arg("cfg") = default_cfg, py::arg("horizon") = kDefaultHorizon);
  m.def("calibrate_cognition", &calibrate_cognition, py::arg("growth"), py::arg("mode"),
        py::arg("intersection_month"), py::arg("cfg") = default_cfg, py::arg("horizon") = kDefaultHorizon);
  m.def("find_intersection", &find_intersection, py::arg("params"), py::arg("scenario"), py::arg("cfg") = default_cfg,
        py::arg("horizon") = kDefaultHorizon);
  m.def("calibrate_all", &calibrate_all, py::arg("targets") = CalibrationTargets{},
        py::arg("h") = kReferenceDecayRate, py::arg("cfg") = default_cfg, py::arg("n_max") = 1e6,
        py::arg("horizon") = kDefaultHorizon);

  m.def("states_with_n_firing", [](unsigned n, unsigned k) { return to_python(states_with_n_firing(n, k)); },
        py::arg("neurons"), py::arg("firing"));
  m.def("total_states", [](unsigned n) { return to_python(total_states(n)); }, py::arg("neurons"));
  m.def("enumerate_states", [](unsigned n) { return enumerate_states(n).counts; }, py::arg("neurons"),
        "Firing-count histogram from visiting all 2^N configurations.");

  m.def("parse_scenario_file",
        [](const std::filesystem::path& path, std::optional<std::filesystem::path> params) {
          ScenarioDefaults defaults;
          if (params) defaults = defaults_from(read_params_file(*params).calibration);
          auto f = parse_scenario_file(path, defaults);
          return py::make_tuple(f.scenario, f.cognition);
        },
        py::arg("path"), py::arg("params") = py::none(),
        "Parse a scenario file; missing growth, tau and cognition values come from a calibrate output file.");
  m.def("write_trajectory_csv", &write_trajectory_csv, py::arg("trajectory"), py::arg("path"));
  m.def("read_trajectory_csv", &read_trajectory_csv, py::arg("path"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run a cxsim subcommand; returns (exit_code, stdout, stderr).");
}
