#include <sstream>

#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "radwave/config.hpp"
#include "radwave/error.hpp"
#include "radwave/initial_data.hpp"
#include "radwave/lab.hpp"
#include "radwave/monitors.hpp"
#include "radwave/scaling.hpp"
#include "radwave/simulation.hpp"

namespace py = pybind11;
using namespace radwave;

namespace {

py::array_t<double> to_array(const std::vector<double>& v) {
  py::array_t<double> out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

Field to_field(py::array_t<double, py::array::c_style | py::array::forcecast> a, double r_max) {
  if (a.ndim() != 1) throw ValidationError("expected a one-dimensional array");
  const auto n = static_cast<std::size_t>(a.shape(0));
  return Field(make_grid(r_max, n), std::vector<double>(a.data(), a.data() + n));
}

py::dict state_dict(const CharState& s) {
  py::dict d;
  d["t"] = s.t;
  d["r"] = to_array(s.grid().nodes());
  d["w"] = to_array(s.w.values);
  d["y"] = to_array(s.y.values);
  d["xp"] = to_array(s.xp.values);
  d["xm"] = to_array(s.xm.values);
  return d;
}

py::dict result_dict(const RunResult& r) {
  py::dict d;
  d["status"] = to_string(r.status);
  d["failure_time"] = r.failure_time ? py::cast(*r.failure_time) : py::none();
  d["message"] = r.message;
  d["steps"] = r.steps;
  d["dts"] = to_array(r.dts);
  py::dict mon;
  mon["t"] = to_array(r.monitors.times());
  for (const auto& name : MonitorSeries::channel_names()) mon[py::str(name)] = to_array(r.monitors[name]);
  d["monitors"] = mon;
  py::list snaps;
  for (const auto& s : r.snapshots) snaps.append(state_dict(s));
  d["snapshots"] = snaps;
  return d;
}

} // namespace

PYBIND11_MODULE(_radwave, m) {
  m.doc() = "Radial damped wave solver";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  auto validation = py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<DomainTooSmall>(m, "DomainTooSmall", validation.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", validation.ptr());
  py::register_exception<OutOfDomain>(m, "OutOfDomain", base.ptr());
  py::register_exception<StiffnessCollapse>(m, "StiffnessCollapse", base.ptr());
  py::register_exception<BlowUpDetected>(m, "BlowUpDetected", base.ptr());
  py::register_exception<IoError>(m, "IoError", base.ptr());

  py::enum_<Shape>(m, "Shape").value("Bump", Shape::Bump).value("Ring", Shape::Ring);
  py::enum_<MonitorLevel>(m, "MonitorLevel").value("Full", MonitorLevel::Full).value("Light", MonitorLevel::Light);

  py::class_<DataFamily>(m, "DataFamily")
      .def(py::init([](Shape shape, double amplitude, double radius, int smoothness) {
             DataFamily f{shape, amplitude, radius, smoothness};
             f.validate();
             return f;
           }),
           py::arg("shape") = Shape::Bump, py::arg("amplitude") = 0.0, py::arg("radius") = 1.0,
           py::arg("smoothness") = 6)
      .def_readwrite("shape", &DataFamily::shape)
      .def_readwrite("amplitude", &DataFamily::amplitude)
      .def_readwrite("radius", &DataFamily::radius)
      .def_readwrite("smoothness", &DataFamily::smoothness)
      .def(py::self == py::self)
      .def("__repr__", [](const DataFamily& f) {
        return "DataFamily(" + to_string(f.shape) + ", " + format_real(f.amplitude) + ", " +
               format_real(f.radius) + ", " + std::to_string(f.smoothness) + ")";
      });

  py::class_<RunConfig>(m, "RunConfig")
      .def(py::init<>())
      .def_property("p", [](const RunConfig& c) { return c.eq.p; }, [](RunConfig& c, double v) { c.eq.p = v; })
      .def_property("damped", [](const RunConfig& c) { return c.eq.damped; },
                    [](RunConfig& c, bool v) { c.eq.damped = v; })
      .def_readwrite("u0", &RunConfig::u0)
      .def_readwrite("u1", &RunConfig::u1)
      .def_readwrite("random_data", &RunConfig::random_data)
      .def_readwrite("seed", &RunConfig::seed)
      .def_readwrite("r_max", &RunConfig::r_max)
      .def_readwrite("n", &RunConfig::n)
      .def_property("courant", [](const RunConfig& c) { return c.policy.courant; },
                    [](RunConfig& c, double v) { c.policy.courant = v; })
      .def_property("safety", [](const RunConfig& c) { return c.policy.safety; },
                    [](RunConfig& c, double v) { c.policy.safety = v; })
      .def_property("dt_floor", [](const RunConfig& c) { return c.policy.dt_floor; },
                    [](RunConfig& c, double v) { c.policy.dt_floor = v; })
      .def_readwrite("t_final", &RunConfig::t_final)
      .def_readwrite("monitor_stride", &RunConfig::monitor_stride)
      .def_readwrite("snapshot_stride", &RunConfig::snapshot_stride)
      .def_readwrite("monitors", &RunConfig::monitors)
      .def_readwrite("out_dir", &RunConfig::out_dir)
      .def("validate", &RunConfig::validate)
      .def("to_text", [](const RunConfig& c) { return emit_config(c); })
      .def_static("from_text", &parse_config)
      .def_static("load", &load_config)
      .def(py::self == py::self);

  m.def("run", [](const RunConfig& cfg) {
    RunResult r;
    {
      py::gil_scoped_release release;
      r = run(cfg);
    }
    return result_dict(r);
  }, py::arg("config"), "Evolves the characteristic scheme; returns status, monitors and snapshots.");

  m.def("initial_state", [](const RunConfig& cfg) {
    cfg.validate();
    const auto [f0, f1] = cfg.families();
    const RadialGrid g = cfg.grid();
    return state_dict(initial_char_state(sample_data(f0, f1, g), cfg.eq, g));
  }, py::arg("config"));

  m.def("channel_names", &MonitorSeries::channel_names);
  m.def("critical_index", &critical_index, py::arg("p"));
  m.def("scaling_exponent", &scaling_exponent, py::arg("p"), py::arg("k"));

  m.def("verify_scaling", [](py::array_t<double, py::array::c_style | py::array::forcecast> u, double r_max,
                             double lambda, double p, int k) {
    const ScalingReport s = verify_scaling(to_field(u, r_max), lambda, p, k);
    py::dict d;
    d["lambda"] = s.lambda;
    d["k"] = s.k;
    d["exponent"] = s.exponent;
    d["lhs"] = s.lhs;
    d["rhs"] = s.rhs;
    d["residual"] = s.residual;
    return d;
  }, py::arg("u"), py::arg("r_max"), py::arg("lam"), py::arg("p"), py::arg("k"));

  m.def("strauss_check", [](py::array_t<double, py::array::c_style | py::array::forcecast> f, double r_max) {
    return strauss_check(to_field(f, r_max));
  }, py::arg("f"), py::arg("r_max"));
  m.def("hardy_check", [](py::array_t<double, py::array::c_style | py::array::forcecast> f, double r_max) {
    return hardy_check(to_field(f, r_max));
  }, py::arg("f"), py::arg("r_max"));

  m.def("run_to_directory", [](const RunConfig& cfg, const std::string& out_dir) {
    std::ostringstream log;
    ExitCode code;
    {
      py::gil_scoped_release release;
      code = cmd_run(cfg, out_dir, true, log);
    }
    return static_cast<int>(code);
  }, py::arg("config"), py::arg("out_dir"), "Writes monitors.csv and summary.json; returns the exit code.");
}
