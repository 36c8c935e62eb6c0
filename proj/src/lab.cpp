#include "radwave/lab.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "radwave/error.hpp"
#include "radwave/field_ops.hpp"
#include "radwave/linear_oracle.hpp"
#include "radwave/scaling.hpp"

namespace radwave {

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string monitors_csv(const MonitorSeries& m) {
  std::string out = "t";
  for (const auto& name : MonitorSeries::channel_names()) out += "," + name;
  out += '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    out += format_real(m.times()[i]);
    for (double v : m.row(i)) out += "," + format_real(v);
    out += '\n';
  }
  return out;
}

double max_increase(const std::vector<double>& v) {
  double worst = 0.0;
  for (std::size_t i = 1; i < v.size(); ++i) worst = std::max(worst, v[i] - v[i - 1]);
  return worst;
}

double max_decrease(const std::vector<double>& v) {
  double worst = 0.0;
  for (std::size_t i = 1; i < v.size(); ++i) worst = std::max(worst, v[i - 1] - v[i]);
  return worst;
}

std::string summary_json(const RunConfig& cfg, const RunResult& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["format_version"] = kSummaryFormatVersion;
  j["status"] = to_string(r.status);
  j["blow_up"] = {{"detected", r.status == RunStatus::BlowUp},
                  {"time", r.status == RunStatus::BlowUp ? ordered_json(*r.failure_time) : ordered_json(nullptr)}};
  j["stiffness_collapse"] = {
      {"detected", r.status == RunStatus::StiffnessCollapse},
      {"time", r.status == RunStatus::StiffnessCollapse ? ordered_json(*r.failure_time) : ordered_json(nullptr)}};
  j["message"] = r.message;
  j["steps"] = r.steps;
  j["final_time"] = r.snapshots.back().t;
  const auto& m = r.monitors;
  ordered_json finals = ordered_json::object();
  const auto last = m.size() - 1;
  finals["t"] = m.times()[last];
  const auto row = m.row(last);
  for (std::size_t c = 0; c < row.size(); ++c) {
    const double v = row[c];
    finals[MonitorSeries::channel_names()[c]] = std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr);
  }
  j["final_monitors"] = finals;
  ordered_json drift = ordered_json::object();
  auto put = [&](const char* key, double v) { drift[key] = std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); };
  for (const char* name : {"haraux_max", "l2_1_p", "l2_2_p", "l2_4_p", "l2_8_p", "l2_1_m", "l2_2_m", "l2_4_m",
                           "l2_8_m", "energy1", "energy2"})
    put((std::string(name) + "_max_increase").c_str(), max_increase(m[name]));
  for (const char* name : {"dissipation1", "dissipation2", "N1", "N2"})
    put((std::string(name) + "_max_decrease").c_str(), max_decrease(m[name]));
  j["monotone_drift"] = drift;
  j["config"] = emit_config(cfg);
  return j.dump(2) + "\n";
}

ExitCode exit_code_for(RunStatus s) {
  switch (s) {
  case RunStatus::Completed: return ExitCode::Ok;
  case RunStatus::BlowUp: return ExitCode::BlowUp;
  default: return ExitCode::Stiffness;
  }
}

void write_file(const std::string& out_dir, const std::string& name, const std::string& text) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create output directory '" + out_dir + "': " + ec.message());
  const auto path = std::filesystem::path(out_dir) / name;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path.string() + "' for writing");
  f << text;
  if (!f) throw IoError("write to '" + path.string() + "' failed");
}

ExitCode cmd_run(const RunConfig& cfg, const std::string& out_dir, bool quiet, std::ostream& log) {
  const auto start = std::chrono::steady_clock::now();
  const RunResult r = run(cfg);
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  write_file(out_dir, "monitors.csv", monitors_csv(r.monitors));
  write_file(out_dir, "summary.json", summary_json(cfg, r));
  if (!quiet) {
    log << "status: " << to_string(r.status) << '\n'
        << "steps: " << r.steps << ", final t = " << r.snapshots.back().t << '\n'
        << "wall clock: " << wall << " s\n";
    if (!r.message.empty()) log << r.message << '\n';
  }
  return exit_code_for(r.status);
}

namespace {

double sup_diff(const Field& a, const Field& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
  return m;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

void require_completed(RunStatus s, const std::string& what) {
  if (s == RunStatus::BlowUp) throw BlowUpDetected(what + ": run blew up", 0.0);
  if (s == RunStatus::StiffnessCollapse) throw StiffnessCollapse(what + ": stiffness collapse", 0.0);
}

} // namespace

std::vector<ConvergenceRow> convergence_study(const RunConfig& cfg, int levels) {
  if (levels < 3) throw ValidationError("convergence study needs at least 3 levels");
  cfg.validate();
  const auto [f0, f1] = cfg.families();
  const OddProfilePair oracle(f0, f1);

  struct LevelErrors {
    std::size_t n;
    double dt_char, dt_leap;
    double oracle_char, oracle_leap, res1, res2, cross;
  };
  std::vector<LevelErrors> lv;
  for (int l = 0; l < levels; ++l) {
    RunConfig c = cfg;
    c.n = (cfg.n - 1) * (std::size_t{1} << l) + 1;
    c.snapshot_stride = 0;
    c.monitors = MonitorLevel::Full;
    LevelErrors e{};
    e.n = c.n;

    RunConfig lin = c;
    lin.eq.damped = false;
    lin.monitors = MonitorLevel::Light;
    const RunResult lin_char = run(lin);
    const LeapfrogResult lin_leap = run_leapfrog(lin);
    require_completed(lin_char.status, "linear characteristic run");
    require_completed(lin_leap.status, "linear leapfrog run");
    e.oracle_char = oracle_error(std::span(&lin_char.snapshots.back(), 1), oracle).front().sup_error;
    e.oracle_leap = oracle_error(std::span(&lin_leap.snapshots.back(), 1), oracle).front().sup_error;

    const RunResult full = run(c);
    const LeapfrogResult leap = run_leapfrog(c);
    require_completed(full.status, "characteristic run");
    require_completed(leap.status, "leapfrog run");
    e.res1 = max_abs(full.monitors["residual1"]);
    e.res2 = max_abs(full.monitors["residual2"]);
    e.cross = sup_diff(full.snapshots.back().w, leap.snapshots.back().w_curr);
    e.dt_char = full.dts.empty() ? c.policy.courant * c.grid().dr() : *std::max_element(full.dts.begin(), full.dts.end());
    e.dt_leap = leap.dt;
    lv.push_back(e);
  }

  std::vector<ConvergenceRow> rows;
  auto emit = [&](const std::string& name, auto error_of, bool leap_dt) {
    for (int l = 0; l < levels; ++l) {
      const auto& e = lv[static_cast<std::size_t>(l)];
      ConvergenceRow row{name, l, e.n, leap_dt ? e.dt_leap : e.dt_char, error_of(e), std::nullopt, false};
      if (l > 0) {
        const double prev = error_of(lv[static_cast<std::size_t>(l - 1)]);
        if (prev == 0.0 && row.error == 0.0) row.exact = true;
        else row.order = std::log2(prev / row.error);
      }
      rows.push_back(row);
    }
  };
  emit("oracle_char", [](const LevelErrors& e) { return e.oracle_char; }, false);
  emit("oracle_leapfrog", [](const LevelErrors& e) { return e.oracle_leap; }, true);
  emit("residual1", [](const LevelErrors& e) { return e.res1; }, false);
  emit("residual2", [](const LevelErrors& e) { return e.res2; }, false);
  emit("cross_scheme", [](const LevelErrors& e) { return e.cross; }, false);
  return rows;
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
  std::string out = "quantity,level,n,dt,error,order\n";
  for (const auto& r : rows) {
    std::string order;
    if (r.exact) order = "exact";
    else if (r.order) order = std::isinf(*r.order) ? "inf" : format_real(*r.order);
    out += r.quantity + "," + std::to_string(r.level) + "," + std::to_string(r.n) + "," + format_real(r.dt) + "," +
           format_real(r.error) + "," + order + "\n";
  }
  return out;
}

ExitCode cmd_converge(const RunConfig& cfg, int levels, const std::string& out_dir, bool quiet, std::ostream& log) {
  const auto rows = convergence_study(cfg, levels);
  const std::string csv = convergence_csv(rows);
  write_file(out_dir, "converge.csv", csv);
  if (!quiet) log << csv;
  return ExitCode::Ok;
}

SweepAxis sweep_axis_from_string(const std::string& s) {
  if (s == "p") return SweepAxis::P;
  if (s == "amplitude") return SweepAxis::Amplitude;
  if (s == "n") return SweepAxis::N;
  throw ValidationError("unknown sweep axis '" + s + "' (expected p, amplitude or n)");
}

std::string to_string(SweepAxis a) {
  switch (a) {
  case SweepAxis::P: return "p";
  case SweepAxis::Amplitude: return "amplitude";
  default: return "n";
  }
}

namespace {

SweepRow sweep_member(const RunConfig& base, SweepAxis axis, double value) {
  SweepRow row{};
  row.value = value;
  try {
    RunConfig c = base;
    c.snapshot_stride = 0;
    switch (axis) {
    case SweepAxis::P: c.eq.p = value; break;
    case SweepAxis::Amplitude: c.u0.amplitude = value; break;
    case SweepAxis::N:
      if (!(value >= 3.0) || value != std::floor(value)) throw ValidationError("n must be an integer >= 3");
      c.n = static_cast<std::size_t>(value);
      break;
    }
    const RunResult r = run(c);
    row.status = to_string(r.status);
    row.failure_time = r.failure_time;
    row.steps = r.steps;
    row.final_time = r.snapshots.back().t;
    const auto& h = r.monitors["haraux_max"];
    row.haraux_initial = h.front();
    row.haraux_final = h.back();
    row.haraux_max_increase = max_increase(h);
    row.max_abs_residual1 = max_abs(r.monitors["residual1"]);
  } catch (const std::exception& e) {
    row.status = std::string("error: ") + e.what();
  }
  return row;
}

} // namespace

std::vector<SweepRow> sweep(const RunConfig& base, SweepAxis axis, std::vector<double> values, unsigned threads) {
  std::sort(values.begin(), values.end());
  std::vector<SweepRow> rows(values.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, values.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < values.size();) rows[i] = sweep_member(base, axis, values[i]);
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  return rows;
}

std::string sweep_csv(SweepAxis axis, const std::vector<SweepRow>& rows) {
  std::string out = to_string(axis) +
                    ",status,failure_time,steps,final_time,haraux_initial,haraux_final,haraux_max_increase,"
                    "max_abs_residual1\n";
  for (const auto& r : rows) {
    std::string status = r.status;
    std::replace(status.begin(), status.end(), ',', ';');
    out += format_real(r.value) + "," + status + "," + (r.failure_time ? format_real(*r.failure_time) : "") + "," +
           std::to_string(r.steps) + "," + format_real(r.final_time) + "," + format_real(r.haraux_initial) + "," +
           format_real(r.haraux_final) + "," + format_real(r.haraux_max_increase) + "," +
           format_real(r.max_abs_residual1) + "\n";
  }
  return out;
}

ExitCode cmd_sweep(const RunConfig& base, SweepAxis axis, const std::vector<double>& values,
                   const std::string& out_dir, bool quiet, std::ostream& log) {
  const auto rows = sweep(base, axis, values);
  const std::string csv = sweep_csv(axis, rows);
  write_file(out_dir, "sweep.csv", csv);
  if (!quiet) log << csv;
  return ExitCode::Ok;
}

std::vector<ScalingRow> scaling_table(const RunConfig& cfg, const std::vector<double>& lambdas,
                                      const std::vector<int>& ks) {
  cfg.validate();
  const RadialGrid g = cfg.grid();
  const auto [f0, f1] = cfg.families();
  std::vector<std::pair<double, Field>> slices;
  slices.emplace_back(0.0, sample_data(f0, f1, g).u0);
  if (cfg.t_final > 0.0) {
    RunConfig c = cfg;
    c.monitors = MonitorLevel::Light;
    c.snapshot_stride = 0;
    const RunResult r = run(c);
    require_completed(r.status, "scaling run");
    slices.emplace_back(r.snapshots.back().t, regular_quotient(r.snapshots.back().w));
  }
  std::vector<ScalingRow> rows;
  for (const auto& [t, u] : slices) {
    for (double lambda : lambdas) {
      for (int k : ks) {
        ScalingRow row{t, lambda, k};
        try {
          const ScalingReport rep = verify_scaling(u, lambda, cfg.eq.p, k);
          row.exponent = rep.exponent;
          row.lhs = rep.lhs;
          row.rhs = rep.rhs;
          row.residual = rep.residual;
        } catch (const OutOfDomain& e) {
          row.status = std::string("out_of_domain: ") + e.what();
        } catch (const ValidationError& e) {
          row.status = std::string("invalid: ") + e.what();
        }
        rows.push_back(row);
      }
    }
  }
  return rows;
}

std::string scaling_csv(const std::vector<ScalingRow>& rows) {
  std::string out = "t,lambda,k,exponent,lhs,rhs,residual,status\n";
  for (const auto& r : rows) {
    std::string status = r.status;
    std::replace(status.begin(), status.end(), ',', ';');
    out += format_real(r.t) + "," + format_real(r.lambda) + "," + std::to_string(r.k) + "," +
           format_real(r.exponent) + "," + format_real(r.lhs) + "," + format_real(r.rhs) + "," +
           format_real(r.residual) + "," + status + "\n";
  }
  return out;
}

ExitCode cmd_scaling(const RunConfig& cfg, const std::vector<double>& lambdas, const std::vector<int>& ks,
                     const std::string& out_dir, bool quiet, std::ostream& log) {
  const auto rows = scaling_table(cfg, lambdas, ks);
  const std::string csv = scaling_csv(rows);
  write_file(out_dir, "scaling.csv", csv);
  if (!quiet) log << csv;
  return ExitCode::Ok;
}

} // namespace radwave
