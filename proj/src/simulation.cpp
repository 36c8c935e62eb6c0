#include "radwave/simulation.hpp"

#include <cmath>

#include "radwave/error.hpp"
#include "radwave/evolution.hpp"

namespace radwave {

std::string to_string(RunStatus s) {
  switch (s) {
  case RunStatus::Completed: return "completed";
  case RunStatus::BlowUp: return "blow_up";
  default: return "stiffness_collapse";
  }
}

RunResult run(const RunConfig& cfg) {
  cfg.validate();
  const RadialGrid g = cfg.grid();
  const auto [f0, f1] = cfg.families();
  const CauchyData data = sample_data(f0, f1, g);

  RunResult result;
  MonitorRecorder recorder(cfg.monitors);
  CharState state = initial_char_state(data, cfg.eq, g);
  recorder.record(state);
  result.snapshots.push_back(state);

  const double t_end = cfg.t_final;
  const double snap_tol = 1e-12 * std::max(1.0, t_end);
  bool last_recorded = true;
  try {
    while (state.t < t_end) {
      double dt = nonlinear_cfl_dt(state, cfg.policy, g);
      if (state.t + dt > t_end - snap_tol) dt = t_end - state.t;
      state = char_step(state, dt, g);
      if (state.t >= t_end - snap_tol) state.t = t_end;
      result.dts.push_back(dt);
      ++result.steps;
      last_recorded = false;
      if (result.steps % static_cast<std::size_t>(cfg.monitor_stride) == 0 || state.t >= t_end) {
        recorder.record(state);
        last_recorded = true;
      }
      if (cfg.snapshot_stride > 0 && result.steps % static_cast<std::size_t>(cfg.snapshot_stride) == 0 &&
          state.t < t_end)
        result.snapshots.push_back(state);
    }
  } catch (const BlowUpDetected& e) {
    result.status = RunStatus::BlowUp;
    result.failure_time = e.time;
    result.message = e.what();
  } catch (const StiffnessCollapse& e) {
    result.status = RunStatus::StiffnessCollapse;
    result.failure_time = e.time;
    result.message = e.what();
  }
  if (!last_recorded) recorder.record(state);
  if (result.snapshots.back().t != state.t) result.snapshots.push_back(state);
  result.monitors = recorder.series();
  return result;
}

LeapfrogResult run_leapfrog(const RunConfig& cfg) {
  cfg.validate();
  const RadialGrid g = cfg.grid();
  const auto [f0, f1] = cfg.families();
  const CauchyData data = sample_data(f0, f1, g);

  LeapfrogResult result;
  if (cfg.t_final == 0.0) {
    WaveState s;
    s.eq = cfg.eq;
    s.w_curr = Field::sample(g, [&, p = Profile(f0)](double r) { return r * p.value(r); });
    s.w_prev = s.w_curr;
    result.snapshots.push_back(s);
    return result;
  }
  const auto steps = static_cast<std::size_t>(std::ceil(cfg.t_final / (cfg.leapfrog_courant * g.dr()) - 1e-9));
  const double dt = cfg.t_final / static_cast<double>(steps);
  result.dt = dt;

  WaveState s = leapfrog_start(data, cfg.eq, g, dt);
  {
    WaveState initial;
    initial.eq = cfg.eq;
    initial.t = 0.0;
    initial.w_curr = s.w_prev;
    initial.w_prev = s.w_prev;
    result.snapshots.push_back(initial);
  }
  try {
    for (std::size_t k = 1; k < steps; ++k) {
      s = leapfrog_step(s, dt, g);
      s.t = static_cast<double>(k + 1) * dt;
      if (cfg.snapshot_stride > 0 && (k + 1) % static_cast<std::size_t>(cfg.snapshot_stride) == 0 && k + 1 < steps)
        result.snapshots.push_back(s);
    }
  } catch (const BlowUpDetected& e) {
    result.status = RunStatus::BlowUp;
    result.failure_time = e.time;
    result.message = e.what();
  }
  s.t = result.status == RunStatus::Completed ? cfg.t_final : s.t;
  result.snapshots.push_back(s);
  return result;
}

} // namespace radwave
