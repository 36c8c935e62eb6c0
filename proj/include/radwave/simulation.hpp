#pragma once

#include <optional>
#include <string>
#include <vector>

#include "radwave/config.hpp"
#include "radwave/monitors.hpp"
#include "radwave/state.hpp"

namespace radwave {

enum class RunStatus { Completed, BlowUp, StiffnessCollapse };

std::string to_string(RunStatus s);

struct RunResult {
  RunStatus status = RunStatus::Completed;
  std::optional<double> failure_time; ///< time of blow-up or stiffness collapse
  std::string message;
  std::vector<CharState> snapshots;   ///< t = 0, every snapshot_stride steps, last state
  MonitorSeries monitors;
  std::vector<double> dts;            ///< accepted step sizes in order
  std::size_t steps = 0;
};

/// Evolves the characteristic scheme from t = 0 to T_final.
/// Blow-up and stiffness collapse end the run early and are reported in the
/// result; configuration problems throw.
RunResult run(const RunConfig& cfg);

struct LeapfrogResult {
  RunStatus status = RunStatus::Completed;
  std::optional<double> failure_time;
  std::string message;
  std::vector<WaveState> snapshots;
  double dt = 0.0;
};

/// Fixed-step leapfrog run with dt = T / ceil(T / (leapfrog_courant * dr)).
LeapfrogResult run_leapfrog(const RunConfig& cfg);

} // namespace radwave
