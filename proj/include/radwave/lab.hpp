#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "radwave/config.hpp"
#include "radwave/monitors.hpp"
#include "radwave/simulation.hpp"

namespace radwave {

/// Process exit codes of the command-line tool.
enum class ExitCode : int { Ok = 0, Validation = 2, BlowUp = 3, Stiffness = 4, Io = 5 };

inline constexpr int kSummaryFormatVersion = 1;

/// 17 significant digits; NaN is written as "nan".
std::string format_real(double v);

std::string monitors_csv(const MonitorSeries& m);

/// Largest increase between consecutive records (0 when never increasing).
double max_increase(const std::vector<double>& v);
/// Largest decrease between consecutive records (0 when never decreasing).
double max_decrease(const std::vector<double>& v);

/// Deterministic JSON summary (no timing information).
std::string summary_json(const RunConfig& cfg, const RunResult& r);

ExitCode exit_code_for(RunStatus s);

/// Runs the characteristic scheme and writes monitors.csv + summary.json
/// into out_dir. Returns the exit code.
ExitCode cmd_run(const RunConfig& cfg, const std::string& out_dir, bool quiet, std::ostream& log);

struct ConvergenceRow {
  std::string quantity;
  int level;
  std::size_t n;
  double dt;
  double error;
  std::optional<double> order; ///< empty on the first level
  bool exact = false;          ///< both this and the previous error are zero
};

/// Doubles n - 1 per level and reports the linear-oracle errors of both
/// schemes, the energy-identity residuals and the cross-scheme discrepancy.
std::vector<ConvergenceRow> convergence_study(const RunConfig& cfg, int levels);
std::string convergence_csv(const std::vector<ConvergenceRow>& rows);
ExitCode cmd_converge(const RunConfig& cfg, int levels, const std::string& out_dir, bool quiet, std::ostream& log);

enum class SweepAxis { P, Amplitude, N };
SweepAxis sweep_axis_from_string(const std::string& s);
std::string to_string(SweepAxis a);

struct SweepRow {
  double value;
  std::string status;
  std::optional<double> failure_time;
  std::size_t steps = 0;
  double final_time = 0.0;
  double haraux_initial = 0.0;
  double haraux_final = 0.0;
  double haraux_max_increase = 0.0;
  double max_abs_residual1 = 0.0;
};

/// Independent runs per axis value, executed concurrently; rows ordered by value.
std::vector<SweepRow> sweep(const RunConfig& base, SweepAxis axis, std::vector<double> values, unsigned threads = 0);
std::string sweep_csv(SweepAxis axis, const std::vector<SweepRow>& rows);
ExitCode cmd_sweep(const RunConfig& base, SweepAxis axis, const std::vector<double>& values,
                   const std::string& out_dir, bool quiet, std::ostream& log);

struct ScalingRow {
  double t;
  double lambda;
  int k;
  double exponent = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  std::string status = "ok";
};

/// Scaling law at t = 0 and, when T_final > 0, at the final state of a run.
std::vector<ScalingRow> scaling_table(const RunConfig& cfg, const std::vector<double>& lambdas,
                                      const std::vector<int>& ks);
std::string scaling_csv(const std::vector<ScalingRow>& rows);
ExitCode cmd_scaling(const RunConfig& cfg, const std::vector<double>& lambdas, const std::vector<int>& ks,
                     const std::string& out_dir, bool quiet, std::ostream& log);

/// Writes text to out_dir/name, creating out_dir. Throws IoError.
void write_file(const std::string& out_dir, const std::string& name, const std::string& text);

} // namespace radwave
