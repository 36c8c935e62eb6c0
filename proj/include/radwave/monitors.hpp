#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "radwave/grid.hpp"
#include "radwave/state.hpp"

namespace radwave {

/// Half-line L^{2k} orders tracked for X+ and X-.
inline constexpr std::array<int, 4> kL2kOrders{1, 2, 4, 8};

enum class MonitorLevel {
  Full,  ///< every channel
  Light, ///< Haraux max, L^{2k} norms and sup|u_t| only; other channels are NaN
};

/// Named time series aligned with `times`. Channel order is fixed and is
/// the CSV column order.
class MonitorSeries {
public:
  MonitorSeries();

  static const std::vector<std::string>& channel_names();

  const std::vector<double>& times() const { return times_; }
  const std::vector<double>& operator[](std::string_view name) const;
  std::size_t size() const { return times_.size(); }
  std::vector<double> row(std::size_t i) const;

  void append(double t, const std::vector<double>& values);

private:
  std::vector<double> times_;
  std::vector<std::vector<double>> columns_;
};

/// Instantaneous quantities of one state.
struct Haraux {
  double max;        ///< max(sup|X+|, sup|X-|)
  double sup_ut;     ///< sup|u_t|
  double sup_r_utt;  ///< sup r|u_tt| = sup|X+ + X-|/2
  double sup_r_drut; ///< sup r|d_r u_t| = sup|X+ - X- - 2 u_t|/2
};

Haraux haraux_channels(const CharState& s);

struct L2kValues {
  int k;
  double plus;
  double minus;
};

std::vector<L2kValues> l2k_channels(const CharState& s, std::span<const int> ks = kL2kOrders);

/// Third- (k = 3) and fourth-order (k = 4) energies
///   E3 = ||grad Lap u|| + ||Lap u_t|| + ||grad u_tt|| + ||u_ttt||
///   E4 = ||Lap^2 u|| + ||grad Lap u_t|| + ||Lap u_tt|| + ||grad u_ttt|| + ||u_tttt||
/// with time derivatives eliminated through the equation.
/// k = 4 requires an odd integer exponent.
double Ek_channel(const CharState& s, int k);

/// max_{R > 0} R|f(R)| / ||f||_{H^1(|x| > R)}; 0 for f = 0.
double strauss_check(const Field& f);

/// ||f / r|| / ||d_r f||, 3D-weighted; 0 for f = 0. The classical bound is 2.
double hardy_check(const Field& f);

/// (a + b)(a^(2k-1) + b^(2k-1)) >= 0
bool elementary_inequality(double a, double b, int k);

/// Accumulates monitor rows over a trajectory in time order.
class MonitorRecorder {
public:
  explicit MonitorRecorder(MonitorLevel level = MonitorLevel::Full) : level_(level) {}

  void record(const CharState& s);
  const MonitorSeries& series() const { return series_; }
  MonitorLevel level() const { return level_; }

private:
  MonitorLevel level_;
  MonitorSeries series_;
  bool have_prev_ = false;
  double prev_t_ = 0.0;
  double e1_0_ = 0.0, e2_0_ = 0.0;
  double prev_rate1_ = 0.0, prev_rate2_ = 0.0, prev_n1_ = 0.0, prev_n2_ = 0.0, prev_dru_sq_ = 0.0;
  double diss1_ = 0.0, diss2_ = 0.0, n1_sq_ = 0.0, n2_sq_ = 0.0, dru_sq_ = 0.0, n3_ = 0.0;
};

MonitorSeries monitor_trajectory(std::span<const CharState> traj, MonitorLevel level = MonitorLevel::Full);

struct EnergyIdentity {
  std::vector<double> times;
  std::vector<double> energy;
  std::vector<double> dissipation;
  std::vector<double> residual; ///< energy + dissipation - energy(0)
};

/// First-order law: E = (||u_t||^2 + ||d_r u||^2)/2, dissipation int ||u_t||_{p+1}^{p+1}.
EnergyIdentity energy_identity_first(std::span<const CharState> traj);
/// Second-order law for the time derivative: E = (||u_tt||^2 + ||grad u_t||^2)/2,
/// dissipation p int || |u_t|^{(p-1)/2} u_tt ||^2.
EnergyIdentity energy_identity_second(std::span<const CharState> traj);

struct StrichartzSeries {
  std::vector<double> times;
  std::vector<double> n1; ///< sqrt(int sup|d_r u|^2 + sup|u_t|^2)
  std::vector<double> n2; ///< sqrt(int of the four second-order proxies squared)
};

StrichartzSeries strichartz_accumulators(std::span<const CharState> traj);

} // namespace radwave
