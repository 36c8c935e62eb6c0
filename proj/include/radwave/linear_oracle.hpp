#pragma once

#include <functional>
#include <span>
#include <vector>

#include "radwave/grid.hpp"
#include "radwave/initial_data.hpp"
#include "radwave/state.hpp"

namespace radwave {

/// Odd extensions phi(s) = s u0(|s|), psi(s) = s u1(|s|) and the even
/// antiderivative Psi(s) = int_0^s psi, all in closed form.
class OddProfilePair {
public:
  OddProfilePair(const DataFamily& f0, const DataFamily& f1);

  double phi(double s) const;
  double phi_d1(double s) const;
  double phi_d2(double s) const;
  double psi(double s) const;
  double psi_d1(double s) const;
  double Psi(double s) const;

private:
  Profile u0_, u1_;
};

/// Linear solution w = r u by d'Alembert's formula on the odd extension.
double dalembert_w(const OddProfilePair& o, double r, double t);
/// d/dr of dalembert_w; equals u(0, t) at r = 0.
double dalembert_w_r(const OddProfilePair& o, double r, double t);

/// Initial characteristic fields on r >= 0.
struct InitialCharFields {
  std::function<double(double)> xp;
  std::function<double(double)> xm;
};

/// X_pm(r, 0) = phi'' +- psi' of the linear problem.
InitialCharFields linear_initial_char(const OddProfilePair& o);

/// Grid samples of X_pm(., 0), read by linear interpolation.
InitialCharFields sampled_initial_char(const Field& xp0, const Field& xm0);

struct CharValues {
  double xp;
  double xm;
};

/// X+ travels inward, X+(r, t) = X+0(r + t); X- travels outward,
/// X-(r, t) = X-0(r - t), continued for negative arguments by X-0(s) = -X+0(-s).
CharValues dalembert_char(const InitialCharFields& x0, double r, double t);

struct OracleErrorRow {
  double t;
  double sup_error;
  double l2_error;
};

/// Sup and flat L2 errors of w against dalembert_w at each snapshot.
std::vector<OracleErrorRow> oracle_error(std::span<const CharState> traj, const OddProfilePair& o);
std::vector<OracleErrorRow> oracle_error(std::span<const WaveState> traj, const OddProfilePair& o);

} // namespace radwave
