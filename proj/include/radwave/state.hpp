#pragma once

#include "radwave/grid.hpp"

namespace radwave {

/// Nonlinearity switch. `damped = false` drops the |u_t|^(p-1) u_t term
/// and evolves the linear radial wave equation.
struct Equation {
  double p = 3.0;
  bool damped = true;

  friend bool operator==(const Equation&, const Equation&) = default;
};

/// Full state of the characteristic solver at time t:
/// w = r u, y = r u_t, xp = (d_t + d_r) y, xm = (d_t - d_r) y.
struct CharState {
  double t = 0.0;
  Field w, y, xp, xm;
  Equation eq;

  const RadialGrid& grid() const { return w.grid; }
  bool finite() const { return w.all_finite() && y.all_finite() && xp.all_finite() && xm.all_finite(); }
};

/// Two time levels of w = r u for the leapfrog cross-check.
struct WaveState {
  double t = 0.0;
  Field w_prev, w_curr;
  Equation eq;

  const RadialGrid& grid() const { return w_curr.grid; }
};

} // namespace radwave
