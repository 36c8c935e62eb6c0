#pragma once

#include "radwave/grid.hpp"
#include "radwave/initial_data.hpp"
#include "radwave/state.hpp"

namespace radwave {

/// Step-size policy: dt = min(courant * dr, safety / (p max|u_t|^(p-1))).
struct StepPolicy {
  double courant = 1.0;
  double safety = 0.5;
  double dt_floor = 1e-9;

  void validate() const;
};

/// Velocity above which a state counts as blown up.
inline constexpr double kBlowUpVelocity = 1e8;

/// u_t = y / r, with the origin value (xp(0) - xm(0)) / 2 = d_r y(0).
Field u_t_field(const CharState& s);

/// Throws StiffnessCollapse when the nonlinear ceiling drops below the floor.
double nonlinear_cfl_dt(const CharState& s, const StepPolicy& pol, const RadialGrid& g);

/// One step of the characteristic scheme.
///
/// X+ = (d_t + d_r) y travels toward the origin and X- = (d_t - d_r) y away
/// from it, both coupled through -(p/2)|u_t|^(p-1) (X+ + X-). The source is
/// integrated by the trapezoid rule along each characteristic: an explicit
/// half step at the foot, upwind transport (linear interpolation, exact at
/// unit Courant number), then an implicit half step at the arrival node.
/// Each stage is a convex combination of (X+, -X-) pairs, so
/// max(sup|X+|, sup|X-|) cannot grow. At r = 0 the outgoing field is the
/// reflection X-(0) = -X+(0); at r_max the incoming X+ is zero.
/// y advances by a quadrature of y_t = (X+ + X-)/2 that keeps
/// d_r y = (X+ - X-)/2 on the grid at any Courant number; w by the trapezoid rule.
CharState char_step(const CharState& s, double dt, const RadialGrid& g);

/// Leapfrog start: w(0) and the Taylor value w(dt) through third order.
WaveState leapfrog_start(const CauchyData& d, const Equation& eq, const RadialGrid& g, double dt);

/// w_next = 2 w - w_prev + dt^2 (w_rr - r Phi(w_t / r)) with the centered
/// w_t = (w_next - w_prev) / (2 dt); the damping is solved node by node.
WaveState leapfrog_step(const WaveState& s, double dt, const RadialGrid& g);

} // namespace radwave
