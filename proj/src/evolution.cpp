#include "radwave/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "radwave/error.hpp"
#include "radwave/field_ops.hpp"

namespace radwave {

void StepPolicy::validate() const {
  if (!(courant > 0.0 && courant <= 1.0)) throw ValidationError("courant must lie in (0, 1]");
  if (!(safety > 0.0 && safety < 1.0)) throw ValidationError("safety must lie in (0, 1)");
  if (!(dt_floor > 0.0)) throw ValidationError("dt_floor must be positive");
}

Field u_t_field(const CharState& s) {
  Field ut(s.grid());
  ut[0] = 0.5 * (s.xp[0] - s.xm[0]);
  const std::size_t end = active_end(s.y.values);
  for (std::size_t i = 1; i < end; ++i) ut[i] = s.y[i] / s.grid().r(i);
  return ut;
}

double nonlinear_cfl_dt(const CharState& s, const StepPolicy& pol, const RadialGrid& g) {
  double dt = pol.courant * g.dr();
  if (s.eq.damped) {
    const double vmax = sup_norm(u_t_field(s));
    const double rate = s.eq.p * abs_pow(vmax, s.eq.p - 1.0);
    if (rate > 0.0) dt = std::min(dt, pol.safety / rate);
  }
  if (!(dt >= pol.dt_floor))
    throw StiffnessCollapse("required step " + std::to_string(dt) + " is below dt_floor " +
                                std::to_string(pol.dt_floor) + " at t = " + std::to_string(s.t),
                            s.t);
  return dt;
}

namespace {

[[noreturn]] void blow_up(const char* what, double t) {
  throw BlowUpDetected(std::string(what) + " at t = " + std::to_string(t), t);
}

} // namespace

namespace {

struct PowGeneral {
  double e;
  double operator()(double v) const { return std::pow(std::fabs(v), e); }
};
struct PowSquare {
  double operator()(double v) const { return v * v; }
};
struct PowFourth {
  double operator()(double v) const { return (v * v) * (v * v); }
};
struct PowSixth {
  double operator()(double v) const { return (v * v) * (v * v) * (v * v); }
};
struct PowZero {
  double operator()(double) const { return 1.0; }
};

// Fills out from s; coef = 0 switches the source off.
template <class Pow>
void char_kernel(const CharState& s, double dt, const RadialGrid& g, double coef, Pow pw, CharState& out) {
  const std::size_t n = g.size();
  const double h = g.dr();
  const double c = dt / h;
  const double keep = 1.0 - c;
  const double* xp = s.xp.values.data();
  const double* xm = s.xm.values.data();
  const double* y = s.y.values.data();
  const double* w = s.w.values.data();
  // beyond one node past the last nonzero input the step maps zeros to zeros
  const std::size_t front = std::max({active_end(s.xp.values), active_end(s.xm.values), active_end(s.y.values),
                                      active_end(s.w.values), std::size_t{2}});
  const std::size_t m_end = std::min(front + 1, n);
  std::vector<double> mu(m_end), pp(m_end), qp(m_end);

  // explicit half step at the old time level
  {
    const double ut0 = 0.5 * (xp[0] - xm[0]);
    mu[0] = coef > 0.0 ? coef * pw(ut0) : 0.0;
  }
  for (std::size_t i = 1; i < m_end; ++i) mu[i] = coef > 0.0 ? coef * pw(y[i] / g.r(i)) : 0.0;
  for (std::size_t i = 0; i < m_end; ++i) {
    const double half = 0.5 * mu[i] * (xp[i] + xm[i]);
    pp[i] = xp[i] - half;
    qp[i] = xm[i] - half;
  }

  double* nxp = out.xp.values.data();
  double* nxm = out.xm.values.data();
  double* ny = out.y.values.data();
  double* nw = out.w.values.data();
  const double q = 0.25 * dt;

  // y advances by the mean of the half-stepped X+ over [r_i, r_i+1] and X-
  // over [r_i-1, r_i]; with symmetric sources this keeps d_r y = (X+ - X-)/2
  // discretely, for any Courant number. The new u_t then sets the implicit
  // half step exactly.
  auto finish = [&](std::size_t i, double a, double b, double r, double p_right, double q_left) {
    ny[i] = y[i] + q * (pp[i] + p_right + qp[i] + q_left);
    nw[i] = w[i] + 0.5 * dt * (y[i] + ny[i]);
    const double m = coef > 0.0 ? coef * pw(i == 0 ? 0.5 * (a - b) : ny[i] / r) : 0.0;
    const double s_new = (a + b) / (1.0 + m);
    nxp[i] = a - 0.5 * m * s_new;
    nxm[i] = b - 0.5 * m * s_new;
  };
  // ghost values: odd reflection at 0, zero inflow at r_max
  finish(0, keep * pp[0] + c * pp[1], keep * qp[0] - c * pp[1], 0.0, pp[1], -pp[1]);
  for (std::size_t i = 1; i + 1 < m_end; ++i)
    finish(i, keep * pp[i] + c * pp[i + 1], keep * qp[i] + c * qp[i - 1], static_cast<double>(i) * h, pp[i + 1],
           qp[i - 1]);
  const std::size_t last = m_end - 1;
  finish(last, keep * pp[last], keep * qp[last] + c * qp[last - 1], m_end == n ? g.r_max() : static_cast<double>(last) * h,
         0.0, qp[last - 1]);
}

} // namespace

CharState char_step(const CharState& s, double dt, const RadialGrid& g) {
  if (!(s.grid() == g)) throw ValidationError("char_step: state lives on a different grid");
  if (!(dt > 0.0)) throw ValidationError("char_step: dt must be positive");
  const std::size_t n = g.size();
  const double coef = s.eq.damped ? 0.5 * dt * s.eq.p : 0.0;
  const double e = s.eq.p - 1.0;

  CharState out;
  out.eq = s.eq;
  out.t = s.t + dt;
  out.xp = Field(g);
  out.xm = Field(g);
  out.y = Field(g);
  out.w = Field(g);
  if (e == 2.0) char_kernel(s, dt, g, coef, PowSquare{}, out);
  else if (e == 4.0) char_kernel(s, dt, g, coef, PowFourth{}, out);
  else if (e == 6.0) char_kernel(s, dt, g, coef, PowSixth{}, out);
  else if (e == 0.0) char_kernel(s, dt, g, coef, PowZero{}, out);
  else char_kernel(s, dt, g, coef, PowGeneral{e}, out);

  auto& nxp = out.xp.values;
  auto& nxm = out.xm.values;
  auto& ny = out.y.values;
  auto& nw = out.w.values;
  nxm[0] = -nxp[0];
  ny[0] = 0.0;
  nw[0] = 0.0;

  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(nxp[i]) || !std::isfinite(nxm[i]) || !std::isfinite(ny[i]) || !std::isfinite(nw[i]))
      blow_up("non-finite characteristic field", out.t);
  }
  if (std::fabs(0.5 * (nxp[0] - nxm[0])) > kBlowUpVelocity) blow_up("u_t exceeded blow-up threshold", out.t);
  for (std::size_t i = 1; i < n; ++i)
    if (std::fabs(ny[i]) > kBlowUpVelocity * g.r(i)) blow_up("u_t exceeded blow-up threshold", out.t);
  return out;
}

WaveState leapfrog_start(const CauchyData& d, const Equation& eq, const RadialGrid& g, double dt) {
  if (!(d.u0.grid == g)) throw ValidationError("leapfrog_start: data sampled on a different grid");
  const Profile p0(d.f0), p1(d.f1);
  WaveState s;
  s.eq = eq;
  s.t = dt;
  s.w_prev = Field::sample(g, [&](double r) { return r * p0.value(r); });
  s.w_curr = Field::sample(g, [&](double r) {
    const double v = p1.value(r);
    const double phi = eq.damped ? signed_pow(v, eq.p) : 0.0;
    const double dphi = eq.damped ? eq.p * abs_pow(v, eq.p - 1.0) : 0.0;
    const double w_t = r * v;
    const double w_tt = r * (p0.laplacian(r) - phi);
    // w_ttt = (r u1)'' - p |u1|^(p-1) r u_tt
    const double w_ttt = p1.rf_d2(r) - dphi * w_tt;
    return r * p0.value(r) + dt * w_t + 0.5 * dt * dt * w_tt + dt * dt * dt / 6.0 * w_ttt;
  });
  s.w_curr[0] = 0.0;
  s.w_curr[g.size() - 1] = 0.0;
  return s;
}

namespace {

// Solves z + kappa * Phi((z - wp) / scale) = target for z, Phi(s) = sign(s)|s|^p.
// The left side is increasing in z, so the root is bracketed by target and wp.
double solve_damped_node(double target, double wp, double kappa, double scale, double p) {
  auto g = [&](double z) { return z - target + kappa * signed_pow((z - wp) / scale, p); };
  double lo = std::min(target, wp), hi = std::max(target, wp);
  if (lo == hi) return lo;
  double z = target;
  for (int it = 0; it < 100; ++it) {
    const double gz = g(z);
    if (gz == 0.0) return z;
    if (gz > 0.0) hi = z; else lo = z;
    const double dg = 1.0 + kappa * p * abs_pow((z - wp) / scale, p - 1.0) / scale;
    double next = z - gz / dg;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::fabs(next - z) <= 1e-15 * std::max(1.0, std::fabs(z))) return next;
    z = next;
  }
  return z;
}

} // namespace

WaveState leapfrog_step(const WaveState& s, double dt, const RadialGrid& g) {
  if (!(s.grid() == g)) throw ValidationError("leapfrog_step: state lives on a different grid");
  const std::size_t n = g.size();
  const double h = g.dr();
  const double c2 = (dt * dt) / (h * h);
  const auto& w = s.w_curr.values;
  const auto& wp = s.w_prev.values;
  WaveState out;
  out.eq = s.eq;
  out.t = s.t + dt;
  out.w_prev = s.w_curr;
  out.w_curr = Field(g);
  auto& wn = out.w_curr.values;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double target = 2.0 * w[i] - wp[i] + c2 * (w[i + 1] - 2.0 * w[i] + w[i - 1]);
    if (s.eq.damped) {
      const double r = g.r(i);
      wn[i] = solve_damped_node(target, wp[i], dt * dt * r, 2.0 * dt * r, s.eq.p);
    } else {
      wn[i] = target;
    }
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!std::isfinite(wn[i])) blow_up("non-finite leapfrog field", out.t);
    if (std::fabs(wn[i] - wp[i]) > 2.0 * dt * g.r(i) * kBlowUpVelocity)
      blow_up("u_t exceeded blow-up threshold", out.t);
  }
  return out;
}

} // namespace radwave
