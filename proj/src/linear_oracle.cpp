#include "radwave/linear_oracle.hpp"

#include <algorithm>
#include <cmath>

#include "radwave/field_ops.hpp"

namespace radwave {

OddProfilePair::OddProfilePair(const DataFamily& f0, const DataFamily& f1) : u0_(f0), u1_(f1) {}

// phi odd: phi' even, phi'' odd. psi odd: psi' even. Psi even.
double OddProfilePair::phi(double s) const { return s * u0_.value(std::fabs(s)); }
double OddProfilePair::phi_d1(double s) const { return u0_.rf_d1(std::fabs(s)); }
double OddProfilePair::phi_d2(double s) const {
  const double v = u0_.rf_d2(std::fabs(s));
  return s < 0.0 ? -v : v;
}
double OddProfilePair::psi(double s) const { return s * u1_.value(std::fabs(s)); }
double OddProfilePair::psi_d1(double s) const { return u1_.rf_d1(std::fabs(s)); }
double OddProfilePair::Psi(double s) const { return u1_.rf_integral(std::fabs(s)); }

double dalembert_w(const OddProfilePair& o, double r, double t) {
  return 0.5 * (o.phi(r + t) + o.phi(r - t)) + 0.5 * (o.Psi(r + t) - o.Psi(r - t));
}

double dalembert_w_r(const OddProfilePair& o, double r, double t) {
  return 0.5 * (o.phi_d1(r + t) + o.phi_d1(r - t)) + 0.5 * (o.psi(r + t) - o.psi(r - t));
}

InitialCharFields linear_initial_char(const OddProfilePair& o) {
  return {[o](double s) { return o.phi_d2(s) + o.psi_d1(s); },
          [o](double s) { return o.phi_d2(s) - o.psi_d1(s); }};
}

namespace {

double interpolate(const Field& f, double r) {
  const auto& g = f.grid;
  if (r < 0.0 || r > g.r_max()) return 0.0;
  const double x = r / g.dr();
  const auto i = std::min(static_cast<std::size_t>(x), g.size() - 2);
  const double frac = x - static_cast<double>(i);
  if (frac == 0.0) return f[i];
  return (1.0 - frac) * f[i] + frac * f[i + 1];
}

} // namespace

InitialCharFields sampled_initial_char(const Field& xp0, const Field& xm0) {
  return {[xp0](double s) { return interpolate(xp0, s); }, [xm0](double s) { return interpolate(xm0, s); }};
}

CharValues dalembert_char(const InitialCharFields& x0, double r, double t) {
  const double xp = x0.xp(r + t);
  const double foot = r - t;
  const double xm = foot >= 0.0 ? x0.xm(foot) : -x0.xp(-foot);
  return {xp, xm};
}

namespace {

OracleErrorRow error_row(double t, const Field& w, const OddProfilePair& o) {
  Field err(w.grid);
  for (std::size_t i = 0; i < w.size(); ++i) err[i] = w[i] - dalembert_w(o, w.grid.r(i), t);
  std::vector<double> sq(err.size());
  for (std::size_t i = 0; i < err.size(); ++i) sq[i] = err[i] * err[i];
  return {t, sup_norm(err), std::sqrt(trapezoid(sq, w.grid.dr()))};
}

} // namespace

std::vector<OracleErrorRow> oracle_error(std::span<const CharState> traj, const OddProfilePair& o) {
  std::vector<OracleErrorRow> rows;
  rows.reserve(traj.size());
  for (const auto& s : traj) rows.push_back(error_row(s.t, s.w, o));
  return rows;
}

std::vector<OracleErrorRow> oracle_error(std::span<const WaveState> traj, const OddProfilePair& o) {
  std::vector<OracleErrorRow> rows;
  rows.reserve(traj.size());
  for (const auto& s : traj) rows.push_back(error_row(s.t, s.w_curr, o));
  return rows;
}

} // namespace radwave
