#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "radwave/grid.hpp"

namespace radwave {

/// sign(s) |s|^p, the odd extension used for the damping term.
inline double signed_pow(double s, double p) {
  const double a = std::fabs(s);
  const double m = (p == 3.0) ? a * a * a : std::pow(a, p);
  return s < 0.0 ? -m : m;
}

/// |s|^e with exact fast paths for small integer exponents.
inline double abs_pow(double s, double e) {
  const double a = std::fabs(s);
  if (e == 0.0) return 1.0;
  if (e == 2.0) return a * a;
  if (e == 4.0) return (a * a) * (a * a);
  if (e == 6.0) return (a * a) * (a * a) * (a * a);
  return std::pow(a, e);
}

/// One past the last nonzero sample (0 for an all-zero span).
inline std::size_t active_end(std::span<const double> v) {
  std::size_t k = v.size();
  while (k > 0 && v[k - 1] == 0.0) --k;
  return k;
}

/// Composite trapezoid rule for samples with uniform spacing h.
double trapezoid(std::span<const double> values, double h);

/// d/dr: centered in the interior, second-order one-sided at both ends.
Field ddr(const Field& f);

/// (4 pi int_0^rmax |f|^q r^2 dr)^(1/q), trapezoid quadrature.
double lq_norm_3d(const Field& f, double q);

double sup_norm(const Field& f);

/// (int_0^rmax f^(2k) dr)^(1/(2k)) with the flat half-line measure.
double half_line_l2k(const Field& f, int k);
/// Same for several orders in one pass.
std::vector<double> half_line_l2k(const Field& f, std::span<const int> ks);

/// u'' + (2/r) u' in the interior; 3 u''(0) at the origin (even reflection).
Field radial_laplacian(const Field& u);

/// num(r) / r with the origin value replaced by the limit num'(0).
/// Intended for odd fields that vanish linearly at r = 0.
Field regular_quotient(const Field& num);

/// Radial Sobolev seminorms: order 1 -> ||grad u||, 2 -> ||Lap u||,
/// 3 -> ||grad Lap u||, all 3D-weighted L2.
double sobolev_seminorm(const Field& u, int order);

/// True when any of the last few samples is nonzero.
bool support_touches_boundary(const Field& f);

} // namespace radwave
