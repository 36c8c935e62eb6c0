#include "radwave/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "radwave/error.hpp"
#include "radwave/field_ops.hpp"

namespace radwave {

double critical_index(double p) {
  if (!(p > 1.0)) throw ValidationError("critical_index: p must exceed 1");
  return 1.5 + (p - 2.0) / (p - 1.0);
}

double scaling_exponent(double p, int k) { return (2.0 - p) / (p - 1.0) + k - 1.5; }

namespace {

double node_value(const Field& u, long i) {
  const long n = static_cast<long>(u.size());
  if (i < 0) i = -i;
  if (i >= n) return u[static_cast<std::size_t>(n - 1)];
  return u[static_cast<std::size_t>(i)];
}

double cubic_at(const Field& u, double r) {
  const double x = r / u.grid.dr();
  const double nearest = std::round(x);
  if (std::fabs(x - nearest) < 1e-9) return node_value(u, static_cast<long>(nearest));
  const double fl = std::floor(x);
  const double frac = x - fl;
  const auto i = static_cast<long>(fl);
  if (frac == 0.0) return node_value(u, i);
  const double f0 = node_value(u, i - 1), f1 = node_value(u, i), f2 = node_value(u, i + 1),
               f3 = node_value(u, i + 2);
  // Lagrange weights on nodes -1, 0, 1, 2
  const double s = frac;
  const double w0 = -s * (s - 1.0) * (s - 2.0) / 6.0;
  const double w1 = (s + 1.0) * (s - 1.0) * (s - 2.0) / 2.0;
  const double w2 = -(s + 1.0) * s * (s - 2.0) / 2.0;
  const double w3 = (s + 1.0) * s * (s - 1.0) / 6.0;
  return w0 * f0 + w1 * f1 + w2 * f2 + w3 * f3;
}

} // namespace

RadialGrid scaled_grid(const RadialGrid& g, double lambda) {
  if (!(lambda > 0.0)) throw ValidationError("scaled_grid: lambda must be positive");
  return make_grid(g.r_max() / lambda, g.size());
}

Field rescale(const Field& u, double lambda, double p, const RadialGrid& target) {
  if (!(lambda > 0.0)) throw ValidationError("rescale: lambda must be positive");
  const double reach = lambda * target.r_max();
  if (reach > u.grid.r_max() * (1.0 + 1e-12))
    throw OutOfDomain("rescale: lambda * r_max' = " + std::to_string(reach) + " exceeds source r_max = " +
                      std::to_string(u.grid.r_max()));
  const double amp = std::pow(lambda, (2.0 - p) / (p - 1.0));
  Field out(target);
  for (std::size_t i = 0; i < target.size(); ++i) {
    const double src = std::min(lambda * target.r(i), u.grid.r_max());
    out[i] = amp * cubic_at(u, src);
  }
  return out;
}

ScalingReport verify_scaling(const Field& u, double lambda, double p, int k, const RadialGrid& target) {
  const Field scaled = rescale(u, lambda, p, target);
  ScalingReport rep{lambda, k, scaling_exponent(p, k), 0.0, 0.0, 0.0};
  rep.lhs = sobolev_seminorm(scaled, k);
  rep.rhs = std::pow(lambda, rep.exponent) * sobolev_seminorm(u, k);
  rep.residual = rep.rhs == 0.0 ? std::fabs(rep.lhs) : std::fabs(rep.lhs - rep.rhs) / rep.rhs;
  return rep;
}

ScalingReport verify_scaling(const Field& u, double lambda, double p, int k) {
  return verify_scaling(u, lambda, p, k, scaled_grid(u.grid, lambda));
}

} // namespace radwave
