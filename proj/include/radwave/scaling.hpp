#pragma once

#include "radwave/grid.hpp"

namespace radwave {

/// k_c = 3/2 + (p - 2)/(p - 1), the scale-invariant Sobolev index.
double critical_index(double p);

/// Exponent of lambda in ||u_lambda||_{H^k} = lambda^e ||u||_{H^k}:
/// e = (2 - p)/(p - 1) + k - 3/2.
double scaling_exponent(double p, int k);

/// u_lambda(r) = lambda^((2-p)/(p-1)) u(lambda r) sampled on `target` by
/// four-point cubic interpolation of u (even reflection at the origin).
/// Throws OutOfDomain when lambda * target.r_max() exceeds the source grid.
Field rescale(const Field& u, double lambda, double p, const RadialGrid& target);

/// The grid whose nodes map onto the source nodes under r -> lambda r.
RadialGrid scaled_grid(const RadialGrid& g, double lambda);

struct ScalingReport {
  double lambda;
  int k;
  double exponent;
  double lhs; ///< ||u_lambda||_{H^k}
  double rhs; ///< lambda^exponent ||u||_{H^k}
  double residual;
};

/// Compares both sides of the scaling law with u_lambda sampled on
/// scaled_grid(u.grid, lambda).
ScalingReport verify_scaling(const Field& u, double lambda, double p, int k);
/// Same, with u_lambda resampled onto an arbitrary target grid.
ScalingReport verify_scaling(const Field& u, double lambda, double p, int k, const RadialGrid& target);

} // namespace radwave
