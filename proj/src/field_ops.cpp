#include "radwave/field_ops.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numbers>
#include <string>

#include "radwave/diagnostics.hpp"
#include "radwave/error.hpp"

namespace radwave {

double trapezoid(std::span<const double> v, double h) {
  if (v.size() < 2) return 0.0;
  double s = 0.5 * (v.front() + v.back());
  for (std::size_t i = 1; i + 1 < v.size(); ++i) s += v[i];
  return s * h;
}

Field ddr(const Field& f) {
  const std::size_t n = f.size();
  const double inv2h = 0.5 / f.grid.dr();
  Field out(f.grid);
  const auto& v = f.values;
  out[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) * inv2h;
  for (std::size_t i = 1; i + 1 < n; ++i) out[i] = (v[i + 1] - v[i - 1]) * inv2h;
  out[n - 1] = (3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]) * inv2h;
  return out;
}

double lq_norm_3d(const Field& f, double q) {
  if (!(q >= 1.0) || !std::isfinite(q)) throw ValidationError("lq_norm_3d: q must be finite and >= 1");
  const double scale = sup_norm(f);
  if (scale == 0.0) return 0.0;
  std::vector<double> integrand(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double r = f.grid.r(i);
    integrand[i] = abs_pow(f[i] / scale, q) * r * r;
  }
  const double integral = 4.0 * std::numbers::pi * trapezoid(integrand, f.grid.dr());
  return scale * std::pow(integral, 1.0 / q);
}

double sup_norm(const Field& f) {
  double m = 0.0;
  const std::size_t end = active_end(f.values);
  for (std::size_t i = 0; i < end; ++i) m = std::max(m, std::fabs(f.values[i]));
  return m;
}

namespace {

double pow_int(double x, int k) {
  double result = 1.0;
  for (;;) {
    if (k & 1) result *= x;
    k >>= 1;
    if (k == 0) return result;
    x *= x;
  }
}

} // namespace

std::vector<double> half_line_l2k(const Field& f, std::span<const int> ks) {
  for (int k : ks)
    if (k < 1) throw ValidationError("half_line_l2k: k must be >= 1, got " + std::to_string(k));
  std::vector<double> out(ks.size(), 0.0);
  const double scale = sup_norm(f);
  if (scale == 0.0 || f.size() < 2) return out;
  const double inv = 1.0 / scale;
  const std::size_t n = f.size();
  const auto& v = f.values;
  // trailing zeros contribute nothing
  const std::size_t end = std::max<std::size_t>(active_end(v), 1);
  std::vector<double> sums(ks.size(), 0.0);

  // orders 1, 2, 4, ... 2^(L-1) share one chain of squarings
  bool dyadic = true;
  int levels = 0;
  for (int k : ks) {
    if ((k & (k - 1)) != 0 || k > 64) dyadic = false;
    else levels = std::max(levels, std::countr_zero(static_cast<unsigned>(k)) + 1);
  }
  if (dyadic) {
    std::array<double, 7> acc{};
    auto add = [&](double x, double weight) {
      double pw = (x * inv) * (x * inv);
      for (int l = 0; l < levels; ++l) {
        acc[l] += weight * pw;
        pw *= pw;
      }
    };
    add(v[0], 0.5);
    add(v[n - 1], 0.5);
    for (std::size_t i = 1; i < std::min(end, n - 1); ++i) add(v[i], 1.0);
    for (std::size_t j = 0; j < ks.size(); ++j) sums[j] = acc[std::countr_zero(static_cast<unsigned>(ks[j]))];
  } else {
    auto add = [&](double x, double weight) {
      const double s2 = (x * inv) * (x * inv);
      for (std::size_t j = 0; j < ks.size(); ++j) sums[j] += weight * pow_int(s2, ks[j]);
    };
    add(v[0], 0.5);
    add(v[n - 1], 0.5);
    for (std::size_t i = 1; i < std::min(end, n - 1); ++i) add(v[i], 1.0);
  }
  for (std::size_t j = 0; j < ks.size(); ++j)
    out[j] = scale * std::pow(sums[j] * f.grid.dr(), 1.0 / (2.0 * ks[j]));
  return out;
}

double half_line_l2k(const Field& f, int k) {
  const int ks[1] = {k};
  return half_line_l2k(f, ks).front();
}

Field radial_laplacian(const Field& u) {
  const std::size_t n = u.size();
  const double h = u.grid.dr();
  const double inv_h2 = 1.0 / (h * h);
  const auto& v = u.values;
  Field out(u.grid);
  // even reflection u(-h) = u(h): u''(0) = 2 (u1 - u0) / h^2
  out[0] = 6.0 * (v[1] - v[0]) * inv_h2;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double r = u.grid.r(i);
    const double urr = (v[i + 1] - 2.0 * v[i] + v[i - 1]) * inv_h2;
    const double ur = (v[i + 1] - v[i - 1]) * (0.5 / h);
    out[i] = urr + 2.0 * ur / r;
  }
  if (n >= 4) {
    const double urr = (2.0 * v[n - 1] - 5.0 * v[n - 2] + 4.0 * v[n - 3] - v[n - 4]) * inv_h2;
    const double ur = (3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]) * (0.5 / h);
    out[n - 1] = urr + 2.0 * ur / u.grid.r(n - 1);
  } else {
    out[n - 1] = out[n - 2];
  }
  return out;
}

Field regular_quotient(const Field& num) {
  Field out(num.grid);
  const auto& v = num.values;
  out[0] = (8.0 * v[1] - v[2]) / (6.0 * num.grid.dr());
  for (std::size_t i = 1; i < num.size(); ++i) out[i] = v[i] / num.grid.r(i);
  return out;
}

bool support_touches_boundary(const Field& f) {
  const std::size_t tail = std::min<std::size_t>(4, f.size());
  for (std::size_t i = f.size() - tail; i < f.size(); ++i)
    if (f[i] != 0.0) return true;
  return false;
}

double sobolev_seminorm(const Field& u, int order) {
  if (order < 1 || order > 3)
    throw ValidationError("sobolev_seminorm: order must be 1, 2 or 3, got " + std::to_string(order));
  if (support_touches_boundary(u))
    warn("sobolev_seminorm: support reaches the outer boundary; radial seminorm identity is not valid");
  switch (order) {
  case 1: return lq_norm_3d(ddr(u), 2.0);
  case 2: return lq_norm_3d(radial_laplacian(u), 2.0);
  default: return lq_norm_3d(ddr(radial_laplacian(u)), 2.0);
  }
}

} // namespace radwave
