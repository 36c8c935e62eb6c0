#include "radwave/initial_data.hpp"

#include <algorithm>
#include <cmath>

#include "radwave/error.hpp"
#include "radwave/field_ops.hpp"

namespace radwave {

std::string to_string(Shape s) { return s == Shape::Bump ? "bump" : "ring"; }

Shape shape_from_string(const std::string& s) {
  if (s == "bump") return Shape::Bump;
  if (s == "ring") return Shape::Ring;
  throw ValidationError("unknown profile shape '" + s + "' (expected bump or ring)");
}

void DataFamily::validate() const {
  if (!std::isfinite(amplitude)) throw ValidationError("data family: amplitude must be finite");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw ValidationError("data family: radius must be positive");
  if (smoothness < 4) throw ValidationError("data family: smoothness m must be >= 4");
}

namespace {

Polynomial family_polynomial(const DataFamily& f) {
  const int m = f.smoothness;
  const double inv_r2 = 1.0 / (f.radius * f.radius);
  std::vector<double> c(static_cast<std::size_t>(2 * m + 1), 0.0);
  double binom = 1.0;
  double pw = 1.0;
  for (int j = 0; j <= m; ++j) {
    c[static_cast<std::size_t>(2 * j)] = f.amplitude * binom * pw;
    binom = binom * (m - j) / (j + 1);
    pw *= -inv_r2;
  }
  Polynomial p(std::move(c));
  if (f.shape == Shape::Ring) p = inv_r2 * p.shifted_up(2);
  return p;
}

} // namespace

Profile::Profile(const DataFamily& f) : radius_(f.radius) {
  f.validate();
  f_ = family_polynomial(f);
  f1_ = f_.derivative();
  f2_ = f1_.derivative();
  f3_ = f2_.derivative();
  lap_ = f2_ + 2.0 * f1_.divided_by_x();
  lap1_ = lap_.derivative();
  const Polynomial rf = f_.shifted_up(1);
  rf1_ = rf.derivative();
  rf2_ = rf1_.derivative();
  rf_int_ = rf.antiderivative();
}

CauchyData sample_data(const DataFamily& f0, const DataFamily& f1, const RadialGrid& g) {
  const Profile p0(f0), p1(f1);
  CauchyData d;
  d.f0 = f0;
  d.f1 = f1;
  d.support_radius = std::max(f0.radius, f1.radius);
  if (!(d.support_radius < g.r_max()))
    throw DomainTooSmall("initial data support " + std::to_string(d.support_radius) +
                         " does not fit inside r_max = " + std::to_string(g.r_max()));
  d.u0 = Field::sample(g, [&](double r) { return p0.value(r); });
  d.u1 = Field::sample(g, [&](double r) { return p1.value(r); });
  return d;
}

double initial_xp(const Profile& u0, const Profile& u1, const Equation& eq, double r) {
  const double damping = eq.damped ? signed_pow(u1.value(r), eq.p) : 0.0;
  return r * (u0.laplacian(r) - damping) + u1.rf_d1(r);
}

double initial_xm(const Profile& u0, const Profile& u1, const Equation& eq, double r) {
  const double damping = eq.damped ? signed_pow(u1.value(r), eq.p) : 0.0;
  return r * (u0.laplacian(r) - damping) - u1.rf_d1(r);
}

CharState initial_char_state(const CauchyData& d, const Equation& eq, const RadialGrid& g) {
  if (eq.damped && !(eq.p >= 3.0)) throw ValidationError("exponent p must be >= 3");
  if (!(d.u0.grid == g)) throw ValidationError("initial_char_state: data sampled on a different grid");
  const Profile p0(d.f0), p1(d.f1);
  CharState s;
  s.eq = eq;
  s.w = Field::sample(g, [&](double r) { return r * p0.value(r); });
  s.y = Field::sample(g, [&](double r) { return r * p1.value(r); });
  s.xp = Field::sample(g, [&](double r) { return initial_xp(p0, p1, eq, r); });
  s.xm = Field::sample(g, [&](double r) { return initial_xm(p0, p1, eq, r); });
  if (!s.finite()) throw ValidationError("initial characteristic fields are not finite");
  return s;
}

namespace {

double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

DataFamily draw_family(std::mt19937_64& rng, double amp_max, const RandomDataRanges& box) {
  DataFamily f;
  f.shape = (rng() & 1u) ? Shape::Ring : Shape::Bump;
  f.amplitude = amp_max * (2.0 * unit_uniform(rng) - 1.0);
  f.radius = box.radius_min + (box.radius_max - box.radius_min) * unit_uniform(rng);
  f.smoothness = box.m_min + static_cast<int>(rng() % static_cast<std::uint64_t>(box.m_max - box.m_min + 1));
  return f;
}

} // namespace

std::pair<DataFamily, DataFamily> random_families(std::uint64_t seed, const RandomDataRanges& box) {
  std::mt19937_64 rng(seed);
  DataFamily f0 = draw_family(rng, box.amp0_max, box);
  DataFamily f1 = draw_family(rng, box.amp1_max, box);
  return {f0, f1};
}

} // namespace radwave
