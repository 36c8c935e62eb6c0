#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>

#include "radwave/grid.hpp"
#include "radwave/polynomial.hpp"
#include "radwave/state.hpp"

namespace radwave {

enum class Shape { Bump, Ring };

std::string to_string(Shape s);
Shape shape_from_string(const std::string& s);

/// Compactly supported radial profile
///   bump: a (1 - (r/R)^2)^m,  ring: a (r/R)^2 (1 - (r/R)^2)^m,  zero for r >= R.
/// The profile is C^(m-1) across r = R.
struct DataFamily {
  Shape shape = Shape::Bump;
  double amplitude = 0.0;
  double radius = 1.0;
  int smoothness = 6;

  void validate() const;
  friend bool operator==(const DataFamily&, const DataFamily&) = default;
};

/// Closed-form evaluator for one DataFamily. Every derivative is an exact
/// polynomial inside the support and zero outside.
class Profile {
public:
  explicit Profile(const DataFamily& f);

  double value(double r) const { return inside(r) ? f_(r) : 0.0; }
  double d1(double r) const { return inside(r) ? f1_(r) : 0.0; }
  double d2(double r) const { return inside(r) ? f2_(r) : 0.0; }
  double d3(double r) const { return inside(r) ? f3_(r) : 0.0; }
  /// Radial Laplacian f'' + 2 f'/r, regular at the origin.
  double laplacian(double r) const { return inside(r) ? lap_(r) : 0.0; }
  double laplacian_d1(double r) const { return inside(r) ? lap1_(r) : 0.0; }
  /// d/dr (r f) and d^2/dr^2 (r f).
  double rf_d1(double r) const { return inside(r) ? rf1_(r) : 0.0; }
  double rf_d2(double r) const { return inside(r) ? rf2_(r) : 0.0; }
  /// int_0^s rho f(rho) drho for s >= 0.
  double rf_integral(double s) const { return rf_int_(std::min(s, radius_)); }

  double radius() const { return radius_; }
  const Polynomial& polynomial() const { return f_; }

private:
  bool inside(double r) const { return r < radius_; }
  double radius_;
  Polynomial f_, f1_, f2_, f3_, lap_, lap1_, rf1_, rf2_, rf_int_;
};

/// Cauchy data u(0) = u0, u_t(0) = u1 sampled on a grid.
struct CauchyData {
  Field u0, u1;
  DataFamily f0, f1;
  double support_radius = 0.0;
};

CauchyData sample_data(const DataFamily& f0, const DataFamily& f1, const RadialGrid& g);

/// Closed-form initial characteristic fields
///   X_pm(r, 0) = r (Lap u0 - |u1|^(p-1) u1) +- (r u1)'.
double initial_xp(const Profile& u0, const Profile& u1, const Equation& eq, double r);
double initial_xm(const Profile& u0, const Profile& u1, const Equation& eq, double r);

CharState initial_char_state(const CauchyData& d, const Equation& eq, const RadialGrid& g);

inline double support_radius_at(const CauchyData& d, double t) { return d.support_radius + t; }

/// Parameter box for seeded random data.
struct RandomDataRanges {
  double amp0_max = 0.5;
  double amp1_max = 0.5;
  double radius_min = 0.75;
  double radius_max = 1.5;
  int m_min = 4;
  int m_max = 8;
};

/// Draws (u0, u1) families from a seed; bump or ring shape with signed amplitudes.
std::pair<DataFamily, DataFamily> random_families(std::uint64_t seed, const RandomDataRanges& box = {});

} // namespace radwave
