#pragma once

#include <vector>

namespace radwave {

/// Dense polynomial sum_j c[j] x^j, used for the closed-form data profiles.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) {}

  double operator()(double x) const;
  Polynomial derivative() const;
  /// Antiderivative vanishing at 0.
  Polynomial antiderivative() const;
  /// p(x) * x^k
  Polynomial shifted_up(int k) const;
  /// p(x) / x; the constant coefficient must vanish.
  Polynomial divided_by_x() const;
  const std::vector<double>& coeffs() const { return c_; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(double s, const Polynomial& a);

private:
  std::vector<double> c_;
};

} // namespace radwave
