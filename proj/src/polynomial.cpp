#include "radwave/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "radwave/error.hpp"

namespace radwave {

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial({0.0});
  std::vector<double> d(c_.size() - 1);
  for (std::size_t j = 1; j < c_.size(); ++j) d[j - 1] = static_cast<double>(j) * c_[j];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::antiderivative() const {
  std::vector<double> a(c_.size() + 1, 0.0);
  for (std::size_t j = 0; j < c_.size(); ++j) a[j + 1] = c_[j] / static_cast<double>(j + 1);
  return Polynomial(std::move(a));
}

Polynomial Polynomial::shifted_up(int k) const {
  std::vector<double> s(static_cast<std::size_t>(k), 0.0);
  s.insert(s.end(), c_.begin(), c_.end());
  return Polynomial(std::move(s));
}

Polynomial Polynomial::divided_by_x() const {
  if (c_.empty()) return {};
  if (c_[0] != 0.0) throw Error("polynomial: division by x with nonzero constant term");
  return Polynomial(std::vector<double>(c_.begin() + 1, c_.end()));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<double> s(std::max(a.c_.size(), b.c_.size()), 0.0);
  for (std::size_t j = 0; j < a.c_.size(); ++j) s[j] += a.c_[j];
  for (std::size_t j = 0; j < b.c_.size(); ++j) s[j] += b.c_[j];
  return Polynomial(std::move(s));
}

Polynomial operator*(double k, const Polynomial& a) {
  std::vector<double> s = a.c_;
  for (double& v : s) v *= k;
  return Polynomial(std::move(s));
}

} // namespace radwave
