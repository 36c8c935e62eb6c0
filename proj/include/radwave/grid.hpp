#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace radwave {

/// Uniform mesh on [0, r_max] with n nodes, r_i = i * dr.
class RadialGrid {
public:
  RadialGrid() = default;
  RadialGrid(double r_max, std::size_t n);

  double r_max() const { return r_max_; }
  std::size_t size() const { return n_; }
  double dr() const { return dr_; }
  double r(std::size_t i) const { return i == n_ - 1 ? r_max_ : static_cast<double>(i) * dr_; }
  std::vector<double> nodes() const;

  friend bool operator==(const RadialGrid&, const RadialGrid&) = default;

private:
  double r_max_ = 1.0;
  std::size_t n_ = 3;
  double dr_ = 0.5;
};

RadialGrid make_grid(double r_max, std::size_t n);

/// Samples of a radial function, one per grid node.
struct Field {
  RadialGrid grid;
  std::vector<double> values;

  Field() = default;
  explicit Field(const RadialGrid& g, double fill = 0.0) : grid(g), values(g.size(), fill) {}
  Field(const RadialGrid& g, std::vector<double> v);

  std::size_t size() const { return values.size(); }
  double& operator[](std::size_t i) { return values[i]; }
  double operator[](std::size_t i) const { return values[i]; }
  std::span<const double> view() const { return values; }
  bool all_finite() const;

  template <class F>
  static Field sample(const RadialGrid& g, F&& f) {
    Field out(g);
    for (std::size_t i = 0; i < g.size(); ++i) out.values[i] = f(g.r(i));
    return out;
  }
};

} // namespace radwave
