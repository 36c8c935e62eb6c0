#include "radwave/grid.hpp"

#include <cmath>
#include <string>

#include "radwave/error.hpp"

namespace radwave {

RadialGrid::RadialGrid(double r_max, std::size_t n) {
  if (!(r_max > 0.0) || !std::isfinite(r_max))
    throw ValidationError("grid: r_max must be positive and finite, got " + std::to_string(r_max));
  if (n < 3) throw ValidationError("grid: need at least 3 nodes, got " + std::to_string(n));
  r_max_ = r_max;
  n_ = n;
  dr_ = r_max / static_cast<double>(n - 1);
}

std::vector<double> RadialGrid::nodes() const {
  std::vector<double> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = r(i);
  return out;
}

RadialGrid make_grid(double r_max, std::size_t n) { return RadialGrid(r_max, n); }

Field::Field(const RadialGrid& g, std::vector<double> v) : grid(g), values(std::move(v)) {
  if (values.size() != g.size())
    throw ValidationError("field: " + std::to_string(values.size()) + " samples for a " +
                          std::to_string(g.size()) + "-node grid");
}

bool Field::all_finite() const {
  for (double v : values)
    if (!std::isfinite(v)) return false;
  return true;
}

} // namespace radwave
