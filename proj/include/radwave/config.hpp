#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "radwave/evolution.hpp"
#include "radwave/initial_data.hpp"
#include "radwave/monitors.hpp"
#include "radwave/state.hpp"

namespace radwave {

enum class Scheme { Characteristic, Leapfrog, Both };

std::string to_string(Scheme s);

struct RunConfig {
  Equation eq;
  DataFamily u0{Shape::Bump, 0.0, 1.0, 6};
  DataFamily u1{Shape::Bump, 0.0, 1.0, 6};
  bool random_data = false;
  std::uint64_t seed = 0;

  double r_max = 16.0;
  std::size_t n = 4097;

  StepPolicy policy;
  double leapfrog_courant = 0.5;
  Scheme scheme = Scheme::Characteristic;

  double t_final = 10.0;
  int monitor_stride = 1;
  int snapshot_stride = 0; ///< 0 keeps only the first and last state

  MonitorLevel monitors = MonitorLevel::Full;
  std::string out_dir = "out";

  /// Data families after applying `random_data` / `seed`.
  std::pair<DataFamily, DataFamily> families() const;
  double support_radius() const;
  RadialGrid grid() const { return make_grid(r_max, n); }

  /// Throws ValidationError or DomainTooSmall.
  void validate() const;

  friend bool operator==(const RunConfig& a, const RunConfig& b);
};

/// Parses the INI-style configuration text; see docs/config.md.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

/// Canonical text form; parse_config(emit_config(c)) == c.
std::string emit_config(const RunConfig& c);

} // namespace radwave
