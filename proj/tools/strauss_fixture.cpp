// Brute-force search for the largest discrete Strauss ratio over a family of
// compactly supported test profiles. Writes (or checks) the C* fixture.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include <json.hpp>

#include "radwave/grid.hpp"
#include "radwave/monitors.hpp"

using namespace radwave;

namespace {

constexpr double kRmax = 16.0;
constexpr std::size_t kNodes = 8193;

struct Best {
  double ratio = 0.0;
  std::string profile;
};

void consider(Best& best, const Field& f, const std::string& label) {
  const double ratio = strauss_check(f);
  if (ratio > best.ratio) best = {ratio, label};
}

double cutoff(double r, double radius, int m) {
  if (r >= radius) return 0.0;
  return std::pow(1.0 - (r / radius) * (r / radius), m);
}

Best search() {
  const RadialGrid g = make_grid(kRmax, kNodes);
  Best best;
  for (int m = 4; m <= 12; ++m) {
    for (double radius = 0.5; radius <= 15.5; radius += 0.5) {
      consider(best, Field::sample(g, [&](double r) { return cutoff(r, radius, m); }),
               "bump R=" + std::to_string(radius) + " m=" + std::to_string(m));
      consider(best, Field::sample(g, [&](double r) { return (r / radius) * (r / radius) * cutoff(r, radius, m); }),
               "ring R=" + std::to_string(radius) + " m=" + std::to_string(m));
    }
  }
  // e^(-a r) tails are the near-extremals of the continuous inequality
  for (double a = 0.25; a <= 8.0; a *= std::sqrt(2.0)) {
    for (double radius = 2.0; radius <= 15.5; radius += 0.5) {
      for (int m : {1, 2, 4, 8}) {
        consider(best, Field::sample(g, [&](double r) { return std::exp(-a * r) * cutoff(r, radius, m); }),
                 "exp a=" + std::to_string(a) + " R=" + std::to_string(radius) + " m=" + std::to_string(m));
      }
    }
  }
  return best;
}

} // namespace

int main(int argc, char** argv) {
  if (argc != 3 || (std::string(argv[1]) != "--write" && std::string(argv[1]) != "--check")) {
    std::cerr << "usage: strauss_fixture --write|--check FILE\n";
    return 2;
  }
  const Best best = search();
  if (std::string(argv[1]) == "--write") {
    nlohmann::ordered_json j;
    j["c_star"] = best.ratio;
    j["maximizer"] = best.profile;
    j["r_max"] = kRmax;
    j["n"] = kNodes;
    j["continuous_constant"] = 1.0 / std::sqrt(4.0 * std::numbers::pi);
    std::ofstream out(argv[2]);
    out << j.dump(2) << '\n';
    if (!out) {
      std::cerr << "cannot write " << argv[2] << '\n';
      return 5;
    }
    std::printf("C* = %.17g (%s)\n", best.ratio, best.profile.c_str());
    return 0;
  }
  std::ifstream in(argv[2]);
  if (!in) {
    std::cerr << "cannot read " << argv[2] << '\n';
    return 5;
  }
  const auto j = nlohmann::json::parse(in);
  const double recorded = j.at("c_star").get<double>();
  const bool same = std::fabs(recorded - best.ratio) <= 1e-12 * recorded;
  std::printf("recomputed C* = %.17g, recorded %.17g: %s\n", best.ratio, recorded, same ? "match" : "MISMATCH");
  return same ? 0 : 1;
}
