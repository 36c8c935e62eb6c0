#include <doctest.h>

#include <cmath>
#include <fstream>
#include <random>
#include <string>

#include <json.hpp>

#include "oracles.hpp"
#include "radwave/config.hpp"
#include "radwave/diagnostics.hpp"
#include "radwave/error.hpp"
#include "radwave/field_ops.hpp"
#include "radwave/monitors.hpp"
#include "radwave/simulation.hpp"

using namespace radwave;

namespace {

double c_star() {
  std::ifstream in(RADWAVE_FIXTURE_DIR "/strauss_cstar.json");
  REQUIRE(in);
  return nlohmann::json::parse(in).at("c_star").get<double>();
}

RunConfig bump_config(double p, std::size_t n, double t_final, bool damped = true) {
  RunConfig cfg;
  cfg.eq = Equation{p, damped};
  cfg.u0 = {Shape::Bump, 1.0, 1.0, 6};
  cfg.u1 = {Shape::Bump, 1.0, 1.0, 6};
  cfg.r_max = 8.0;
  cfg.n = n;
  cfg.t_final = t_final;
  return cfg;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

CharState state_at_zero(const RunConfig& cfg) {
  const RadialGrid g = cfg.grid();
  return initial_char_state(sample_data(cfg.u0, cfg.u1, g), cfg.eq, g);
}

struct Silence {
  WarningHandler previous = set_warning_handler([](std::string_view) {});
  ~Silence() { set_warning_handler(previous); }
};

} // namespace

TEST_CASE("monitor series bookkeeping") {
  MonitorSeries m;
  const auto& names = MonitorSeries::channel_names();
  CHECK(names.front() == "dt");
  CHECK(std::find(names.begin(), names.end(), "haraux_max") != names.end());
  const std::vector<double> row(names.size(), 1.0);
  m.append(0.0, row);
  m.append(0.5, row);
  CHECK(m.size() == 2);
  CHECK(m["energy1"].size() == 2);
  CHECK(m.row(1).size() == names.size());
  CHECK_THROWS_AS(m.append(0.5, row), Error);
  CHECK_THROWS_AS(m.append(1.0, std::vector<double>(3)), Error);
  CHECK_THROWS_AS(m["nope"], std::out_of_range);
}

TEST_CASE("Haraux channels") {
  const RadialGrid g = make_grid(4.0, 65);
  CharState zero;
  zero.w = zero.y = zero.xp = zero.xm = Field(g);
  const Haraux hz = haraux_channels(zero);
  CHECK(hz.max == 0.0);
  CHECK(hz.sup_ut == 0.0);
  CHECK(hz.sup_r_utt == 0.0);
  CHECK(hz.sup_r_drut == 0.0);

  const RunConfig cfg = bump_config(3.0, 2049, 0.0);
  const CharState s = state_at_zero(cfg);
  const oracle::Bump b{1.0, 1.0, 6};
  double expected = 0.0;
  for (std::size_t i = 0; i < cfg.n; ++i) {
    const double r = s.grid().r(i);
    expected = std::max({expected, std::fabs(oracle::initial_x(b, b, 3.0, true, r, 1)),
                         std::fabs(oracle::initial_x(b, b, 3.0, true, r, -1))});
  }
  const Haraux h = haraux_channels(s);
  CHECK(std::fabs(h.max - expected) <= 1e-10);
  CHECK(h.sup_ut == 1.0);
  // r u_tt = r (Lap u0 - u1^3) and r d_r u_t = r u1'
  double utt = 0.0, drut = 0.0;
  for (std::size_t i = 0; i < cfg.n; ++i) {
    const double r = s.grid().r(i);
    utt = std::max(utt, std::fabs(r * (b.laplacian(r) - std::pow(b.value(r), 3))));
    drut = std::max(drut, std::fabs(r * b.d1(r)));
  }
  CHECK(h.sup_r_utt == doctest::Approx(utt).epsilon(1e-12));
  CHECK(h.sup_r_drut == doctest::Approx(drut).epsilon(1e-12));
}

TEST_CASE("L2k channels") {
  const RunConfig cfg = bump_config(3.0, 1025, 0.0);
  const CharState s = state_at_zero(cfg);
  const auto l2k = l2k_channels(s);
  REQUIRE(l2k.size() == 4);
  CHECK(l2k[0].k == 1);
  CHECK(l2k[0].plus == half_line_l2k(s.xp, 1));
  CHECK(l2k[3].minus == half_line_l2k(s.xm, 8));
  CharState zero = s;
  zero.xp = zero.xm = Field(s.grid());
  for (const auto& v : l2k_channels(zero)) {
    CHECK(v.plus == 0.0);
    CHECK(v.minus == 0.0);
  }
}

TEST_CASE("elementary inequality") {
  CHECK(elementary_inequality(1.0, -1.0, 3));
  CHECK(elementary_inequality(2.0, 3.0, 1));
  CHECK(elementary_inequality(0.0, 0.0, 5));
  CHECK(elementary_inequality(-1e300, 1e-300, 8));
  CHECK_THROWS_AS(elementary_inequality(1.0, 1.0, 0), ValidationError);
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  std::uniform_int_distribution<int> kk(1, 8);
  for (int i = 0; i < 1000000; ++i) REQUIRE(elementary_inequality(u(rng), u(rng), kk(rng)));
}

TEST_CASE("Strauss ratio") {
  const RadialGrid g = make_grid(16.0, 8193);
  CHECK(strauss_check(Field(g)) == 0.0);
  const Field bump = Field::sample(g, [](double r) { return r < 2.0 ? std::pow(1.0 - r * r / 4.0, 6) : 0.0; });
  const double ratio = strauss_check(bump);
  CHECK(ratio > 0.0);
  CHECK(ratio <= c_star());
  // homogeneous of degree zero
  for (double c : {-2.0, 1e-3, 7.5}) {
    Field cf = bump;
    for (double& v : cf.values) v *= c;
    CHECK(strauss_check(cf) == doctest::Approx(ratio).epsilon(1e-13));
  }
}

TEST_CASE("Strauss ratio stays below the continuous constant for exponential tails") {
  const RadialGrid g = make_grid(16.0, 8193);
  const double continuous = 1.0 / std::sqrt(4.0 * oracle::pi);
  for (double a : {0.5, 1.0, 2.0}) {
    const Field f = Field::sample(g, [&](double r) { return r < 15.0 ? std::exp(-a * r) * (1.0 - r * r / 225.0) : 0.0; });
    CHECK(strauss_check(f) < continuous);
    CHECK(strauss_check(f) <= c_star());
  }
}

TEST_CASE("Hardy ratio") {
  const RadialGrid g = make_grid(4.0, 4097);
  CHECK(hardy_check(Field(g)) == 0.0);
  const Field f = Field::sample(g, [](double r) { return r < 1.0 ? r * std::pow(1.0 - r * r, 6) : 0.0; });
  CHECK(hardy_check(f) <= 2.0 + g.dr());
  // near-extremal family (r^2 + eps^2)^(-1/4) with a cutoff: ratio climbs toward 2
  const RadialGrid fine = make_grid(2.0, 200001);
  double prev = 0.0;
  for (double eps : {1e-1, 1e-2, 1e-3}) {
    const Field h = Field::sample(fine, [&](double r) {
      return r < 1.0 ? std::pow(r * r + eps * eps, -0.25) * std::pow(1.0 - r * r, 4) : 0.0;
    });
    const double ratio = hardy_check(h);
    CHECK(ratio < 2.0);
    CHECK(ratio > prev);
    prev = ratio;
  }
  CHECK(prev > 1.6);
}

TEST_CASE("energies of zero data") {
  RunConfig cfg = bump_config(3.0, 257, 2.0);
  cfg.u0.amplitude = cfg.u1.amplitude = 0.0;
  const RunResult r = run(cfg);
  for (const char* name : {"energy1", "residual1", "energy2", "residual2", "E3", "E4", "N1", "N2"})
    for (double v : r.monitors[name]) CHECK(v == 0.0);
  const auto first = energy_identity_first(r.snapshots);
  for (double v : first.residual) CHECK(v == 0.0);
  const auto second = energy_identity_second(r.snapshots);
  for (double v : second.residual) CHECK(v == 0.0);
}

TEST_CASE("initial energies match the closed form") {
  const oracle::Bump b{1.0, 1.0, 6};
  const double e1 = 2.0 * oracle::pi *
                    oracle::integrate([&](double r) { return (b.value(r) * b.value(r) + b.d1(r) * b.d1(r)) * r * r; }, 0.0, 1.0);
  // u_tt = Lap u0 - u1^3, grad u_t = u1'
  const double e2 = 2.0 * oracle::pi * oracle::integrate([&](double r) {
                      const double utt = b.laplacian(r) - std::pow(b.value(r), 3);
                      return (utt * utt + b.d1(r) * b.d1(r)) * r * r;
                    }, 0.0, 1.0);
  auto err = [&](std::size_t n) {
    const MonitorSeries m = monitor_trajectory(std::vector{state_at_zero(bump_config(3.0, n, 0.0))});
    return std::pair{std::fabs(m["energy1"][0] - e1), std::fabs(m["energy2"][0] - e2)};
  };
  const auto [a1, a2] = err(2049);
  const auto [b1, b2] = err(4097);
  CHECK(b1 <= 1e-4 * e1);
  CHECK(std::log2(a1 / b1) >= 1.9);
  // the second-order energy reads X+- directly, which are sampled exactly
  CHECK(a2 <= 1e-12 * e2);
  CHECK(b2 <= 1e-12 * e2);
}

TEST_CASE("linear mode conserves both energies to second order") {
  auto drift = [](std::size_t n) {
    const RunResult r = run(bump_config(3.0, n, 4.0, false));
    for (double v : r.monitors["dissipation1"]) REQUIRE(v == 0.0);
    for (double v : r.monitors["dissipation2"]) REQUIRE(v == 0.0);
    return std::pair{max_abs(r.monitors["residual1"]), max_abs(r.monitors["residual2"])};
  };
  const auto [a1, a2] = drift(513);
  const auto [b1, b2] = drift(1025);
  CHECK(b1 <= 2e-3);
  CHECK(std::log2(a1 / b1) >= 1.8);
  CHECK(std::log2(a2 / b2) >= 1.8);
}

TEST_CASE("dissipation laws: residuals shrink at second order") {
  auto residuals = [](std::size_t n) {
    const RunResult r = run(bump_config(3.0, n, 4.0));
    REQUIRE(r.status == RunStatus::Completed);
    const auto& d1 = r.monitors["dissipation1"];
    for (std::size_t i = 1; i < d1.size(); ++i) REQUIRE(d1[i] >= d1[i - 1]);
    return std::pair{max_abs(r.monitors["residual1"]), max_abs(r.monitors["residual2"])};
  };
  const auto [a1, a2] = residuals(1025);
  const auto [b1, b2] = residuals(2049);
  CHECK(a1 / b1 >= 3.5);
  CHECK(a1 / b1 <= 5.0);
  CHECK(a2 / b2 >= 3.5);
  CHECK(a2 / b2 <= 5.0);
}

TEST_CASE("energy identity views agree with the series") {
  RunConfig cfg = bump_config(3.0, 513, 1.0);
  cfg.snapshot_stride = 1;
  const RunResult r = run(cfg);
  const auto first = energy_identity_first(r.snapshots);
  CHECK(first.times == r.monitors.times());
  CHECK(first.energy == r.monitors["energy1"]);
  CHECK(first.residual == r.monitors["residual1"]);
  const auto second = energy_identity_second(r.snapshots);
  CHECK(second.dissipation == r.monitors["dissipation2"]);
  const auto acc = strichartz_accumulators(r.snapshots);
  CHECK(acc.n1 == r.monitors["N1"]);
  for (std::size_t i = 1; i < acc.n1.size(); ++i) {
    CHECK(acc.n1[i] >= acc.n1[i - 1]);
    CHECK(acc.n2[i] >= acc.n2[i - 1]);
  }
}

TEST_CASE("Ek channels") {
  Silence quiet;
  const RunConfig cfg = bump_config(3.0, 1025, 0.0);
  CharState zero = state_at_zero(cfg);
  zero.w = zero.y = zero.xp = zero.xm = Field(zero.grid());
  CHECK(Ek_channel(zero, 3) == 0.0);
  CHECK(Ek_channel(zero, 4) == 0.0);
  CHECK_THROWS_AS(Ek_channel(zero, 2), ValidationError);
  CharState even = zero;
  even.eq.p = 4.0;
  CHECK_THROWS_AS(Ek_channel(even, 4), ValidationError);
  CHECK_NOTHROW(Ek_channel(even, 3));
}

TEST_CASE("Ek warns below 4097 nodes") {
  std::vector<std::string> seen;
  const WarningHandler previous = set_warning_handler([&](std::string_view m) { seen.emplace_back(m); });
  const CharState s = state_at_zero(bump_config(3.0, 1025, 0.0));
  Ek_channel(s, 4);
  CHECK(seen.size() == 1);
  seen.clear();
  Ek_channel(s, 3);
  CHECK(seen.empty());
  set_warning_handler(previous);
}

TEST_CASE("E3 at t = 0 matches the closed form at second order") {
  const oracle::Bump b{1.0, 1.0, 6};
  const double p = 3.0;
  auto norm = [](const std::function<double(double)>& f) {
    return std::sqrt(4.0 * oracle::pi * oracle::integrate([&](double r) { return f(r) * f(r) * r * r; }, 0.0, 1.0));
  };
  const double exact =
      norm([&](double r) { return b.laplacian_d1(r); }) + norm([&](double r) { return b.laplacian(r); }) +
      norm([&](double r) { return b.laplacian_d1(r) - p * b.value(r) * b.value(r) * b.d1(r); }) +
      norm([&](double r) {
        const double u1 = b.value(r);
        return b.laplacian(r) - p * u1 * u1 * (b.laplacian(r) - u1 * u1 * u1);
      });
  auto err = [&](std::size_t n) { return std::fabs(Ek_channel(state_at_zero(bump_config(p, n, 0.0)), 3) - exact); };
  const double e1 = err(2049), e2 = err(4097);
  CHECK(e2 <= 1e-3 * exact);
  CHECK(std::log2(e1 / e2) >= 1.7);
}

TEST_CASE("light monitors leave the heavy channels empty") {
  RunConfig cfg = bump_config(3.0, 257, 1.0);
  cfg.monitors = MonitorLevel::Light;
  const RunResult r = run(cfg);
  CHECK(std::isnan(r.monitors["energy1"].back()));
  CHECK(std::isnan(r.monitors["E3"].back()));
  CHECK(std::isfinite(r.monitors["haraux_max"].back()));
  CHECK(std::isfinite(r.monitors["l2_8_m"].back()));
  CHECK(std::isfinite(r.monitors["sup_ut"].back()));
}

TEST_CASE("gradient sup norm is square integrable in time") {
  RunConfig cfg = bump_config(3.0, 3073, 20.0);
  cfg.r_max = 24.0;
  cfg.u1.amplitude = 0.0;
  const RunResult r = run(cfg);
  REQUIRE(r.status == RunStatus::Completed);
  const auto& t = r.monitors.times();
  const auto& acc = r.monitors["int_dru_sq"];
  const auto& dru = r.monitors["sup_dru"];
  std::size_t mid = 0;
  while (t[mid] < 10.0) ++mid;
  CHECK(acc.back() - acc[mid] < 0.01 * acc.back());
  // outgoing wave: sup|d_r u| ~ 1/t
  CHECK(t.back() * dru.back() == doctest::Approx(t[mid] * dru[mid]).epsilon(0.05));
  const auto& n1 = r.monitors["N1"];
  const auto& n2 = r.monitors["N2"];
  CHECK(n1.back() - n1[mid] < 0.01 * n1.back());
  CHECK(n2.back() - n2[mid] < 0.01 * n2.back());
}

TEST_CASE("l2k ordering in k") {
  auto channels = [](double radius) {
    RunConfig cfg = bump_config(3.0, 2049, 0.0);
    cfg.u0 = {Shape::Bump, 0.3, radius, 6};
    cfg.u1 = {Shape::Bump, 0.3, radius, 6};
    cfg.r_max = 16.0;
    const CharState s = state_at_zero(cfg);
    return std::pair{l2k_channels(s), haraux_channels(s).max};
  };
  // narrow support: increasing in k and below the sup
  for (double radius : {0.5, 1.0}) {
    const auto [v, m] = channels(radius);
    for (std::size_t j = 1; j < v.size(); ++j) {
      CHECK(v[j].plus > v[j - 1].plus);
      CHECK(v[j].minus > v[j - 1].minus);
    }
    CHECK(v.back().plus < m);
    CHECK(v.back().minus < m);
  }
  // the flat half-line measure gives no ordering once the support is wide
  const auto [wide, m] = channels(3.0);
  CHECK(wide[1].plus < wide[0].plus);
  CHECK(wide.back().plus < m);
}
