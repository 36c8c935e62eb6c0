#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "radwave/config.hpp"
#include "radwave/linear_oracle.hpp"
#include "radwave/simulation.hpp"

using namespace radwave;

namespace {

const DataFamily kBump{Shape::Bump, 1.0, 1.0, 6};
const DataFamily kRing{Shape::Ring, 0.8, 1.2, 5};
const DataFamily kZero{Shape::Bump, 0.0, 1.0, 6};

RunConfig linear_config(const DataFamily& f0, const DataFamily& f1, std::size_t n, double t_final) {
  RunConfig cfg;
  cfg.eq = Equation{3.0, false};
  cfg.u0 = f0;
  cfg.u1 = f1;
  cfg.r_max = 8.0;
  cfg.n = n;
  cfg.t_final = t_final;
  cfg.monitors = MonitorLevel::Light;
  return cfg;
}

} // namespace

TEST_CASE("odd extensions") {
  const OddProfilePair o(kBump, kRing);
  const oracle::Bump b{1.0, 1.0, 6};
  for (double s = 0.05; s < 2.0; s += 0.05) {
    CHECK(o.phi(-s) == -o.phi(s));
    CHECK(o.psi(-s) == -o.psi(s));
    CHECK(o.Psi(-s) == o.Psi(s));
    CHECK(o.phi(s) == doctest::Approx(s * b.value(s)).epsilon(1e-13));
    CHECK(o.phi_d1(s) == doctest::Approx(b.value(s) + s * b.d1(s)).epsilon(1e-12));
    // Psi' = psi
    const double h = 1e-5;
    CHECK((o.Psi(s + h) - o.Psi(s - h)) / (2.0 * h) == doctest::Approx(o.psi(s)).epsilon(1e-7));
  }
  CHECK(o.Psi(0.0) == 0.0);
}

TEST_CASE("dalembert_w at t = 0 and for zero data") {
  const OddProfilePair o(kBump, kRing);
  for (double r = 0.0; r < 3.0; r += 0.1) CHECK(dalembert_w(o, r, 0.0) == doctest::Approx(o.phi(r)).epsilon(1e-15));
  const OddProfilePair z(kZero, kZero);
  for (double r = 0.0; r < 3.0; r += 0.1) CHECK(dalembert_w(z, r, 1.7) == 0.0);
}

TEST_CASE("dalembert_w vanishes at the origin") {
  const OddProfilePair o(kRing, kBump);
  for (double t = 0.0; t < 5.0; t += 0.125) CHECK(std::fabs(dalembert_w(o, 0.0, t)) <= 1e-15);
}

TEST_CASE("dalembert_w satisfies the wave equation") {
  const OddProfilePair o(kBump, kRing);
  auto residual = [&](double h) {
    double m = 0.0;
    for (double r = 0.3; r < 2.5; r += 0.1) {
      for (double t = 0.3; t < 2.0; t += 0.1) {
        const double wtt = (dalembert_w(o, r, t + h) - 2.0 * dalembert_w(o, r, t) + dalembert_w(o, r, t - h)) / (h * h);
        const double wrr = (dalembert_w(o, r + h, t) - 2.0 * dalembert_w(o, r, t) + dalembert_w(o, r - h, t)) / (h * h);
        m = std::max(m, std::fabs(wtt - wrr));
      }
    }
    return m;
  };
  // the h^2 terms of both stencils cancel on an exact solution
  for (double h : {4e-2, 2e-2, 1e-2}) CHECK(residual(h) <= 0.1 * h * h);
  CHECK(residual(1e-2) <= 1e-10);
}

TEST_CASE("dalembert_w_r at the origin is u(0, t)") {
  const OddProfilePair o(kBump, kZero);
  const oracle::Bump b{1.0, 1.0, 6};
  const double t = 0.5;
  // u(0, t) = phi'(t) when u1 = 0
  CHECK(dalembert_w_r(o, 0.0, t) == doctest::Approx(b.value(t) + t * b.d1(t)).epsilon(1e-13));
  const double h = 1e-6;
  CHECK(dalembert_w_r(o, 1.3, t) ==
        doctest::Approx((dalembert_w(o, 1.3 + h, t) - dalembert_w(o, 1.3 - h, t)) / (2.0 * h)).epsilon(1e-7));

  // refinement-limit check with leapfrog: u(0, t) from w_r at the origin
  RunConfig cfg = linear_config(kBump, kZero, 4097, t);
  const LeapfrogResult r = run_leapfrog(cfg);
  const Field& w = r.snapshots.back().w_curr;
  const double h0 = cfg.grid().dr();
  const double u0 = (-3.0 * w[0] + 4.0 * w[1] - w[2]) / (2.0 * h0);
  CHECK(u0 == doctest::Approx(dalembert_w_r(o, 0.0, t)).epsilon(1e-4));
}

TEST_CASE("dalembert_char at t = 0 and past the wave") {
  const OddProfilePair o(kBump, kRing);
  const InitialCharFields x0 = linear_initial_char(o);
  for (double r = 0.0; r < 2.0; r += 0.1) {
    const CharValues v = dalembert_char(x0, r, 0.0);
    CHECK(v.xp == x0.xp(r));
    CHECK(v.xm == x0.xm(r));
  }
  for (double r = 0.0; r < 2.0; r += 0.1) {
    const double t = 1.2 + r + 0.01;
    const CharValues v = dalembert_char(x0, r, t);
    CHECK(v.xp == 0.0);
    CHECK(v.xm == 0.0);
  }
}

TEST_CASE("linear initial char fields agree with the data construction") {
  const RunConfig cfg = linear_config(kBump, kRing, 1025, 0.0);
  const RadialGrid g = cfg.grid();
  const CharState s = initial_char_state(sample_data(kBump, kRing, g), cfg.eq, g);
  const InitialCharFields x0 = linear_initial_char(OddProfilePair(kBump, kRing));
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(s.xp[i] == doctest::Approx(x0.xp(g.r(i))).epsilon(1e-12));
    CHECK(s.xm[i] == doctest::Approx(x0.xm(g.r(i))).epsilon(1e-12));
  }
  // sampled fields reproduce node values exactly and interpolate between
  const InitialCharFields sampled = sampled_initial_char(s.xp, s.xm);
  CHECK(sampled.xp(g.r(17)) == s.xp[17]);
  CHECK(sampled.xm(0.5 * (g.r(3) + g.r(4))) == doctest::Approx(0.5 * (s.xm[3] + s.xm[4])));
  CHECK(sampled.xp(-1.0) == 0.0);
  CHECK(sampled.xp(100.0) == 0.0);
}

TEST_CASE("linear char run at unit Courant number matches the characteristic oracle") {
  for (const auto& pair : {std::pair{kBump, kRing}, std::pair{kRing, kBump}, std::pair{kBump, kBump}}) {
    RunConfig cfg = linear_config(pair.first, pair.second, 1025, 5.0);
    cfg.snapshot_stride = 64;
    const RunResult r = run(cfg);
    const InitialCharFields x0 = linear_initial_char(OddProfilePair(pair.first, pair.second));
    for (const CharState& s : r.snapshots) {
      double err = 0.0;
      for (std::size_t i = 0; i < s.grid().size(); ++i) {
        const CharValues v = dalembert_char(x0, s.grid().r(i), s.t);
        err = std::max({err, std::fabs(v.xp - s.xp[i]), std::fabs(v.xm - s.xm[i])});
      }
      REQUIRE(err <= 1e-12);
    }
  }
}

TEST_CASE("linear char run: w error is second order") {
  const OddProfilePair o(kBump, kRing);
  auto err = [&](std::size_t n) {
    const RunResult r = run(linear_config(kBump, kRing, n, 4.0));
    return oracle_error(std::span(&r.snapshots.back(), 1), o).front().sup_error;
  };
  const double e1 = err(513), e2 = err(1025), e3 = err(2049);
  CHECK(std::log2(e1 / e2) == doctest::Approx(2.0).epsilon(0.05));
  CHECK(std::log2(e2 / e3) == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("oracle_error of zero data is zero") {
  const RunResult r = run(linear_config(kZero, kZero, 257, 2.0));
  const auto rows = oracle_error(r.snapshots, OddProfilePair(kZero, kZero));
  REQUIRE(rows.size() == 2);
  for (const auto& row : rows) {
    CHECK(row.sup_error == 0.0);
    CHECK(row.l2_error == 0.0);
  }
  const LeapfrogResult l = run_leapfrog(linear_config(kZero, kZero, 257, 2.0));
  for (const auto& row : oracle_error(l.snapshots, OddProfilePair(kZero, kZero))) CHECK(row.sup_error == 0.0);
}

TEST_CASE("leapfrog halving study") {
  const OddProfilePair o(kRing, kBump);
  auto err = [&](std::size_t n) {
    const LeapfrogResult r = run_leapfrog(linear_config(kRing, kBump, n, 4.0));
    const auto rows = oracle_error(r.snapshots, o);
    CHECK(rows.front().t == 0.0);
    CHECK(rows.back().t == 4.0);
    return rows.back();
  };
  const auto a = err(513), b = err(1025), c = err(2049);
  for (double ratio : {a.sup_error / b.sup_error, b.sup_error / c.sup_error}) {
    CHECK(ratio >= 3.6);
    CHECK(ratio <= 4.4);
  }
  CHECK(b.l2_error / c.l2_error == doctest::Approx(4.0).epsilon(0.1));
}
