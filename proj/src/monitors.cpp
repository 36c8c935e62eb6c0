#include "radwave/monitors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "radwave/diagnostics.hpp"
#include "radwave/error.hpp"
#include "radwave/evolution.hpp"
#include "radwave/field_ops.hpp"

namespace radwave {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kPi = std::numbers::pi;

const std::vector<std::string> kChannels = {
    "dt",          "energy1",     "dissipation1",  "residual1",   "energy2",     "dissipation2",
    "residual2",   "haraux_max",  "l2_1_p",        "l2_2_p",      "l2_4_p",      "l2_8_p",
    "l2_1_m",      "l2_2_m",      "l2_4_m",        "l2_8_m",      "sup_ut",      "sup_r_utt",
    "sup_r_drut",  "sup_dru",     "sup_drru",      "sup_dtdru",   "sup_utt",     "sup_dru_over_r",
    "E2",          "E3",          "E4",            "N3",          "int_dru_sq",  "N1_sq_accum",
    "N2_sq_accum", "N1",          "N2",            "strauss_ratio", "hardy_ratio", "compat_residual"};

std::size_t channel_index(std::string_view name) {
  const auto it = std::find(kChannels.begin(), kChannels.end(), name);
  if (it == kChannels.end()) throw std::out_of_range("unknown monitor channel '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - kChannels.begin());
}

Field combine(const Field& a, const Field& b, double sa, double sb) {
  Field out(a.grid);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = sa * a[i] + sb * b[i];
  return out;
}

double l2(const Field& f) { return lq_norm_3d(f, 2.0); }

bool odd_integer(double p) { return p == std::floor(p) && std::fmod(p, 2.0) == 1.0; }

/// Spatial fields of one state with time derivatives of u eliminated
/// through the equation.
struct Derived {
  Field u, ut, utt, sum, diff;
  double p;
  bool damped;

  explicit Derived(const CharState& s)
      : u(regular_quotient(s.w)), ut(u_t_field(s)), sum(combine(s.xp, s.xm, 1.0, 1.0)),
        diff(combine(s.xp, s.xm, 0.5, -0.5)), p(s.eq.p), damped(s.eq.damped) {
    utt = regular_quotient(sum);
    for (double& v : utt.values) v *= 0.5;
  }

  /// damping derivative p|u_t|^(p-1) times f
  Field damp_linear(const Field& f) const {
    Field out(f.grid);
    if (!damped) return out;
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = p * abs_pow(ut[i], p - 1.0) * f[i];
    return out;
  }

  Field uttt() const { return combine(radial_laplacian(ut), damp_linear(utt), 1.0, -1.0); }

  Field utttt(const Field& uttt_field) const {
    Field out = radial_laplacian(utt);
    if (!damped) return out;
    for (std::size_t i = 0; i < out.size(); ++i) {
      const double v = ut[i];
      const double second = p * (p - 1.0) * abs_pow(v, p - 3.0) * v * utt[i] * utt[i];
      out[i] -= second + p * abs_pow(v, p - 1.0) * uttt_field[i];
    }
    return out;
  }

  double e3() const {
    const Field lap_u = radial_laplacian(u);
    return l2(ddr(lap_u)) + l2(radial_laplacian(ut)) + l2(ddr(utt)) + l2(uttt());
  }

  double e4() const {
    if (!odd_integer(p)) return kNaN;
    const Field lap_u = radial_laplacian(u);
    const Field lap_ut = radial_laplacian(ut);
    const Field d3 = uttt();
    return l2(radial_laplacian(lap_u)) + l2(ddr(lap_ut)) + l2(radial_laplacian(utt)) + l2(ddr(d3)) +
           l2(utttt(d3));
  }
};

struct Snapshot {
  double energy1 = kNaN, rate1 = kNaN, energy2 = kNaN, rate2 = kNaN;
  Haraux h{kNaN, kNaN, kNaN, kNaN};
  std::array<double, 4> l2k_p{kNaN, kNaN, kNaN, kNaN}, l2k_m{kNaN, kNaN, kNaN, kNaN};
  double sup_dru = kNaN, sup_drru = kNaN, sup_dtdru = kNaN, sup_utt = kNaN, sup_dru_over_r = kNaN;
  double e2 = kNaN, e3 = kNaN, e4 = kNaN, strauss = kNaN, hardy = kNaN, compat = kNaN;
};

Snapshot evaluate(const CharState& s, MonitorLevel level) {
  Snapshot out;
  out.h = haraux_channels(s);
  const auto l2k = l2k_channels(s);
  for (std::size_t j = 0; j < l2k.size(); ++j) {
    out.l2k_p[j] = l2k[j].plus;
    out.l2k_m[j] = l2k[j].minus;
  }
  if (level == MonitorLevel::Light) return out;

  const auto& g = s.grid();
  const Derived d(s);
  const double h = g.dr();
  const std::size_t n = g.size();

  const Field wr = ddr(s.w);
  std::vector<double> e1(n), e2(n), r1(n), r2(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = g.r(i);
    const double r_ur = wr[i] - d.u[i];
    e1[i] = s.y[i] * s.y[i] + r_ur * r_ur;
    const double r_utt = 0.5 * d.sum[i];
    const double r_urt = d.diff[i] - d.ut[i];
    e2[i] = r_utt * r_utt + r_urt * r_urt;
    if (s.eq.damped) {
      r1[i] = abs_pow(d.ut[i], s.eq.p + 1.0) * r * r;
      r2[i] = s.eq.p * abs_pow(d.ut[i], s.eq.p - 1.0) * r_utt * r_utt;
    } else {
      r1[i] = r2[i] = 0.0;
    }
  }
  out.energy1 = 2.0 * kPi * trapezoid(e1, h);
  out.energy2 = 2.0 * kPi * trapezoid(e2, h);
  out.rate1 = 4.0 * kPi * trapezoid(r1, h);
  out.rate2 = 4.0 * kPi * trapezoid(r2, h);

  const Field ur = ddr(d.u);
  const Field urr = ddr(ur);
  const Field utr = ddr(d.ut);
  out.sup_dru = sup_norm(ur);
  out.sup_drru = sup_norm(urr);
  out.sup_dtdru = sup_norm(utr);
  out.sup_utt = sup_norm(d.utt);
  out.sup_dru_over_r = sup_norm(regular_quotient(ur));

  const double n_utr = l2(utr);
  out.e2 = std::hypot(n_utr, l2(d.utt)) + std::hypot(l2(radial_laplacian(d.u)), n_utr);
  out.e3 = d.e3();
  out.e4 = d.e4();
  out.strauss = strauss_check(d.ut);
  out.hardy = hardy_check(d.ut);
  out.compat = sup_norm(combine(ddr(s.y), d.diff, 1.0, -1.0));
  return out;
}

} // namespace

MonitorSeries::MonitorSeries() : columns_(kChannels.size()) {}

const std::vector<std::string>& MonitorSeries::channel_names() { return kChannels; }

const std::vector<double>& MonitorSeries::operator[](std::string_view name) const {
  return columns_[channel_index(name)];
}

std::vector<double> MonitorSeries::row(std::size_t i) const {
  std::vector<double> out;
  out.reserve(columns_.size());
  for (const auto& c : columns_) out.push_back(c[i]);
  return out;
}

void MonitorSeries::append(double t, const std::vector<double>& values) {
  if (values.size() != columns_.size()) throw Error("monitor row has the wrong number of channels");
  if (!times_.empty() && !(t > times_.back())) throw Error("monitor times must be strictly increasing");
  times_.push_back(t);
  for (std::size_t j = 0; j < values.size(); ++j) columns_[j].push_back(values[j]);
}

Haraux haraux_channels(const CharState& s) {
  const Field ut = u_t_field(s);
  Haraux h{0.0, sup_norm(ut), 0.0, 0.0};
  for (std::size_t i = 0; i < ut.size(); ++i) {
    const double xp = s.xp[i], xm = s.xm[i];
    h.max = std::max({h.max, std::fabs(xp), std::fabs(xm)});
    h.sup_r_utt = std::max(h.sup_r_utt, 0.5 * std::fabs(xp + xm));
    h.sup_r_drut = std::max(h.sup_r_drut, 0.5 * std::fabs(xp - xm - 2.0 * ut[i]));
  }
  return h;
}

std::vector<L2kValues> l2k_channels(const CharState& s, std::span<const int> ks) {
  std::vector<L2kValues> out;
  out.reserve(ks.size());
  const auto plus = half_line_l2k(s.xp, ks);
  const auto minus = half_line_l2k(s.xm, ks);
  for (std::size_t j = 0; j < ks.size(); ++j) out.push_back({ks[j], plus[j], minus[j]});
  return out;
}

double Ek_channel(const CharState& s, int k) {
  if (k != 3 && k != 4) throw ValidationError("Ek_channel: k must be 3 or 4");
  if (k == 4) {
    if (s.eq.damped && !odd_integer(s.eq.p))
      throw ValidationError("Ek_channel: k = 4 requires an odd integer exponent");
    if (s.grid().size() < 4097) warn("Ek_channel: k = 4 is stencil-noise limited below n = 4097");
  }
  const Derived d(s);
  if (k == 3) return d.e3();
  if (!s.eq.damped) {
    // linear mode: no damping terms, any p is admissible
    const Field lap_u = radial_laplacian(d.u);
    const Field lap_ut = radial_laplacian(d.ut);
    const Field d3 = d.uttt();
    return l2(radial_laplacian(lap_u)) + l2(ddr(lap_ut)) + l2(radial_laplacian(d.utt)) + l2(ddr(d3)) +
           l2(d.utttt(d3));
  }
  return d.e4();
}

double strauss_check(const Field& f) {
  const std::size_t n = f.size();
  const double h = f.grid.dr();
  const Field fr = ddr(f);
  std::vector<double> dens(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = f.grid.r(i);
    dens[i] = (f[i] * f[i] + fr[i] * fr[i]) * r * r;
  }
  // tail[i] = int_{r_i}^{r_max} dens dr by the trapezoid rule
  std::vector<double> tail(n, 0.0);
  for (std::size_t i = n - 1; i-- > 0;) tail[i] = tail[i + 1] + 0.5 * h * (dens[i] + dens[i + 1]);
  double best = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (tail[i] <= 0.0) continue;
    const double ratio = f.grid.r(i) * std::fabs(f[i]) / std::sqrt(4.0 * kPi * tail[i]);
    best = std::max(best, ratio);
  }
  return best;
}

double hardy_check(const Field& f) {
  if (sup_norm(f) == 0.0) return 0.0;
  std::vector<double> flat(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) flat[i] = f[i] * f[i];
  const double quotient = std::sqrt(4.0 * kPi * trapezoid(flat, f.grid.dr()));
  const double gradient = l2(ddr(f));
  return quotient / gradient;
}

bool elementary_inequality(double a, double b, int k) {
  if (k < 1) throw ValidationError("elementary_inequality: k must be >= 1");
  const double scale = std::max(std::fabs(a), std::fabs(b));
  if (scale == 0.0) return true;
  a /= scale;
  b /= scale;
  double pa = a, pb = b;
  for (int j = 1; j < 2 * k - 1; ++j) {
    pa *= a;
    pb *= b;
  }
  return (a + b) * (pa + pb) >= 0.0;
}

void MonitorRecorder::record(const CharState& s) {
  const Snapshot snap = evaluate(s, level_);
  const bool full = level_ == MonitorLevel::Full;
  if (!have_prev_) {
    e1_0_ = snap.energy1;
    e2_0_ = snap.energy2;
    if (full && odd_integer(s.eq.p) && s.grid().size() < 4097)
      warn("E4 channel is stencil-noise limited below n = 4097");
  }

  const double n1_rate = snap.sup_dru * snap.sup_dru + snap.h.sup_ut * snap.h.sup_ut;
  const double n2_rate = snap.sup_drru * snap.sup_drru + snap.sup_dtdru * snap.sup_dtdru +
                         snap.sup_utt * snap.sup_utt + snap.sup_dru_over_r * snap.sup_dru_over_r;
  const double dru_rate = snap.sup_dru * snap.sup_dru;
  const double dt = have_prev_ ? s.t - prev_t_ : 0.0;
  if (have_prev_) {
    diss1_ += 0.5 * dt * (prev_rate1_ + snap.rate1);
    diss2_ += 0.5 * dt * (prev_rate2_ + snap.rate2);
    n1_sq_ += 0.5 * dt * (prev_n1_ + n1_rate);
    n2_sq_ += 0.5 * dt * (prev_n2_ + n2_rate);
    dru_sq_ += 0.5 * dt * (prev_dru_sq_ + dru_rate);
    n3_ = std::max(n3_, snap.e3);
  } else {
    n3_ = snap.e3;
  }
  prev_rate1_ = snap.rate1;
  prev_rate2_ = snap.rate2;
  prev_n1_ = n1_rate;
  prev_n2_ = n2_rate;
  prev_dru_sq_ = dru_rate;
  prev_t_ = s.t;
  have_prev_ = true;

  std::vector<double> row{dt,
                          snap.energy1,
                          diss1_,
                          snap.energy1 + diss1_ - e1_0_,
                          snap.energy2,
                          diss2_,
                          snap.energy2 + diss2_ - e2_0_,
                          snap.h.max};
  row.insert(row.end(), snap.l2k_p.begin(), snap.l2k_p.end());
  row.insert(row.end(), snap.l2k_m.begin(), snap.l2k_m.end());
  row.insert(row.end(), {snap.h.sup_ut, snap.h.sup_r_utt, snap.h.sup_r_drut, snap.sup_dru, snap.sup_drru,
                         snap.sup_dtdru, snap.sup_utt, snap.sup_dru_over_r, snap.e2, snap.e3, snap.e4, n3_,
                         dru_sq_, n1_sq_, n2_sq_, std::sqrt(n1_sq_), std::sqrt(n2_sq_), snap.strauss,
                         snap.hardy, snap.compat});
  series_.append(s.t, row);
}

MonitorSeries monitor_trajectory(std::span<const CharState> traj, MonitorLevel level) {
  MonitorRecorder rec(level);
  for (const auto& s : traj) rec.record(s);
  return rec.series();
}

namespace {

EnergyIdentity identity_from(const MonitorSeries& m, const char* energy, const char* diss, const char* res) {
  return {m.times(), m[energy], m[diss], m[res]};
}

} // namespace

EnergyIdentity energy_identity_first(std::span<const CharState> traj) {
  return identity_from(monitor_trajectory(traj), "energy1", "dissipation1", "residual1");
}

EnergyIdentity energy_identity_second(std::span<const CharState> traj) {
  return identity_from(monitor_trajectory(traj), "energy2", "dissipation2", "residual2");
}

StrichartzSeries strichartz_accumulators(std::span<const CharState> traj) {
  const MonitorSeries m = monitor_trajectory(traj);
  return {m.times(), m["N1"], m["N2"]};
}

} // namespace radwave
