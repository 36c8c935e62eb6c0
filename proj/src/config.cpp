#include "radwave/config.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "radwave/error.hpp"

namespace radwave {

std::string to_string(Scheme s) {
  switch (s) {
  case Scheme::Characteristic: return "characteristic";
  case Scheme::Leapfrog: return "leapfrog";
  default: return "both";
  }
}

std::pair<DataFamily, DataFamily> RunConfig::families() const {
  if (random_data) return random_families(seed);
  return {u0, u1};
}

double RunConfig::support_radius() const {
  const auto [f0, f1] = families();
  return std::max(f0.radius, f1.radius);
}

void RunConfig::validate() const {
  if (eq.damped && !(eq.p >= 3.0) ) throw ValidationError("p must be >= 3");
  if (!std::isfinite(eq.p)) throw ValidationError("p must be finite");
  u0.validate();
  u1.validate();
  if (n < 3) throw ValidationError("n must be >= 3");
  if (!(r_max > 0.0)) throw ValidationError("r_max must be positive");
  policy.validate();
  if (!(leapfrog_courant > 0.0 && leapfrog_courant <= 1.0))
    throw ValidationError("leapfrog_courant must lie in (0, 1]");
  if (!(t_final >= 0.0) || !std::isfinite(t_final)) throw ValidationError("T_final must be >= 0");
  if (monitor_stride < 1) throw ValidationError("monitor_stride must be >= 1");
  if (snapshot_stride < 0) throw ValidationError("snapshot_stride must be >= 0");
  const double reach = support_radius() + t_final;
  if (reach > r_max)
    throw DomainTooSmall("support radius + T_final = " + std::to_string(reach) + " exceeds r_max = " +
                         std::to_string(r_max));
}

bool operator==(const RunConfig& a, const RunConfig& b) {
  return a.eq == b.eq && a.u0 == b.u0 && a.u1 == b.u1 && a.random_data == b.random_data && a.seed == b.seed &&
         a.r_max == b.r_max && a.n == b.n && a.policy.courant == b.policy.courant &&
         a.policy.safety == b.policy.safety && a.policy.dt_floor == b.policy.dt_floor &&
         a.leapfrog_courant == b.leapfrog_courant && a.scheme == b.scheme && a.t_final == b.t_final &&
         a.monitor_stride == b.monitor_stride && a.snapshot_stride == b.snapshot_stride &&
         a.monitors == b.monitors && a.out_dir == b.out_dir;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_real(const std::string& v, int line, const std::string& key) {
  double out = 0.0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size() || !std::isfinite(out))
    throw ConfigError(line, "'" + key + "' expects a real number, got '" + v + "'");
  return out;
}

long long to_int(const std::string& v, int line, const std::string& key) {
  long long out = 0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size())
    throw ConfigError(line, "'" + key + "' expects an integer, got '" + v + "'");
  return out;
}

bool to_bool(const std::string& v, int line, const std::string& key) {
  if (v == "true") return true;
  if (v == "false") return false;
  throw ConfigError(line, "'" + key + "' expects true or false, got '" + v + "'");
}

using Setter = std::function<void(RunConfig&, const std::string&, int, const std::string&)>;

void set_family(DataFamily& f, const std::string& field, const std::string& v, int line, const std::string& key) {
  if (field == "shape") {
    try {
      f.shape = shape_from_string(v);
    } catch (const ValidationError& e) {
      throw ConfigError(line, e.what());
    }
  } else if (field == "amplitude") {
    f.amplitude = to_real(v, line, key);
  } else if (field == "radius") {
    f.radius = to_real(v, line, key);
  } else {
    f.smoothness = static_cast<int>(to_int(v, line, key));
  }
}

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = [] {
    std::map<std::string, Setter> t;
    t["scheme.p"] = [](RunConfig& c, const std::string& v, int l, const std::string& k) { c.eq.p = to_real(v, l, k); };
    t["scheme.damped"] = [](RunConfig& c, const std::string& v, int l, const std::string& k) {
      c.eq.damped = to_bool(v, l, k);
    };
    t["scheme.method"] = [](RunConfig& c, const std::string& v, int l, const std::string&) {
      if (v == "characteristic") c.scheme = Scheme::Characteristic;
      else if (v == "leapfrog") c.scheme = Scheme::Leapfrog;
      else if (v == "both") c.scheme = Scheme::Both;
      else throw ConfigError(l, "'scheme.method' must be characteristic, leapfrog or both, got '" + v + "'");
    };
    t["scheme.courant"] = [](RunConfig& c, const std::string& v, int l, const std::string& k) {
      c.policy.courant = to_real(v, l, k);
    };
    t["scheme.safety"] = [](RunConfig& c, const std::string& v, int l, const std::string& k) {
      c.policy.safety = to_real(v, l, k);
    };
    t["scheme.dt_floor"] = [](RunConfig& c, const std::string& v, int l, const std::string& k) {
      c.policy.dt_floor = to_real(v, l, k);
    };
    t["scheme.leapfrog_courant"] = [](RunConfig& c, const std::string& v, int l, const std::string& k) {
      c.leapfrog_courant = to_real(v, l, k);
    };
    for (const char* which : {"u0", "u1"}) {
      for (const char* field : {"shape", "amplitude", "radius", "smoothness"}) {
        const std::string w = which, f = field;
        t["data." + w + "." + f] = [w, f](RunConfig& c, const std::string& v, int l, const std::string& k) {
          set_family(w == "u0" ? c.u0 : c.u1, f, v, l, k);
        };
      }
    }
    t["data.random"] = [](RunConfig& c, const std::string& v, int l, const std::string& k) {
      c.random_data = to_bool(v, l, k);
    };
    t["data.seed"] = [](RunConfig& c, const std::string& v, int l, const std::string& k) {
      const long long s = to_int(v, l, k);
      if (s < 0) throw ConfigError(l, "'data.seed' must be non-negative");
      c.seed = static_cast<std::uint64_t>(s);
    };
    t["grid.r_max"] = [](RunConfig& c, const std::string& v, int l, const std::string& k) { c.r_max = to_real(v, l, k); };
    t["grid.n"] = [](RunConfig& c, const std::string& v, int l, const std::string& k) {
      const long long n = to_int(v, l, k);
      if (n < 3) throw ConfigError(l, "'grid.n' must be >= 3");
      c.n = static_cast<std::size_t>(n);
    };
    t["time.T_final"] = [](RunConfig& c, const std::string& v, int l, const std::string& k) {
      c.t_final = to_real(v, l, k);
    };
    t["time.monitor_stride"] = [](RunConfig& c, const std::string& v, int l, const std::string& k) {
      c.monitor_stride = static_cast<int>(to_int(v, l, k));
    };
    t["time.snapshot_stride"] = [](RunConfig& c, const std::string& v, int l, const std::string& k) {
      c.snapshot_stride = static_cast<int>(to_int(v, l, k));
    };
    t["output.dir"] = [](RunConfig& c, const std::string& v, int, const std::string&) { c.out_dir = v; };
    t["output.monitors"] = [](RunConfig& c, const std::string& v, int l, const std::string&) {
      if (v == "full") c.monitors = MonitorLevel::Full;
      else if (v == "light") c.monitors = MonitorLevel::Light;
      else throw ConfigError(l, "'output.monitors' must be full or light, got '" + v + "'");
    };
    return t;
  }();
  return table;
}

// Validation failures mapped back to the line of the offending key.
const std::map<std::string, std::string>& validated_keys() {
  static const std::map<std::string, std::string> m = {
      {"p must be >= 3", "scheme.p"},
      {"courant must lie in (0, 1]", "scheme.courant"},
      {"safety must lie in (0, 1)", "scheme.safety"},
      {"dt_floor must be positive", "scheme.dt_floor"},
      {"leapfrog_courant must lie in (0, 1]", "scheme.leapfrog_courant"},
      {"r_max must be positive", "grid.r_max"},
      {"T_final must be >= 0", "time.T_final"},
      {"monitor_stride must be >= 1", "time.monitor_stride"},
      {"snapshot_stride must be >= 0", "time.snapshot_stride"},
  };
  return m;
}

} // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  std::map<std::string, int> seen;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') throw ConfigError(line, "malformed section header '" + s + "'");
      section = trim(s.substr(1, s.size() - 2));
      static const std::set<std::string> sections = {"scheme", "data", "grid", "time", "output"};
      if (!sections.count(section)) throw ConfigError(line, "unknown section [" + section + "]");
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ConfigError(line, "expected 'key = value', got '" + s + "'");
    if (section.empty()) throw ConfigError(line, "key outside of any section");
    const std::string key = section + "." + trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end()) throw ConfigError(line, "unknown key '" + key + "'");
    if (value.empty()) throw ConfigError(line, "missing value for '" + key + "'");
    if (const auto [pos, fresh] = seen.emplace(key, line); !fresh)
      throw ConfigError(line, "duplicate key '" + key + "' (first set on line " + std::to_string(pos->second) + ")");
    it->second(cfg, value, line, key);
  }
  try {
    cfg.validate();
  } catch (const DomainTooSmall&) {
    throw;
  } catch (const ValidationError& e) {
    const auto k = validated_keys().find(e.what());
    const int at = (k != validated_keys().end() && seen.count(k->second)) ? seen[k->second] : 0;
    throw ConfigError(at, e.what());
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

namespace {

std::string real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit_family(std::ostringstream& o, const char* name, const DataFamily& f) {
  o << name << ".shape = " << to_string(f.shape) << '\n'
    << name << ".amplitude = " << real(f.amplitude) << '\n'
    << name << ".radius = " << real(f.radius) << '\n'
    << name << ".smoothness = " << f.smoothness << '\n';
}

} // namespace

std::string emit_config(const RunConfig& c) {
  std::ostringstream o;
  o << "[scheme]\n"
    << "p = " << real(c.eq.p) << '\n'
    << "damped = " << (c.eq.damped ? "true" : "false") << '\n'
    << "method = " << to_string(c.scheme) << '\n'
    << "courant = " << real(c.policy.courant) << '\n'
    << "safety = " << real(c.policy.safety) << '\n'
    << "dt_floor = " << real(c.policy.dt_floor) << '\n'
    << "leapfrog_courant = " << real(c.leapfrog_courant) << '\n'
    << "\n[data]\n";
  emit_family(o, "u0", c.u0);
  emit_family(o, "u1", c.u1);
  o << "random = " << (c.random_data ? "true" : "false") << '\n'
    << "seed = " << c.seed << '\n'
    << "\n[grid]\n"
    << "r_max = " << real(c.r_max) << '\n'
    << "n = " << c.n << '\n'
    << "\n[time]\n"
    << "T_final = " << real(c.t_final) << '\n'
    << "monitor_stride = " << c.monitor_stride << '\n'
    << "snapshot_stride = " << c.snapshot_stride << '\n'
    << "\n[output]\n"
    << "dir = " << c.out_dir << '\n'
    << "monitors = " << (c.monitors == MonitorLevel::Full ? "full" : "light") << '\n';
  return o.str();
}

} // namespace radwave
