#include "euler3d/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "euler3d/errors.hpp"
#include "euler3d/persistence.hpp"

namespace euler3d {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double plain_number(std::string_view s, std::string_view key) {
  try {
    return parse_double(s);
  } catch (const FormatError&) {
    throw ConfigError("bad value for " + std::string(key) + ": '" + std::string(s) + "'");
  }
}

double parse_real(std::string_view raw, std::string_view key) {
  std::string_view s = trim(raw);
  const auto pi_pos = s.find("pi");
  if (pi_pos == std::string_view::npos) return plain_number(s, key);
  std::string_view coef = trim(s.substr(0, pi_pos));
  std::string_view rest = trim(s.substr(pi_pos + 2));
  if (!coef.empty() && coef.back() == '*') coef = trim(coef.substr(0, coef.size() - 1));
  double v = std::numbers::pi * (coef.empty() ? 1.0 : plain_number(coef, key));
  if (!rest.empty()) {
    if (rest.front() != '/') throw ConfigError("bad value for " + std::string(key) + ": '" + std::string(raw) + "'");
    v /= plain_number(trim(rest.substr(1)), key);
  }
  return v;
}

int parse_int(std::string_view raw, std::string_view key) {
  const std::string_view s = trim(raw);
  int v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw ConfigError("bad integer for " + std::string(key) + ": '" + std::string(raw) + "'");
  return v;
}

bool parse_bool(std::string_view raw, std::string_view key) {
  const std::string_view s = trim(raw);
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw ConfigError("bad boolean for " + std::string(key) + ": '" + std::string(raw) + "'");
}

struct KeyDef {
  std::string name;
  std::function<void(RunConfig&, std::string_view)> set;
  std::function<std::string(const RunConfig&)> get;
};

template <class Ref>
KeyDef real(std::string name, Ref ref) {
  return {name, [ref, name](RunConfig& c, std::string_view v) { ref(c) = parse_real(v, name); },
          [ref](const RunConfig& c) { return format_double(ref(c)); }};
}

template <class Ref>
KeyDef integer(std::string name, Ref ref) {
  return {name, [ref, name](RunConfig& c, std::string_view v) { ref(c) = parse_int(v, name); },
          [ref](const RunConfig& c) { return std::to_string(ref(c)); }};
}

template <class Ref>
KeyDef boolean(std::string name, Ref ref) {
  return {name, [ref, name](RunConfig& c, std::string_view v) { ref(c) = parse_bool(v, name); },
          [ref](const RunConfig& c) { return std::string(ref(c) ? "true" : "false"); }};
}

const std::vector<KeyDef>& key_table() {
  static const std::vector<KeyDef> table = [] {
    std::vector<KeyDef> t;
    t.push_back({"ic", [](RunConfig& c, std::string_view v) { c.ic = parse_initial_kind(trim(v)); },
                 [](const RunConfig& c) { return std::string(to_string(c.ic)); }});
    t.push_back(integer("nx", [](auto& c) -> auto& { return c.n[0]; }));
    t.push_back(integer("ny", [](auto& c) -> auto& { return c.n[1]; }));
    t.push_back(integer("nz", [](auto& c) -> auto& { return c.n[2]; }));
    t.push_back(real("lx", [](auto& c) -> auto& { return c.length[0]; }));
    t.push_back(real("ly", [](auto& c) -> auto& { return c.length[1]; }));
    t.push_back(real("lz", [](auto& c) -> auto& { return c.length[2]; }));
    t.push_back({"filter",
                 [](RunConfig& c, std::string_view v) { c.solver.filter.kind = parse_filter_kind(trim(v)); },
                 [](const RunConfig& c) { return std::string(to_string(c.solver.filter.kind)); }});
    t.push_back(real("filter_alpha", [](auto& c) -> auto& { return c.solver.filter.alpha; }));
    t.push_back(integer("filter_order", [](auto& c) -> auto& { return c.solver.filter.order; }));
    t.push_back(real("cfl", [](auto& c) -> auto& { return c.solver.cfl; }));
    t.push_back(real("dt_max", [](auto& c) -> auto& { return c.solver.dt_max; }));
    t.push_back(real("t_end", [](auto& c) -> auto& { return c.solver.t_end; }));
    t.push_back(real("cadence", [](auto& c) -> auto& { return c.solver.cadence; }));
    t.push_back({"output_dir", [](RunConfig& c, std::string_view v) { c.output_dir = std::string(trim(v)); },
                 [](const RunConfig& c) { return c.output_dir; }});
    t.push_back(boolean("checkpoints", [](auto& c) -> auto& { return c.checkpoints; }));
    t.push_back(boolean("spectra", [](auto& c) -> auto& { return c.spectra; }));
    t.push_back(real("kerr.delta_y1", [](auto& c) -> auto& { return c.kerr.delta_y1; }));
    t.push_back(real("kerr.delta_y2", [](auto& c) -> auto& { return c.kerr.delta_y2; }));
    t.push_back(real("kerr.delta_x", [](auto& c) -> auto& { return c.kerr.delta_x; }));
    t.push_back(real("kerr.delta_z", [](auto& c) -> auto& { return c.kerr.delta_z; }));
    t.push_back(real("kerr.z0", [](auto& c) -> auto& { return c.kerr.z0; }));
    t.push_back(real("kerr.radius", [](auto& c) -> auto& { return c.kerr.radius; }));
    t.push_back(real("kerr.x0", [](auto& c) -> auto& { return c.kerr.x0; }));
    t.push_back(real("kerr.target_peak", [](auto& c) -> auto& { return c.kerr.target_peak; }));
    t.push_back(
        real("kerr.quartic_coefficient", [](auto& c) -> auto& { return c.kerr.quartic_coefficient; }));
    t.push_back({"kerr.peak_lattice",
                 [](RunConfig& c, std::string_view v) {
                   std::string s(v);
                   for (char& ch : s)
                     if (ch == ',' || ch == 'x') ch = ' ';
                   std::istringstream is(s);
                   std::array<int, 3> lat{};
                   std::string extra;
                   if (!(is >> lat[0] >> lat[1] >> lat[2]) || (is >> extra))
                     throw ConfigError("bad value for kerr.peak_lattice: '" + std::string(v) + "'");
                   c.kerr.peak_lattice = lat;
                 },
                 [](const RunConfig& c) {
                   const auto& l = c.kerr.peak_lattice;
                   return std::to_string(l[0]) + "," + std::to_string(l[1]) + "," + std::to_string(l[2]);
                 }});
    t.push_back(
        real("kerr.peak_lattice_offset", [](auto& c) -> auto& { return c.kerr.peak_lattice_offset; }));
    t.push_back(boolean("kerr.peak_from_simulation_grid",
                        [](auto& c) -> auto& { return c.kerr.peak_from_simulation_grid; }));
    t.push_back(real("amplitude_a", [](auto& c) -> auto& { return c.amplitudes[0]; }));
    t.push_back(real("amplitude_b", [](auto& c) -> auto& { return c.amplitudes[1]; }));
    t.push_back(real("amplitude_c", [](auto& c) -> auto& { return c.amplitudes[2]; }));
    return t;
  }();
  return table;
}

const KeyDef& find_key(std::string_view key) {
  for (const KeyDef& k : key_table())
    if (k.name == key) return k;
  throw ConfigError("unknown config key '" + std::string(key) + "'");
}

}  // namespace

std::string_view to_string(InitialKind k) {
  switch (k) {
    case InitialKind::kerr: return "kerr";
    case InitialKind::beltrami: return "beltrami";
    case InitialKind::taylor_green: return "taylor_green";
  }
  return "kerr";
}

InitialKind parse_initial_kind(std::string_view name) {
  if (name == "kerr") return InitialKind::kerr;
  if (name == "beltrami" || name == "beltrami_abc") return InitialKind::beltrami;
  if (name == "taylor_green") return InitialKind::taylor_green;
  throw ConfigError("unknown initial condition '" + std::string(name) + "'");
}

GridSpec RunConfig::grid() const { return GridSpec::centered(n, length); }

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const KeyDef& d : key_table()) k.push_back(d.name);
    return k;
  }();
  return keys;
}

void set_config_value(RunConfig& cfg, std::string_view key, std::string_view value) {
  find_key(trim(key)).set(cfg, value);
  cfg.explicit_keys.insert(std::string(trim(key)));
}

RunConfig parse_config_text(std::string_view text, RunConfig base) {
  std::set<std::string> seen;
  std::istringstream is{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key(trim(line.substr(0, eq)));
    if (!seen.insert(key).second)
      throw ConfigError("line " + std::to_string(lineno) + ": repeated key '" + key + "'");
    try {
      set_config_value(base, key, line.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return base;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot read config file: " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return parse_config_text(ss.str(), std::move(base));
}

void apply_overrides(RunConfig& cfg, const std::vector<std::string>& assignments) {
  for (const std::string& a : assignments) {
    const auto eq = a.find('=');
    if (eq == std::string::npos) throw ConfigError("override '" + a + "' is not key=value");
    set_config_value(cfg, a.substr(0, eq), std::string_view(a).substr(eq + 1));
  }
}

void resolve_config(RunConfig& cfg) {
  const bool kerr = cfg.ic == InitialKind::kerr;
  const std::array<double, 3> box = kerr ? std::array<double, 3>{cfg.kerr.length_x, cfg.kerr.length_y,
                                                                 cfg.kerr.length_z}
                                         : std::array<double, 3>{2 * std::numbers::pi, 2 * std::numbers::pi,
                                                                 2 * std::numbers::pi};
  const char* lkeys[3] = {"lx", "ly", "lz"};
  for (int a = 0; a < 3; ++a)
    if (!cfg.explicit_keys.count(lkeys[a])) cfg.length[a] = box[a];
  if (kerr) {
    cfg.kerr.length_x = cfg.length[0];
    cfg.kerr.length_y = cfg.length[1];
    cfg.kerr.length_z = cfg.length[2];
    cfg.kerr.validate();
  } else {
    for (double L : cfg.length)
      if (std::abs(L - 2 * std::numbers::pi) > 1e-12)
        throw ConfigError("analytic initial conditions need the 2pi-periodic cube");
  }
  if (!cfg.explicit_keys.count("dt_max")) cfg.solver.dt_max = 0.01 * cfg.length[2];
  cfg.grid().validate();
  cfg.solver.validate();
  if (cfg.output_dir.empty()) throw ConfigError("output_dir must not be empty");
}

std::string config_text(const RunConfig& cfg) {
  std::string out;
  for (const KeyDef& k : key_table()) out += k.name + " = " + k.get(cfg) + "\n";
  return out;
}

}  // namespace euler3d
