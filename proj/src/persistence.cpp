#include "euler3d/persistence.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "euler3d/errors.hpp"

namespace euler3d {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr char kMagic[8] = {'E', 'U', 'L', 'R', 'C', 'K', 'P', 'T'};

std::uint64_t to_le(std::uint64_t v) {
  if constexpr (std::endian::native == std::endian::big) {
    std::uint64_t r = 0;
    for (int i = 0; i < 8; ++i) r |= ((v >> (8 * i)) & 0xffu) << (8 * (7 - i));
    return r;
  }
  return v;
}

std::uint32_t to_le32(std::uint32_t v) {
  if constexpr (std::endian::native == std::endian::big)
    return (v >> 24) | ((v >> 8) & 0xff00u) | ((v << 8) & 0xff0000u) | (v << 24);
  return v;
}

void put_u32(std::ostream& os, std::uint32_t v) {
  v = to_le32(v);
  os.write(reinterpret_cast<const char*>(&v), 4);
}

std::uint32_t get_u32(std::istream& is) {
  std::uint32_t v = 0;
  is.read(reinterpret_cast<char*>(&v), 4);
  return to_le32(v);
}

json grid_json(const GridSpec& g) { return {{"n", g.n}, {"length", g.length}, {"origin", g.origin}}; }

GridSpec grid_from(const json& j) {
  GridSpec g;
  g.n = j.at("n").get<std::array<int, 3>>();
  g.length = j.at("length").get<std::array<double, 3>>();
  g.origin = j.at("origin").get<std::array<double, 3>>();
  return g;
}

json solver_json(const SolverConfig& c) {
  return {{"cfl", c.cfl},
          {"dt_max", c.dt_max},
          {"t_end", c.t_end},
          {"cadence", c.cadence},
          {"filter",
           {{"kind", std::string(to_string(c.filter.kind))},
            {"alpha", c.filter.alpha},
            {"order", c.filter.order},
            {"quartic_coefficient", c.filter.quartic_coefficient}}}};
}

SolverConfig solver_from(const json& j) {
  SolverConfig c;
  c.cfl = j.at("cfl").get<double>();
  c.dt_max = j.at("dt_max").get<double>();
  c.t_end = j.at("t_end").get<double>();
  c.cadence = j.at("cadence").get<double>();
  const json& f = j.at("filter");
  c.filter.kind = parse_filter_kind(f.at("kind").get<std::string>());
  c.filter.alpha = f.at("alpha").get<double>();
  c.filter.order = f.at("order").get<int>();
  c.filter.quartic_coefficient = f.at("quartic_coefficient").get<double>();
  return c;
}

json kerr_json(const KerrICParams& p) {
  return {{"delta_y1", p.delta_y1},
          {"delta_y2", p.delta_y2},
          {"delta_x", p.delta_x},
          {"delta_z", p.delta_z},
          {"z0", p.z0},
          {"radius", p.radius},
          {"x0", p.x0},
          {"length", {p.length_x, p.length_y, p.length_z}},
          {"target_peak", p.target_peak},
          {"quartic_coefficient", p.quartic_coefficient},
          {"peak_lattice", p.peak_lattice},
          {"peak_lattice_offset", p.peak_lattice_offset},
          {"peak_from_simulation_grid", p.peak_from_simulation_grid}};
}

KerrICParams kerr_from(const json& j) {
  KerrICParams p;
  p.delta_y1 = j.at("delta_y1").get<double>();
  p.delta_y2 = j.at("delta_y2").get<double>();
  p.delta_x = j.at("delta_x").get<double>();
  p.delta_z = j.at("delta_z").get<double>();
  p.z0 = j.at("z0").get<double>();
  p.radius = j.at("radius").get<double>();
  p.x0 = j.at("x0").get<double>();
  const auto L = j.at("length").get<std::array<double, 3>>();
  p.length_x = L[0];
  p.length_y = L[1];
  p.length_z = L[2];
  p.target_peak = j.at("target_peak").get<double>();
  p.quartic_coefficient = j.at("quartic_coefficient").get<double>();
  p.peak_lattice = j.at("peak_lattice").get<std::array<int, 3>>();
  p.peak_lattice_offset = j.at("peak_lattice_offset").get<double>();
  p.peak_from_simulation_grid = j.at("peak_from_simulation_grid").get<bool>();
  return p;
}

json header_json(const Checkpoint& c) {
  const SpectralField& w = c.state.omega_hat;
  json h = {{"format", "euler3d-checkpoint"},
            {"version", kCheckpointVersion},
            {"grid", grid_json(w.grid())},
            {"t", c.state.t},
            {"step_count", c.state.step_count},
            {"last_dt", c.state.last_dt},
            {"solver", solver_json(c.state.config)},
            {"initial_condition", c.initial_condition},
            {"kerr", c.kerr ? kerr_json(*c.kerr) : json(nullptr)},
            {"payload",
             {{"components", w.components()},
              {"modes_per_component", w.modes()},
              {"mode_order", "ix, iy, kz row-major with kz fastest; ix, iy in FFT order; kz in [0, nz/2]"},
              {"scalar", "f64 little-endian (real, imaginary) pairs"},
              {"bytes", w.values().size() * 16}}}};
  return h;
}

std::ofstream open_out(const fs::path& path, std::ios::openmode mode = std::ios::out) {
  std::ofstream os(path, mode);
  if (!os) throw IoError("cannot open for writing: " + path.string());
  os.exceptions(std::ios::badbit);
  return os;
}

std::ifstream open_in(const fs::path& path, std::ios::openmode mode = std::ios::in) {
  std::ifstream is(path, mode);
  if (!is) throw IoError("cannot open for reading: " + path.string());
  return is;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim_cr(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  return s;
}

const char* axis_name(Axis a) { return a == Axis::x ? "x" : a == Axis::y ? "y" : "z"; }

Axis axis_from(std::string_view s) {
  if (s == "x") return Axis::x;
  if (s == "y") return Axis::y;
  if (s == "z") return Axis::z;
  throw FormatError("bad axis name: " + std::string(s));
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view text) {
  text = trim_cr(text);
  double v = 0.0;
  const char* first = text.data();
  if (!text.empty() && text.front() == '+') ++first;
  const auto res = std::from_chars(first, text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || text.empty())
    throw FormatError("not a number: '" + std::string(text) + "'");
  return v;
}

void save_checkpoint(const SimulationState& state, const fs::path& path) {
  save_checkpoint(Checkpoint{state, "kerr", std::nullopt}, path);
}

void save_checkpoint(const Checkpoint& ckpt, const fs::path& path) {
  const SpectralField& w = ckpt.state.omega_hat;
  if (w.components() != 3) throw std::invalid_argument("save_checkpoint: state has no vorticity");
  const json h = header_json(ckpt);
  const std::string text = h.dump();
  {
    std::ofstream os = open_out(path, std::ios::out | std::ios::binary | std::ios::trunc);
    os.write(kMagic, sizeof kMagic);
    put_u32(os, kCheckpointVersion);
    put_u32(os, static_cast<std::uint32_t>(text.size()));
    os.write(text.data(), static_cast<std::streamsize>(text.size()));
    std::vector<std::uint64_t> buf;
    buf.reserve(2 * w.modes());
    for (int c = 0; c < 3; ++c) {
      buf.clear();
      for (const Complex& z : w.component(c)) {
        buf.push_back(to_le(std::bit_cast<std::uint64_t>(z.real())));
        buf.push_back(to_le(std::bit_cast<std::uint64_t>(z.imag())));
      }
      os.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size() * 8));
    }
    os.flush();
    if (!os) throw IoError("write failed: " + path.string());
  }
  std::ofstream side = open_out(fs::path(path.string() + ".json"));
  side << h.dump(2) << '\n';
  if (!side) throw IoError("write failed: " + path.string() + ".json");
}

Checkpoint load_checkpoint(const fs::path& path) {
  std::ifstream is = open_in(path, std::ios::in | std::ios::binary);
  char magic[8] = {};
  is.read(magic, sizeof magic);
  if (!is || std::memcmp(magic, kMagic, sizeof magic) != 0)
    throw FormatError("not a checkpoint: " + path.string());
  const std::uint32_t version = get_u32(is);
  if (!is) throw FormatError("truncated checkpoint header: " + path.string());
  if (version != kCheckpointVersion)
    throw VersionError("checkpoint version " + std::to_string(version) + " is not supported (expected " +
                       std::to_string(kCheckpointVersion) + ")");
  const std::uint32_t hlen = get_u32(is);
  std::string text(hlen, '\0');
  is.read(text.data(), hlen);
  if (!is) throw FormatError("truncated checkpoint header: " + path.string());

  Checkpoint ck;
  std::size_t expected_bytes = 0;
  GridSpec g;
  try {
    const json h = json::parse(text);
    g = grid_from(h.at("grid"));
    g.validate();
    ck.state.t = h.at("t").get<double>();
    ck.state.step_count = h.at("step_count").get<long>();
    ck.state.last_dt = h.at("last_dt").get<double>();
    ck.state.config = solver_from(h.at("solver"));
    ck.initial_condition = h.at("initial_condition").get<std::string>();
    if (!h.at("kerr").is_null()) ck.kerr = kerr_from(h.at("kerr"));
    const json& p = h.at("payload");
    if (p.at("components").get<int>() != 3 || p.at("modes_per_component").get<std::size_t>() != g.num_modes())
      throw FormatError("checkpoint header grid does not match its payload description");
    expected_bytes = p.at("bytes").get<std::size_t>();
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad checkpoint header: ") + e.what());
  } catch (const ConfigError& e) {
    throw FormatError(std::string("bad checkpoint grid: ") + e.what());
  }
  if (expected_bytes != 3 * g.num_modes() * 16)
    throw FormatError("checkpoint payload size does not match the header grid");

  const auto payload_start = is.tellg();
  is.seekg(0, std::ios::end);
  const auto payload_bytes = static_cast<std::size_t>(is.tellg() - payload_start);
  if (payload_bytes < expected_bytes) throw FormatError("truncated checkpoint payload: " + path.string());
  if (payload_bytes > expected_bytes) throw FormatError("checkpoint payload larger than the header grid");
  is.seekg(payload_start);

  ck.state.omega_hat = SpectralField(g, 3);
  std::vector<std::uint64_t> buf(2 * g.num_modes());
  for (int c = 0; c < 3; ++c) {
    is.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size() * 8));
    if (!is) throw FormatError("truncated checkpoint payload: " + path.string());
    auto dst = ck.state.omega_hat.component(c);
    for (std::size_t m = 0; m < dst.size(); ++m)
      dst[m] = Complex(std::bit_cast<double>(to_le(buf[2 * m])), std::bit_cast<double>(to_le(buf[2 * m + 1])));
  }
  return ck;
}

SimulationState upsample_spectral(const SimulationState& state, const GridSpec& target) {
  const SpectralField& src = state.omega_hat;
  const GridSpec& g = src.grid();
  target.validate();
  for (int a = 0; a < 3; ++a) {
    if (target.n[a] < g.n[a]) throw ConfigError("upsample: target grid is coarser on some axis");
    if (target.length[a] != g.length[a] || target.origin[a] != g.origin[a])
      throw ConfigError("upsample: target box differs from the checkpoint box");
  }

  // Destinations of each source index per axis, with weights.
  struct Target {
    int index;
    double weight;
  };
  std::array<std::vector<std::vector<Target>>, 3> map;
  for (int a = 0; a < 3; ++a) {
    const Axis ax = static_cast<Axis>(a);
    const int ns = g.spectral_extent()[a];
    const int nt = target.n[a];
    map[a].resize(ns);
    for (int i = 0; i < ns; ++i) {
      const int k = g.mode_index(ax, i);
      const bool nyq = g.is_nyquist(ax, i) && nt > g.n[a];
      if (ax == Axis::z) {
        map[a][i].push_back({k, nyq ? 0.5 : 1.0});
      } else if (nyq) {
        map[a][i].push_back({nt + k, 0.5});
        map[a][i].push_back({-k, 0.5});
      } else {
        map[a][i].push_back({k >= 0 ? k : nt + k, 1.0});
      }
    }
  }

  SimulationState out;
  out.t = state.t;
  out.step_count = state.step_count;
  out.last_dt = state.last_dt;
  out.config = state.config;
  out.omega_hat = SpectralField(target, src.components());
  const auto ext = g.spectral_extent();
  for (int c = 0; c < src.components(); ++c)
    for (int ix = 0; ix < ext[0]; ++ix)
      for (int iy = 0; iy < ext[1]; ++iy)
        for (int kz = 0; kz < ext[2]; ++kz) {
          const Complex v = src.at(c, ix, iy, kz);
          if (v == Complex(0.0)) continue;
          for (const Target& tx : map[0][ix])
            for (const Target& ty : map[1][iy])
              for (const Target& tz : map[2][kz]) {
                const double w = tx.weight * ty.weight * tz.weight;
                out.omega_hat.at(c, tx.index, ty.index, tz.index) += w == 1.0 ? v : w * v;
              }
        }
  return out;
}

void append_diagnostics_row(const DiagnosticsRecord& r, const fs::path& path) {
  std::error_code ec;
  const bool fresh = !fs::exists(path, ec) || fs::file_size(path, ec) == 0;
  std::ofstream os = open_out(path, std::ios::out | std::ios::app);
  if (fresh) os << kDiagnosticsHeader << '\n';
  auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string(); };
  os << format_double(r.t) << ',' << format_double(r.max_vorticity) << ',' << format_double(r.max_location[0])
     << ',' << format_double(r.max_location[1]) << ',' << format_double(r.max_location[2]) << ','
     << format_double(r.max_velocity) << ',' << format_double(r.enstrophy) << ','
     << format_double(r.production_direct) << ',' << opt(r.production_diff) << ','
     << format_double(r.stretch_sup) << ',' << format_double(r.stretch_at_peak) << ',' << opt(r.bound_ratio)
     << '\n';
  os.flush();
  if (!os) throw IoError("write failed: " + path.string());
}

std::vector<DiagnosticsRecord> read_diagnostics(const fs::path& path) {
  std::ifstream is = open_in(path);
  std::string line;
  if (!std::getline(is, line) || trim_cr(line) != kDiagnosticsHeader)
    throw FormatError("unexpected diagnostics header in " + path.string());
  std::vector<DiagnosticsRecord> out;
  while (std::getline(is, line)) {
    if (trim_cr(line).empty()) continue;
    const auto f = split(trim_cr(line), ',');
    if (f.size() != 12) throw FormatError("diagnostics row has " + std::to_string(f.size()) + " fields");
    auto opt = [](std::string_view s) -> std::optional<double> {
      if (trim_cr(s).empty()) return std::nullopt;
      return parse_double(s);
    };
    DiagnosticsRecord r;
    r.t = parse_double(f[0]);
    r.max_vorticity = parse_double(f[1]);
    r.max_location = {parse_double(f[2]), parse_double(f[3]), parse_double(f[4])};
    r.max_velocity = parse_double(f[5]);
    r.enstrophy = parse_double(f[6]);
    r.production_direct = parse_double(f[7]);
    r.production_diff = opt(f[8]);
    r.stretch_sup = parse_double(f[9]);
    r.stretch_at_peak = parse_double(f[10]);
    r.bound_ratio = opt(f[11]);
    out.push_back(r);
  }
  return out;
}

PlaneSlice extract_plane_slice(const RealField& field, const PlaneSpec& plane) {
  const GridSpec& g = field.grid();
  if (plane.component < 0 || plane.component >= field.components())
    throw ConfigError("slice component out of range");
  const int a = index(plane.normal);
  const double h = g.spacing(plane.normal);
  const double rel = (plane.position - g.origin[a]) / h;
  if (!std::isfinite(rel) || rel < -1e-9 || rel > g.n[a] - 1 + 1e-9)
    throw ConfigError("slice plane lies outside the box");
  const double r = std::nearbyint(rel);
  if (std::abs(rel - r) > 1e-9) throw ConfigError("slice plane is not on a grid node");

  PlaneSlice s;
  s.normal = plane.normal;
  s.index = static_cast<int>(r);
  s.component = plane.component;
  std::array<Axis, 2> in_plane{};
  int k = 0;
  for (Axis ax : kAxes)
    if (ax != plane.normal) in_plane[k++] = ax;
  s.row_axis = in_plane[0];
  s.col_axis = in_plane[1];
  const int nr = g.n[index(s.row_axis)], nc = g.n[index(s.col_axis)];
  for (int i = 0; i < nr; ++i) s.row_coords.push_back(g.coordinate(s.row_axis, i));
  for (int j = 0; j < nc; ++j) s.col_coords.push_back(g.coordinate(s.col_axis, j));
  s.values.resize(static_cast<std::size_t>(nr) * nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) {
      std::array<int, 3> idx{};
      idx[a] = s.index;
      idx[index(s.row_axis)] = i;
      idx[index(s.col_axis)] = j;
      s.values[static_cast<std::size_t>(i) * nc + j] = field.at(s.component, idx[0], idx[1], idx[2]);
    }
  return s;
}

void export_plane_slice(const RealField& field, const PlaneSpec& plane, const fs::path& path) {
  const PlaneSlice s = extract_plane_slice(field, plane);
  std::ofstream os = open_out(path);
  os << "# normal " << axis_name(s.normal) << " index " << s.index << " position "
     << format_double(field.grid().coordinate(s.normal, s.index)) << " component " << s.component << '\n';
  os << "# rows " << axis_name(s.row_axis) << ' ' << s.row_coords.size() << " cols " << axis_name(s.col_axis)
     << ' ' << s.col_coords.size() << '\n';
  os << "-";
  for (double c : s.col_coords) os << ' ' << format_double(c);
  os << '\n';
  for (std::size_t i = 0; i < s.row_coords.size(); ++i) {
    os << format_double(s.row_coords[i]);
    for (std::size_t j = 0; j < s.col_coords.size(); ++j) os << ' ' << format_double(s.at(i, j));
    os << '\n';
  }
  if (!os) throw IoError("write failed: " + path.string());
}

PlaneSlice read_plane_slice(const fs::path& path) {
  std::ifstream is = open_in(path);
  PlaneSlice s;
  std::string line, tag, name;
  std::size_t nr = 0, nc = 0;
  {
    std::getline(is, line);
    std::istringstream ls(line);
    std::string pos;
    ls >> tag >> tag >> name >> tag >> s.index >> tag >> pos >> tag >> s.component;
    if (!ls) throw FormatError("bad slice header");
    s.normal = axis_from(name);
  }
  {
    std::getline(is, line);
    std::istringstream ls(line);
    std::string rn, cn;
    ls >> tag >> tag >> rn >> nr >> tag >> cn >> nc;
    if (!ls) throw FormatError("bad slice header");
    s.row_axis = axis_from(rn);
    s.col_axis = axis_from(cn);
  }
  auto fields = [](const std::string& l) {
    std::vector<std::string> out;
    std::istringstream ls(l);
    std::string w;
    while (ls >> w) out.push_back(w);
    return out;
  };
  std::getline(is, line);
  auto head = fields(line);
  if (head.size() != nc + 1) throw FormatError("bad slice column row");
  for (std::size_t j = 1; j < head.size(); ++j) s.col_coords.push_back(parse_double(head[j]));
  for (std::size_t i = 0; i < nr; ++i) {
    if (!std::getline(is, line)) throw FormatError("truncated slice");
    auto row = fields(line);
    if (row.size() != nc + 1) throw FormatError("bad slice row");
    s.row_coords.push_back(parse_double(row[0]));
    for (std::size_t j = 1; j < row.size(); ++j) s.values.push_back(parse_double(row[j]));
  }
  return s;
}

void write_spectrum(const SpectrumRow& row, const fs::path& path) {
  std::ofstream os = open_out(path);
  os << "# t " << format_double(row.t) << '\n' << "shell,energy,enstrophy\n";
  os << 0 << ',' << format_double(row.energy.zero_mode) << ',' << format_double(row.enstrophy.zero_mode) << '\n';
  const std::size_t n = std::max(row.energy.shells.size(), row.enstrophy.shells.size());
  for (std::size_t i = 0; i < n; ++i) {
    const double e = i < row.energy.shells.size() ? row.energy.shells[i] : 0.0;
    const double z = i < row.enstrophy.shells.size() ? row.enstrophy.shells[i] : 0.0;
    os << i + 1 << ',' << format_double(e) << ',' << format_double(z) << '\n';
  }
  if (!os) throw IoError("write failed: " + path.string());
}

SpectrumRow read_spectrum(const fs::path& path) {
  std::ifstream is = open_in(path);
  SpectrumRow row;
  std::string line;
  std::getline(is, line);
  if (line.rfind("# t ", 0) != 0) throw FormatError("bad spectrum header");
  row.t = parse_double(std::string_view(line).substr(4));
  std::getline(is, line);
  if (trim_cr(line) != "shell,energy,enstrophy") throw FormatError("bad spectrum header");
  while (std::getline(is, line)) {
    if (trim_cr(line).empty()) continue;
    const auto f = split(trim_cr(line), ',');
    if (f.size() != 3) throw FormatError("bad spectrum row");
    const double shell = parse_double(f[0]);
    if (shell == 0) {
      row.energy.zero_mode = parse_double(f[1]);
      row.enstrophy.zero_mode = parse_double(f[2]);
    } else {
      row.energy.shells.push_back(parse_double(f[1]));
      row.enstrophy.shells.push_back(parse_double(f[2]));
    }
  }
  return row;
}

void write_vortex_line(const VortexLine& line, const fs::path& path) {
  std::ofstream os = open_out(path);
  os << "# ds " << format_double(line.ds) << " points " << line.points.size() << " arclength "
     << format_double(line.arclength()) << (line.stopped_early ? " stopped_early" : "") << '\n';
  os << "x,y,z,vorticity\n";
  for (std::size_t i = 0; i < line.points.size(); ++i) {
    const Vec3& p = line.points[i];
    os << format_double(p[0]) << ',' << format_double(p[1]) << ',' << format_double(p[2]) << ','
       << format_double(line.vorticity[i]) << '\n';
  }
  if (!os) throw IoError("write failed: " + path.string());
}

void write_geometry_report(const GeometryReport& r, const fs::path& path) {
  std::ofstream os = open_out(path);
  const char* regime = r.regime == ExponentRegime::subcritical ? "subcritical"
                       : r.regime == ExponentRegime::critical  ? "critical"
                                                               : "supercritical";
  auto flag = [](bool b) { return b ? "true" : "false"; };
  os << "kappa_max = " << format_double(r.kappa_max) << '\n'
     << "div_xi_max = " << format_double(r.div_xi_max) << '\n'
     << "blowup_time = " << format_double(r.blowup_time) << '\n'
     << "velocity_exponent = " << format_double(r.velocity_exponent) << '\n'
     << "length_exponent = " << format_double(r.length_exponent) << '\n'
     << "c_u = " << format_double(r.c_u) << '\n'
     << "c_l = " << format_double(r.c_l) << '\n'
     << "c_0 = " << format_double(r.c_0) << '\n'
     << "regime = " << regime << '\n'
     << "velocity_condition = " << flag(r.velocity_condition) << '\n'
     << "length_lower_bound = " << flag(r.length_lower_bound) << '\n'
     << "length_upper_bound = " << flag(r.length_upper_bound) << '\n'
     << "critical_inequality = "
     << (r.critical_inequality ? flag(*r.critical_inequality) : "not_evaluated") << '\n'
     << "conditions_met = " << flag(r.conditions_met) << '\n';
  if (!os) throw IoError("write failed: " + path.string());
}

}  // namespace euler3d
