#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>

#include "euler3d/errors.hpp"
#include "euler3d/persistence.hpp"
#include "euler3d/spectral.hpp"
#include "support.hpp"

using namespace euler3d;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "euler3d_persistence_test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  fs::remove(p);
  return p;
}

SimulationState random_state(const GridSpec& g, unsigned seed) {
  SimulationState s;
  s.omega_hat = forward_transform(fixtures::random_field(g, 3, seed));
  zero_nyquist_modes(s.omega_hat);
  for (int c = 0; c < 3; ++c) s.omega_hat.at(c, 0, 0, 0) = 0.0;
  s.t = 1.0 / 3.0;
  s.step_count = 17;
  s.last_dt = 0.0123456789;
  s.config.t_end = 2.5;
  s.config.cadence = 0.25;
  s.config.filter.kind = FilterKind::two_thirds;
  return s;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

void spit(const fs::path& p, const std::string& bytes) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << bytes;
}

}  // namespace

TEST(Checkpoint, RoundTripIsBitExact) {
  const SimulationState s = random_state(GridSpec::kerr_box(12, 8, 10), 3);
  Checkpoint c{s, "kerr", KerrICParams{}};
  c.kerr->radius = 0.7;
  const fs::path p = scratch("round.ckpt");
  save_checkpoint(c, p);
  EXPECT_TRUE(fs::exists(p.string() + ".json"));
  const Checkpoint r = load_checkpoint(p);
  EXPECT_EQ(r.state.omega_hat.grid(), s.omega_hat.grid());
  ASSERT_EQ(r.state.omega_hat.values().size(), s.omega_hat.values().size());
  EXPECT_EQ(std::memcmp(r.state.omega_hat.values().data(), s.omega_hat.values().data(),
                        s.omega_hat.values().size_bytes()),
            0);
  EXPECT_EQ(r.state.t, s.t);
  EXPECT_EQ(r.state.step_count, 17);
  EXPECT_EQ(r.state.last_dt, s.last_dt);
  EXPECT_EQ(r.state.config.t_end, 2.5);
  EXPECT_EQ(r.state.config.cadence, 0.25);
  EXPECT_EQ(r.state.config.filter.kind, FilterKind::two_thirds);
  EXPECT_EQ(r.state.config.cfl, s.config.cfl);
  EXPECT_EQ(r.initial_condition, "kerr");
  ASSERT_TRUE(r.kerr.has_value());
  EXPECT_EQ(r.kerr->radius, 0.7);
  EXPECT_EQ(r.kerr->peak_lattice, c.kerr->peak_lattice);
}

TEST(Checkpoint, VersionByteRejected) {
  const fs::path p = scratch("version.ckpt");
  save_checkpoint(random_state(GridSpec::periodic_cube(8), 1), p);
  std::string bytes = slurp(p);
  bytes[8] = static_cast<char>(kCheckpointVersion + 1);
  spit(p, bytes);
  EXPECT_THROW(load_checkpoint(p), VersionError);
}

TEST(Checkpoint, BadMagicRejected) {
  const fs::path p = scratch("magic.ckpt");
  save_checkpoint(random_state(GridSpec::periodic_cube(8), 1), p);
  std::string bytes = slurp(p);
  bytes[0] = 'X';
  spit(p, bytes);
  EXPECT_THROW(load_checkpoint(p), FormatError);
}

TEST(Checkpoint, PayloadMismatchRejected) {
  // 32^3 header spliced onto a 64^3 payload
  const fs::path small = scratch("small.ckpt"), big = scratch("big.ckpt"), mixed = scratch("mixed.ckpt");
  save_checkpoint(random_state(GridSpec::periodic_cube(32), 1), small);
  save_checkpoint(random_state(GridSpec::periodic_cube(64), 2), big);
  const std::string a = slurp(small), b = slurp(big);
  std::uint32_t ha = 0, hb = 0;
  std::memcpy(&ha, a.data() + 12, 4);
  std::memcpy(&hb, b.data() + 12, 4);
  spit(mixed, a.substr(0, 16 + ha) + b.substr(16 + hb));
  EXPECT_THROW(load_checkpoint(mixed), FormatError);
  spit(mixed, a.substr(0, a.size() - 8));
  EXPECT_THROW(load_checkpoint(mixed), FormatError);
  spit(mixed, a.substr(0, 10));
  EXPECT_THROW(load_checkpoint(mixed), FormatError);
}

TEST(Checkpoint, MissingFileIsIoError) {
  EXPECT_THROW(load_checkpoint(scratch("absent.ckpt")), IoError);
}

TEST(Checkpoint, RestartEquivalence) {
  SimulationState s;
  s.omega_hat = forward_transform(analytic_test_fields(AnalyticFlow::taylor_green, GridSpec::periodic_cube(16)).vorticity);
  zero_nyquist_modes(s.omega_hat);
  s.config.dt_max = 0.05;
  SimulationState whole = s;
  whole.config.t_end = 0.6;
  run_simulation(whole);

  SimulationState first = s;
  first.config.t_end = 0.3;
  run_simulation(first);
  const fs::path p = scratch("restart.ckpt");
  save_checkpoint(first, p);
  SimulationState second = load_checkpoint(p).state;
  second.config.t_end = 0.6;
  run_simulation(second);
  EXPECT_EQ(second.t, whole.t);
  EXPECT_LE(fixtures::max_abs_diff(second.omega_hat, whole.omega_hat), 1e-12 * fixtures::max_abs(whole.omega_hat));
}

TEST(Upsample, ModesAndNodesPreserved) {
  const GridSpec coarse = GridSpec::kerr_box(8, 12, 10);
  const GridSpec fine = GridSpec::kerr_box(16, 24, 20);
  const SimulationState s = random_state(coarse, 7);
  const SimulationState u = upsample_spectral(s, fine);
  EXPECT_EQ(u.t, s.t);
  EXPECT_EQ(u.step_count, s.step_count);
  EXPECT_EQ(u.config.t_end, s.config.t_end);

  std::size_t nonzero_new = 0;
  for (int c = 0; c < 3; ++c)
    for (int ix = 0; ix < 16; ++ix)
      for (int iy = 0; iy < 24; ++iy)
        for (int kz = 0; kz <= 10; ++kz) {
          const int kx = fine.mode_index(Axis::x, ix), ky = fine.mode_index(Axis::y, iy);
          const bool shared = std::abs(kx) < 4 && std::abs(ky) < 6 && kz < 5;
          const Complex v = u.omega_hat.at(c, ix, iy, kz);
          if (shared) {
            const int cx = kx < 0 ? kx + 8 : kx, cy = ky < 0 ? ky + 12 : ky;
            EXPECT_EQ(v, s.omega_hat.at(c, cx, cy, kz));
          } else if (v != 0.0) {
            ++nonzero_new;
          }
        }
  EXPECT_EQ(nonzero_new, 0u);

  const RealField a = inverse_transform(s.omega_hat), b = inverse_transform(u.omega_hat);
  double err = 0;
  for (int c = 0; c < 3; ++c)
    for (int ix = 0; ix < 8; ++ix)
      for (int iy = 0; iy < 12; ++iy)
        for (int iz = 0; iz < 10; ++iz)
          err = std::max(err, std::abs(a.at(c, ix, iy, iz) - b.at(c, 2 * ix, 2 * iy, 2 * iz)));
  EXPECT_LE(err, 1e-12 * max_magnitude(a));
}

TEST(Upsample, EnergyAndEnstrophyInvariant) {
  const SimulationState s = random_state(GridSpec::kerr_box(8, 8, 8), 11);
  const SimulationState u = upsample_spectral(s, GridSpec::kerr_box(12, 16, 24));
  const double e0 = spectral_mean_square(velocity_from_vorticity(s.omega_hat));
  const double e1 = spectral_mean_square(velocity_from_vorticity(u.omega_hat));
  const double z0 = spectral_mean_square(s.omega_hat), z1 = spectral_mean_square(u.omega_hat);
  EXPECT_NEAR(e1, e0, 1e-13 * e0);
  EXPECT_NEAR(z1, z0, 1e-13 * z0);
}

TEST(Upsample, Errors) {
  const SimulationState s = random_state(GridSpec::kerr_box(16, 16, 16), 1);
  EXPECT_THROW(upsample_spectral(s, GridSpec::kerr_box(32, 8, 32)), ConfigError);
  EXPECT_THROW(upsample_spectral(s, GridSpec::centered({32, 32, 32}, {1.0, 1.0, 1.0})), ConfigError);
}

TEST(DiagnosticsCsv, HeaderAppendAndRoundTrip) {
  const fs::path p = scratch("diag.csv");
  DiagnosticsRecord a;
  a.t = 0.1;
  a.max_vorticity = 8.000000000000002;
  a.max_location = {-1.0 / 3.0, 0.0, 2.5e-17};
  a.max_velocity = 0.1 + 0.2;
  a.enstrophy = 177.75411234567891;
  a.production_direct = -3e-300;
  a.stretch_sup = 4.4;
  a.stretch_at_peak = 1.1;
  a.bound_ratio = 0.2645;
  DiagnosticsRecord b = a;
  b.t = 0.2;
  b.bound_ratio.reset();
  b.production_diff = 12.5;

  append_diagnostics_row(a, p);
  std::string text = slurp(p);
  EXPECT_EQ(text.substr(0, text.find('\n')), kDiagnosticsHeader);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 2);
  append_diagnostics_row(b, p);
  text = slurp(p);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 3);

  const auto rows = read_diagnostics(p);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].max_vorticity, a.max_vorticity);
  EXPECT_EQ(rows[0].max_location, a.max_location);
  EXPECT_EQ(rows[0].max_velocity, a.max_velocity);
  EXPECT_EQ(rows[0].enstrophy, a.enstrophy);
  EXPECT_EQ(rows[0].production_direct, a.production_direct);
  EXPECT_FALSE(rows[0].production_diff.has_value());
  EXPECT_EQ(rows[0].bound_ratio, a.bound_ratio);
  EXPECT_EQ(rows[1].t, 0.2);
  EXPECT_FALSE(rows[1].bound_ratio.has_value());
  EXPECT_EQ(rows[1].production_diff, 12.5);
}

TEST(DiagnosticsCsv, UnwritablePath) {
  EXPECT_THROW(append_diagnostics_row({}, "/nonexistent_dir_euler3d/x.csv"), IoError);
}

TEST(NumberFormat, ShortestRoundTrip) {
  for (double v : {0.1, 1.0 / 3.0, 8.00187331, -2.5e-310, 1e300, 0.0})
    EXPECT_EQ(parse_double(format_double(v)), v);
  EXPECT_THROW(parse_double("1.5x"), FormatError);
}

TEST(Slice, ConstantField) {
  const GridSpec g = GridSpec::kerr_box(8, 6, 4);
  RealField f(g, 3);
  for (double& v : f.component(1)) v = 2.5;
  const fs::path p = scratch("const_slice.txt");
  export_plane_slice(f, {}, p);
  const PlaneSlice s = read_plane_slice(p);
  EXPECT_EQ(s.normal, Axis::y);
  EXPECT_EQ(s.row_coords.size(), 8u);
  EXPECT_EQ(s.col_coords.size(), 4u);
  EXPECT_EQ(s.values.size(), 32u);
  for (double v : s.values) EXPECT_EQ(v, 2.5);
  EXPECT_EQ(s.index, 3);
}

TEST(Slice, DimensionsPerNormal) {
  const GridSpec g = GridSpec::kerr_box(10, 6, 4);
  const RealField f = fixtures::random_field(g, 3, 2);
  const PlaneSlice sx = extract_plane_slice(f, {Axis::x, 0.0, 0});
  EXPECT_EQ(sx.row_coords.size(), 6u);
  EXPECT_EQ(sx.col_coords.size(), 4u);
  const PlaneSlice sz = extract_plane_slice(f, {Axis::z, g.coordinate(Axis::z, 1), 2});
  EXPECT_EQ(sz.row_coords.size(), 10u);
  EXPECT_EQ(sz.col_coords.size(), 6u);
  EXPECT_EQ(sz.at(3, 4), f.at(2, 3, 4, 1));
  const fs::path p = scratch("slice_rt.txt");
  export_plane_slice(f, {Axis::z, g.coordinate(Axis::z, 1), 2}, p);
  const PlaneSlice back = read_plane_slice(p);
  EXPECT_EQ(back.values, sz.values);
  EXPECT_EQ(back.row_coords, sz.row_coords);
}

TEST(Slice, OutsideBoxRejected) {
  const RealField f = fixtures::random_field(GridSpec::kerr_box(8, 8, 8), 3, 2);
  EXPECT_THROW(extract_plane_slice(f, {Axis::y, 100.0, 1}), ConfigError);
  EXPECT_THROW(extract_plane_slice(f, {Axis::y, 0.1, 1}), ConfigError);
  EXPECT_THROW(extract_plane_slice(f, {Axis::y, 0.0, 3}), ConfigError);
}

// The symmetry plane slice of the antiparallel pair is odd under z -> -z:
// the second tube is the mirror of the first with reversed vorticity.
TEST(Slice, KerrSymmetryPlaneIsOddInZ) {
  const GridSpec g = GridSpec::kerr_box(64, 64, 32);
  const FinalizedVorticity ic = kerr_initial_vorticity(g, KerrICParams{});
  const PlaneSlice s = extract_plane_slice(ic.omega, {});
  const std::size_t nz = s.col_coords.size();
  double peak = 0, defect = 0;
  for (std::size_t r = 0; r < s.row_coords.size(); ++r)
    for (std::size_t c = 0; c < nz; ++c) {
      peak = std::max(peak, std::abs(s.at(r, c)));
      defect = std::max(defect, std::abs(s.at(r, c) + s.at(r, (nz - c) % nz)));
    }
  EXPECT_GT(peak, 1.0);
  EXPECT_LE(defect, 1e-10 * peak);
}

TEST(SpectrumFile, RoundTrip) {
  SpectrumRow row;
  row.t = 2.25;
  row.energy.zero_mode = 0.0;
  row.energy.shells = {0.5, 0.25, 1.0 / 3.0};
  row.enstrophy.zero_mode = 1e-20;
  row.enstrophy.shells = {0.5, 1.0, 3.0};
  const fs::path p = scratch("spec.csv");
  write_spectrum(row, p);
  const SpectrumRow back = read_spectrum(p);
  EXPECT_EQ(back.t, 2.25);
  EXPECT_EQ(back.energy.shells, row.energy.shells);
  EXPECT_EQ(back.enstrophy.shells, row.enstrophy.shells);
  EXPECT_EQ(back.enstrophy.zero_mode, row.enstrophy.zero_mode);
}

TEST(LineFile, OnePointPerRow) {
  VortexLine line;
  line.points = {{0, 0, 0}, {0, 0, 0.1}, {0, 0, 0.2}};
  line.vorticity = {1, 2, 3};
  line.segment_length = {0.1, 0.1};
  line.ds = 0.1;
  const fs::path p = scratch("line.csv");
  write_vortex_line(line, p);
  const std::string text = slurp(p);
  EXPECT_NE(text.find("x,y,z,vorticity"), std::string::npos);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 5);
}

TEST(ReportFile, KeyValue) {
  GeometryReport r;
  r.c_u = 0.3;
  r.critical_inequality = true;
  const fs::path p = scratch("report.txt");
  write_geometry_report(r, p);
  const std::string text = slurp(p);
  EXPECT_NE(text.find("c_u = 0.3"), std::string::npos);
  EXPECT_NE(text.find("critical_inequality = true"), std::string::npos);
}
