#include "euler3d/initial_conditions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "euler3d/errors.hpp"
#include "euler3d/filters.hpp"
#include "euler3d/solver.hpp"
#include "euler3d/spectral.hpp"

namespace euler3d {

namespace {
constexpr double pi = std::numbers::pi;

double wrap_offset(double d, double period) { return d - period * std::nearbyint(d / period); }

bool close_rel(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b)); }
}  // namespace

void KerrICParams::validate() const {
  if (!(radius > 0)) throw ConfigError("core radius must be positive");
  if (!(length_x > 0 && length_y > 0 && length_z > 0)) throw ConfigError("box lengths must be positive");
  if (!(target_peak > 0)) throw ConfigError("target peak must be positive");
  for (int n : peak_lattice)
    if (n <= 0) throw ConfigError("peak lattice sizes must be positive");
}

double core_profile(double r) {
  if (r >= 1.0) return 0.0;
  const double r2 = r * r;
  const double f = -r2 / (1.0 - r2) + r2 * r2 * (1.0 + r2 + r2 * r2);
  return std::exp(f);
}

CoreTrajectory core_trajectory(double y, const KerrICParams& p) {
  CoreTrajectory t{};
  t.y = y;
  t.y2 = y + p.length_y * p.delta_y2 * std::sin(pi * y / p.length_y);
  t.s = t.y2 + p.length_y * p.delta_y1 * std::sin(pi * t.y2 / p.length_y);
  t.x = p.x0 + p.delta_x * std::cos(pi * t.s / p.length_x);
  t.z = p.z0 + p.delta_z * std::cos(pi * t.s / p.length_z);
  return t;
}

std::array<double, 3> direction_vector(double y, const KerrICParams& p) {
  const CoreTrajectory t = core_trajectory(y, p);
  const double stretch = (1.0 + pi * p.delta_y2 * std::cos(pi * y / p.length_y)) *
                         (1.0 + pi * p.delta_y1 * std::cos(pi * t.y2 / p.length_y));
  const double wx = -(pi * p.delta_x / p.length_x) * stretch * std::sin(pi * t.s / p.length_x);
  const double wz = -(pi * p.delta_z / p.length_z) * stretch * std::sin(pi * t.s / p.length_z);
  return {wx, 1.0, wz};
}

bool core_under_resolved(const GridSpec& grid, const KerrICParams& p) {
  for (Axis a : {Axis::x, Axis::z})
    if (2.0 * p.radius / grid.spacing(a) < 4.0) return true;
  return false;
}

RealField build_pair(const GridSpec& grid, const KerrICParams& p) {
  p.validate();
  if (!close_rel(grid.length[0], p.length_x) || !close_rel(grid.length[1], p.length_y) ||
      !close_rel(grid.length[2], p.length_z))
    throw ConfigError("grid box lengths do not match the tube parameters");

  RealField w(grid, 3);
  const auto [nx, ny, nz] = grid.n;
  for (int iy = 0; iy < ny; ++iy) {
    const double y = grid.coordinate(Axis::y, iy);
    const CoreTrajectory traj = core_trajectory(y, p);
    const auto dir = direction_vector(y, p);
    for (int ix = 0; ix < nx; ++ix) {
      const double dx = wrap_offset(grid.coordinate(Axis::x, ix) - traj.x, p.length_x);
      for (int iz = 0; iz < nz; ++iz) {
        const double z = grid.coordinate(Axis::z, iz);
        const double dz_up = wrap_offset(z - traj.z, p.length_z);
        const double dz_low = wrap_offset(-z - traj.z, p.length_z);
        const double upper = core_profile(std::hypot(dx, dz_up) / p.radius);
        const double lower = core_profile(std::hypot(dx, dz_low) / p.radius);
        w.at(0, ix, iy, iz) = (upper - lower) * dir[0];
        w.at(1, ix, iy, iz) = (upper - lower) * dir[1];
        w.at(2, ix, iy, iz) = (upper + lower) * dir[2];
      }
    }
  }
  return w;
}

double pre_rescale_peak(const GridSpec& grid, const KerrICParams& p) {
  p.validate();
  GridSpec lattice = grid;
  if (!p.peak_from_simulation_grid) {
    lattice = GridSpec::centered(p.peak_lattice, {p.length_x, p.length_y, p.length_z});
    for (Axis a : kAxes) lattice.origin[index(a)] += p.peak_lattice_offset * lattice.spacing(a);
  }
  // The profile decreases with r, so for each y the nearest node in x and in
  // z independently gives the largest sample.
  auto nearest = [&](Axis a, double target, double period) {
    const double h = lattice.spacing(a);
    const double o = lattice.origin[index(a)];
    const double i = std::nearbyint((target - o) / h);
    return std::abs(wrap_offset(o + i * h - target, period));
  };
  double peak = 0.0;
  for (int iy = 0; iy < lattice.n[1]; ++iy) {
    const double y = lattice.coordinate(Axis::y, iy);
    const CoreTrajectory t = core_trajectory(y, p);
    const double dx = nearest(Axis::x, t.x, p.length_x);
    const double dz = nearest(Axis::z, t.z, p.length_z);
    peak = std::max(peak, core_profile(std::hypot(dx, dz) / p.radius) * direction_vector(y, p)[1]);
  }
  return peak;
}

FinalizedVorticity finalize_initial_vorticity(const RealField& field, const GridSpec& grid,
                                              const KerrICParams& p) {
  if (!(field.grid() == grid) || field.components() != 3)
    throw std::invalid_argument("finalize_initial_vorticity: field/grid mismatch");
  FinalizedVorticity out;
  auto wy = field.component(1);
  out.grid_pre_rescale_peak = *std::max_element(wy.begin(), wy.end());
  out.pre_rescale_peak = p.peak_from_simulation_grid ? out.grid_pre_rescale_peak : pre_rescale_peak(grid, p);
  if (!(out.pre_rescale_peak > 0)) throw std::invalid_argument("finalize_initial_vorticity: zero peak");
  out.rescale_factor = p.target_peak / out.pre_rescale_peak;

  SpectralField w_hat = forward_transform(field);
  w_hat *= out.rescale_factor;
  FilterSpec quartic;
  quartic.kind = FilterKind::initial_quartic;
  quartic.quartic_coefficient = p.quartic_coefficient;
  apply_mask_in_place(w_hat, build_filter_mask(grid, quartic));
  zero_nyquist_modes(w_hat);
  out.omega_hat = solenoidal_project(w_hat);
  out.omega = inverse_transform(out.omega_hat);
  out.max_vorticity = max_magnitude(out.omega);
  return out;
}

FinalizedVorticity kerr_initial_vorticity(const GridSpec& grid, const KerrICParams& p) {
  return finalize_initial_vorticity(build_pair(grid, p), grid, p);
}

AnalyticFlow parse_analytic_flow(std::string_view name) {
  if (name == "beltrami" || name == "beltrami_abc") return AnalyticFlow::beltrami_abc;
  if (name == "taylor_green") return AnalyticFlow::taylor_green;
  throw ConfigError("unknown analytic flow '" + std::string(name) + "'");
}

AnalyticFields analytic_test_fields(AnalyticFlow kind, const GridSpec& grid,
                                    std::array<double, 3> amplitudes) {
  for (double L : grid.length)
    if (!close_rel(L, 2 * pi)) throw ConfigError("analytic test flows require a 2pi-periodic cube");
  AnalyticFields f{RealField(grid, 3), RealField(grid, 3)};
  const auto [A, B, C] = amplitudes;
  for (int ix = 0; ix < grid.n[0]; ++ix) {
    const double x = grid.coordinate(Axis::x, ix);
    for (int iy = 0; iy < grid.n[1]; ++iy) {
      const double y = grid.coordinate(Axis::y, iy);
      for (int iz = 0; iz < grid.n[2]; ++iz) {
        const double z = grid.coordinate(Axis::z, iz);
        std::array<double, 3> u{}, w{};
        if (kind == AnalyticFlow::beltrami_abc) {
          u = {A * std::sin(z) + C * std::cos(y), B * std::sin(x) + A * std::cos(z),
               C * std::sin(y) + B * std::cos(x)};
          w = u;
        } else {
          const double sx = std::sin(x), cx = std::cos(x), sy = std::sin(y), cy = std::cos(y),
                       sz = std::sin(z), cz = std::cos(z);
          u = {A * sx * cy * cz, -A * cx * sy * cz, 0.0};
          w = {-A * cx * sy * sz, -A * sx * cy * sz, 2.0 * A * sx * sy * cz};
        }
        for (int c = 0; c < 3; ++c) {
          f.velocity.at(c, ix, iy, iz) = u[c];
          f.vorticity.at(c, ix, iy, iz) = w[c];
        }
      }
    }
  }
  return f;
}

}  // namespace euler3d
