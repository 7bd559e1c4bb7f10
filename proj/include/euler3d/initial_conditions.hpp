#pragma once

#include <array>
#include <numbers>
#include <string_view>

#include "euler3d/field.hpp"
#include "euler3d/grid.hpp"

namespace euler3d {

/// Parameters of the perturbed antiparallel vortex-tube pair.
struct KerrICParams {
  double delta_y1 = 0.5;
  double delta_y2 = 0.4;
  double delta_x = -1.6;
  double delta_z = 0.0;
  double z0 = 1.57;
  double radius = 0.75;
  double x0 = 0.0;
  double length_x = 4 * std::numbers::pi;
  double length_y = 4 * std::numbers::pi;
  double length_z = 2 * std::numbers::pi;
  /// Peak of the y-vorticity after rescaling.
  double target_peak = 8.0;
  double quartic_coefficient = 0.05;

  /// Lattice on which the pre-rescale peak of omega_y is measured.  The
  /// rescale factor is a constant of the initial data, so by default it is
  /// taken from a fixed cell-centered 512 x 512 x 256 sampling rather than
  /// from the simulation grid.
  std::array<int, 3> peak_lattice{512, 512, 256};
  double peak_lattice_offset = 0.5;  ///< node shift in cells
  bool peak_from_simulation_grid = false;

  /// Throws ConfigError on nonpositive radius or lengths.
  void validate() const;
};

/// exp(f(r)) for r < 1 with f(r) = -r^2/(1-r^2) + r^4 (1 + r^2 + r^4); 0 for r >= 1.
double core_profile(double r);

struct CoreTrajectory {
  double x, y, z;  ///< centerline point (X, Y, Z) at this y
  double s;        ///< stretched coordinate s(y)
  double y2;
};

CoreTrajectory core_trajectory(double y, const KerrICParams& p);

/// Unnormalized vorticity direction (omega_x, 1, omega_z) at height y.
std::array<double, 3> direction_vector(double y, const KerrICParams& p);

/// Samples the upper tube and adds its mirror image under the pseudo-vector
/// reflection (x, y, z) -> (x, y, -z), (w_x, w_y, w_z) -> (-w_x, -w_y, w_z).
/// Throws ConfigError if the grid box does not match p's lengths.
RealField build_pair(const GridSpec& grid, const KerrICParams& p);

/// Fewer than 4 nodes across the core diameter on some axis.
bool core_under_resolved(const GridSpec& grid, const KerrICParams& p);

/// Largest omega_y of the unscaled upper tube over the configured peak
/// lattice (or over `grid` when peak_from_simulation_grid is set).
double pre_rescale_peak(const GridSpec& grid, const KerrICParams& p);

struct FinalizedVorticity {
  SpectralField omega_hat;
  RealField omega;
  double rescale_factor = 0.0;
  double pre_rescale_peak = 0.0;       ///< value used for the factor
  double grid_pre_rescale_peak = 0.0;  ///< max omega_y of the sampled field
  double analytic_peak = 1.0;          ///< supremum of the continuous profile
  double max_vorticity = 0.0;          ///< max |omega| after filtering
};

/// Rescale, apply the initial quartic filter and project onto solenoidal
/// fields.  With peak_from_simulation_grid the factor comes from the largest
/// omega_y of `field` itself.  Throws std::invalid_argument if the peak is zero.
FinalizedVorticity finalize_initial_vorticity(const RealField& field, const GridSpec& grid,
                                              const KerrICParams& p);

/// build_pair followed by finalize_initial_vorticity.
FinalizedVorticity kerr_initial_vorticity(const GridSpec& grid, const KerrICParams& p);

enum class AnalyticFlow { beltrami_abc, taylor_green };

AnalyticFlow parse_analytic_flow(std::string_view name);

struct AnalyticFields {
  RealField velocity;
  RealField vorticity;
};

/// ABC flow (amplitudes A, B, C) or Taylor-Green (amplitudes[0] scales the
/// field) on a 2pi-periodic cube.  Throws ConfigError for other boxes.
AnalyticFields analytic_test_fields(AnalyticFlow kind, const GridSpec& grid,
                                    std::array<double, 3> amplitudes = {1.0, 1.0, 1.0});

}  // namespace euler3d
