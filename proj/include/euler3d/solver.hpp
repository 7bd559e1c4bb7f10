#pragma once

#include <array>
#include <functional>
#include <numbers>
#include <optional>

#include "euler3d/field.hpp"
#include "euler3d/filters.hpp"
#include "euler3d/grid.hpp"
#include "euler3d/spectral.hpp"

namespace euler3d {

struct SolverConfig {
  double cfl = std::numbers::pi / 4;
  double dt_max = 0.02 * std::numbers::pi;  ///< 0.01 L_z for L_z = 2 pi
  FilterSpec filter{};
  double t_end = 0.0;
  /// Spacing of sample times at which hooks fire; 0 samples only the start
  /// and the end of a run.
  double cadence = 0.0;

  void validate() const;
};

struct SimulationState {
  double t = 0.0;
  SpectralField omega_hat;
  long step_count = 0;
  double last_dt = 0.0;
  SolverConfig config{};
};

/// Solves -lap psi = omega and returns u = curl psi.  Throws
/// std::invalid_argument if the mean vorticity is not zero (relative 1e-10).
SpectralField velocity_from_vorticity(const SpectralField& omega_hat);

/// Removes the gradient part of a vector field: F - kappa (kappa . F) / |kappa|^2.
SpectralField solenoidal_project(const SpectralField& F);
void solenoidal_project_in_place(SpectralField& F);

/// max_k |kappa . F_k| / max_k |kappa| |F_k| (0 for a zero field).
double relative_divergence(const SpectralField& F);

/// min(dt_max, cfl * min_j dx_j / max |u_j|); dt_max when u vanishes.
double compute_timestep(const RealField& u, const SolverConfig& config);
double compute_timestep(const std::array<double, 3>& max_abs_u, const GridSpec& grid,
                        const SolverConfig& config);

struct RunHooks {
  /// Fires at the start, at every cadence time and at t_end.
  std::function<void(const SimulationState&)> on_sample;
  /// Fires after every accepted step.
  std::function<void(const SimulationState&)> on_step;
  /// Fires with the last good state before a NumericalError propagates.
  std::function<void(const SimulationState&)> on_abort;
  bool sample_at_start = true;
};

/// Pseudo-spectral vorticity solver.  Holds masks and scratch buffers sized
/// for one grid; a single instance must not be used concurrently.
class EulerSolver {
 public:
  EulerSolver(const GridSpec& grid, const SolverConfig& config);

  const GridSpec& grid() const noexcept { return grid_; }
  const SolverConfig& config() const noexcept { return config_; }
  const FilterMask& product_mask() const noexcept { return product_mask_; }

  /// d omega_hat / dt = P M F[(omega . grad) u - (u . grad) omega], with the
  /// configured mask M and solenoidal projection P.  Optionally reports
  /// max |u_j| over the nodes.
  void rhs(const SpectralField& omega_hat, SpectralField& out,
           std::array<double, 3>* max_abs_u = nullptr);
  SpectralField euler_rhs(const SpectralField& omega_hat);

  /// Classical four-stage step of fixed size.  Throws NumericalError (state
  /// untouched) if the update is not finite.
  void rk4_step(SimulationState& state, double dt);

  /// One step with the CFL-limited size, capped by `dt_limit`; returns dt.
  double adaptive_step(SimulationState& state, double dt_limit);

  /// Steps until config().t_end, landing exactly on cadence times and on
  /// t_end.  The returned state carries this solver's config.
  SimulationState run(SimulationState state, const RunHooks& hooks = {});

 private:
  void finish_step(SimulationState& state, double dt, const SpectralField& k1);

  GridSpec grid_;
  SolverConfig config_;
  WavenumberTable kappa_;
  FilterMask product_mask_;
  std::array<std::vector<double>, 3> derivative_factor_;

  // scratch
  SpectralField u_hat_, stage_, k1_, k_, acc_;
  RealField u_, w_, nonlinear_;
  AlignedVector<double> deriv_;
  AlignedVector<Complex> spec_tmp_, fft_scratch_;
};

/// Convenience wrapper constructing a solver from state.config.
SimulationState run_simulation(SimulationState state, const RunHooks& hooks = {});

}  // namespace euler3d
