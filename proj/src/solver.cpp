#include "euler3d/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "euler3d/errors.hpp"

namespace euler3d {

void SolverConfig::validate() const {
  if (!(cfl > 0) || !std::isfinite(cfl)) throw ConfigError("cfl must be positive");
  if (!(dt_max > 0) || !std::isfinite(dt_max)) throw ConfigError("dt_max must be positive");
  if (!(cadence >= 0)) throw ConfigError("cadence must be nonnegative");
  if (!std::isfinite(t_end)) throw ConfigError("t_end must be finite");
  filter.validate();
  if (filter.kind == FilterKind::initial_quartic)
    throw ConfigError("the initial quartic filter cannot be used as the solver filter");
}

namespace {

template <class Fn>
void for_each_mode(const GridSpec& g, Fn&& fn) {
  const auto ext = g.spectral_extent();
  std::size_t idx = 0;
  for (int ix = 0; ix < ext[0]; ++ix)
    for (int iy = 0; iy < ext[1]; ++iy)
      for (int kz = 0; kz < ext[2]; ++kz, ++idx) fn(idx, ix, iy, kz);
}

double rms(const SpectralField& F) { return std::sqrt(spectral_mean_square(F)); }

}  // namespace

SpectralField velocity_from_vorticity(const SpectralField& omega_hat) {
  if (omega_hat.components() != 3) throw std::invalid_argument("velocity_from_vorticity: need 3 components");
  const GridSpec& g = omega_hat.grid();
  const double scale = rms(omega_hat);
  for (int c = 0; c < 3; ++c)
    if (std::abs(omega_hat.component(c)[0]) > 1e-10 * scale)
      throw std::invalid_argument("velocity_from_vorticity: vorticity has nonzero mean");

  const WavenumberTable kt(g);
  SpectralField u(g, 3);
  auto wx = omega_hat.component(0), wy = omega_hat.component(1), wz = omega_hat.component(2);
  auto ux = u.component(0), uy = u.component(1), uz = u.component(2);
  const Complex I(0.0, 1.0);
  for_each_mode(g, [&](std::size_t i, int ix, int iy, int kz) {
    const double k2 = kt.kappa_sq[0][ix] + kt.kappa_sq[1][iy] + kt.kappa_sq[2][kz];
    if (k2 == 0.0) return;
    const double kx = kt.kappa[0][ix], ky = kt.kappa[1][iy], kzv = kt.kappa[2][kz];
    const Complex px = wx[i] / k2, py = wy[i] / k2, pz = wz[i] / k2;
    ux[i] = I * (ky * pz - kzv * py);
    uy[i] = I * (kzv * px - kx * pz);
    uz[i] = I * (kx * py - ky * px);
  });
  return u;
}

void solenoidal_project_in_place(SpectralField& F) {
  if (F.components() != 3) throw std::invalid_argument("solenoidal_project: need 3 components");
  const GridSpec& g = F.grid();
  const WavenumberTable kt(g);
  auto fx = F.component(0), fy = F.component(1), fz = F.component(2);
  for_each_mode(g, [&](std::size_t i, int ix, int iy, int kz) {
    const double kx = kt.kappa[0][ix], ky = kt.kappa[1][iy], kzv = kt.kappa[2][kz];
    const double k2 = kx * kx + ky * ky + kzv * kzv;
    if (k2 == 0.0) return;
    const Complex d = (kx * fx[i] + ky * fy[i] + kzv * fz[i]) / k2;
    fx[i] -= kx * d;
    fy[i] -= ky * d;
    fz[i] -= kzv * d;
  });
}

SpectralField solenoidal_project(const SpectralField& F) {
  SpectralField out = F;
  solenoidal_project_in_place(out);
  return out;
}

double relative_divergence(const SpectralField& F) {
  if (F.components() != 3) throw std::invalid_argument("relative_divergence: need 3 components");
  const GridSpec& g = F.grid();
  const WavenumberTable kt(g);
  auto fx = F.component(0), fy = F.component(1), fz = F.component(2);
  double div = 0.0, scale = 0.0;
  for_each_mode(g, [&](std::size_t i, int ix, int iy, int kz) {
    const double kx = kt.kappa[0][ix], ky = kt.kappa[1][iy], kzv = kt.kappa[2][kz];
    const double kmag = std::sqrt(kx * kx + ky * ky + kzv * kzv);
    const double fmag = std::sqrt(std::norm(fx[i]) + std::norm(fy[i]) + std::norm(fz[i]));
    div = std::max(div, std::abs(kx * fx[i] + ky * fy[i] + kzv * fz[i]));
    scale = std::max(scale, kmag * fmag);
  });
  return scale == 0.0 ? 0.0 : div / scale;
}

double compute_timestep(const std::array<double, 3>& max_abs_u, const GridSpec& grid,
                        const SolverConfig& config) {
  double dt = config.dt_max;
  for (Axis a : kAxes) {
    const double umax = max_abs_u[index(a)];
    if (umax > 0) dt = std::min(dt, config.cfl * grid.spacing(a) / umax);
  }
  return dt;
}

double compute_timestep(const RealField& u, const SolverConfig& config) {
  if (u.components() != 3) throw std::invalid_argument("compute_timestep: need a vector field");
  std::array<double, 3> umax{};
  for (int c = 0; c < 3; ++c)
    for (double v : u.component(c)) umax[c] = std::max(umax[c], std::abs(v));
  return compute_timestep(umax, u.grid(), config);
}

EulerSolver::EulerSolver(const GridSpec& grid, const SolverConfig& config)
    : grid_(grid),
      config_(config),
      kappa_(grid),
      product_mask_(build_filter_mask(grid, config.filter)),
      u_hat_(grid, 3),
      stage_(grid, 3),
      k1_(grid, 3),
      k_(grid, 3),
      acc_(grid, 3),
      u_(grid, 3),
      w_(grid, 3),
      nonlinear_(grid, 3),
      deriv_(grid.num_nodes()),
      spec_tmp_(grid.num_modes()),
      fft_scratch_(grid.num_modes()) {
  config_.validate();
  for (Axis a : kAxes) {
    auto& f = derivative_factor_[index(a)];
    f = kappa_.kappa[index(a)];
    // Smoothed differentiation uses rho(2k/N) on the differentiated axis;
    // the two-thirds variant differentiates exactly and truncates products.
    if (config_.filter.kind == FilterKind::smoothing) {
      auto rho = product_mask_.axis_factor(a);
      for (std::size_t i = 0; i < f.size(); ++i) f[i] *= rho[i];
    }
  }
}

void EulerSolver::rhs(const SpectralField& omega_hat, SpectralField& out,
                      std::array<double, 3>* max_abs_u) {
  if (!(omega_hat.grid() == grid_) || omega_hat.components() != 3)
    throw std::invalid_argument("EulerSolver::rhs: field does not match solver grid");
  if (!(out.grid() == grid_) || out.components() != 3) out = SpectralField(grid_, 3);

  u_hat_ = velocity_from_vorticity(omega_hat);
  for (int c = 0; c < 3; ++c) {
    fft::inverse(grid_, u_hat_.component(c), u_.component(c), fft_scratch_);
    fft::inverse(grid_, omega_hat.component(c), w_.component(c), fft_scratch_);
  }
  if (max_abs_u) {
    for (int c = 0; c < 3; ++c) {
      double m = 0.0;
      for (double v : u_.component(c)) m = std::max(m, std::abs(v));
      (*max_abs_u)[c] = m;
    }
  }

  std::fill(nonlinear_.values().begin(), nonlinear_.values().end(), 0.0);
  const std::size_t nodes = grid_.num_nodes();
  for (Axis axis : kAxes) {
    const int j = index(axis);
    const auto& factor = derivative_factor_[j];
    const double* uj = u_.component(j).data();
    const double* wj = w_.component(j).data();
    for (int i = 0; i < 3; ++i) {
      double* ni = nonlinear_.component(i).data();
      for (int pass = 0; pass < 2; ++pass) {
        const auto src = pass == 0 ? u_hat_.component(i) : omega_hat.component(i);
        for_each_mode(grid_, [&](std::size_t m, int ix, int iy, int kz) {
          const int pos[3] = {ix, iy, kz};
          spec_tmp_[m] = Complex(0.0, factor[pos[j]]) * src[m];
        });
        fft::inverse(grid_, spec_tmp_, deriv_, fft_scratch_);
        const double* d = deriv_.data();
        if (pass == 0) {
          for (std::size_t n = 0; n < nodes; ++n) ni[n] += wj[n] * d[n];  // (w . grad) u
        } else {
          for (std::size_t n = 0; n < nodes; ++n) ni[n] -= uj[n] * d[n];  // (u . grad) w
        }
      }
    }
  }

  for (int c = 0; c < 3; ++c) {
    fft::forward(grid_, nonlinear_.component(c), out.component(c));
    out.component(c)[0] = 0.0;
  }
  apply_mask_in_place(out, product_mask_);
  zero_nyquist_modes(out);
  solenoidal_project_in_place(out);
}

SpectralField EulerSolver::euler_rhs(const SpectralField& omega_hat) {
  SpectralField out(grid_, 3);
  rhs(omega_hat, out);
  return out;
}

void EulerSolver::finish_step(SimulationState& state, double dt, const SpectralField& k1) {
  const SpectralField& w0 = state.omega_hat;
  acc_ = w0;
  acc_.add_scaled(k1, dt / 6.0);

  stage_ = w0;
  stage_.add_scaled(k1, dt / 2.0);
  rhs(stage_, k_);
  acc_.add_scaled(k_, dt / 3.0);

  stage_ = w0;
  stage_.add_scaled(k_, dt / 2.0);
  rhs(stage_, k_);
  acc_.add_scaled(k_, dt / 3.0);

  stage_ = w0;
  stage_.add_scaled(k_, dt);
  rhs(stage_, k_);
  acc_.add_scaled(k_, dt / 6.0);

  solenoidal_project_in_place(acc_);
  for (int c = 0; c < 3; ++c) acc_.component(c)[0] = 0.0;
  if (!acc_.all_finite())
    throw NumericalError("non-finite vorticity after step at t = " + std::to_string(state.t),
                         state.t);
  std::swap(state.omega_hat, acc_);
  state.t += dt;
  state.step_count += 1;
  state.last_dt = dt;
}

void EulerSolver::rk4_step(SimulationState& state, double dt) {
  if (!(dt > 0)) throw std::invalid_argument("rk4_step: dt must be positive");
  rhs(state.omega_hat, k1_);
  finish_step(state, dt, k1_);
}

double EulerSolver::adaptive_step(SimulationState& state, double dt_limit) {
  std::array<double, 3> umax{};
  rhs(state.omega_hat, k1_, &umax);
  if (!k1_.all_finite())
    throw NumericalError("non-finite right-hand side at t = " + std::to_string(state.t), state.t);
  const double dt = std::min(compute_timestep(umax, grid_, config_), dt_limit);
  finish_step(state, dt, k1_);
  return dt;
}

SimulationState EulerSolver::run(SimulationState state, const RunHooks& hooks) {
  state.config = config_;
  const double t_end = config_.t_end;
  const double cadence = config_.cadence;
  if (t_end < state.t) throw ConfigError("t_end precedes the current time");

  auto near = [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)); };
  // Sample times are k * cadence, computed from the index to avoid drift.
  long next_index = 0;
  if (cadence > 0) {
    next_index = static_cast<long>(std::floor(state.t / cadence)) + 1;
    while (next_index * cadence <= state.t || near(next_index * cadence, state.t)) ++next_index;
  }
  if (hooks.sample_at_start && hooks.on_sample) hooks.on_sample(state);

  while (state.t < t_end && !near(state.t, t_end)) {
    double target = t_end;
    const bool cadence_target = cadence > 0 && next_index * cadence < t_end && !near(next_index * cadence, t_end);
    if (cadence_target) target = next_index * cadence;
    try {
      adaptive_step(state, target - state.t);
    } catch (const NumericalError&) {
      if (hooks.on_abort) hooks.on_abort(state);
      throw;
    }
    if (near(state.t, target)) state.t = target;
    if (hooks.on_step) hooks.on_step(state);
    if (state.t == target) {
      if (cadence_target) ++next_index;
      if (hooks.on_sample) hooks.on_sample(state);
    }
  }
  if (state.t != t_end && near(state.t, t_end)) state.t = t_end;
  return state;
}

SimulationState run_simulation(SimulationState state, const RunHooks& hooks) {
  EulerSolver solver(state.omega_hat.grid(), state.config);
  return solver.run(std::move(state), hooks);
}

}  // namespace euler3d
