#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "euler3d/diagnostics.hpp"
#include "euler3d/errors.hpp"
#include "euler3d/initial_conditions.hpp"
#include "euler3d/solver.hpp"
#include "euler3d/spectral.hpp"
#include "support.hpp"

using namespace euler3d;
using fixtures::max_abs_diff;
using fixtures::sample;
constexpr double pi = std::numbers::pi;

namespace {

SpectralField beltrami_hat(int n) {
  SpectralField w = forward_transform(analytic_test_fields(AnalyticFlow::beltrami_abc, GridSpec::periodic_cube(n)).vorticity);
  zero_nyquist_modes(w);
  return w;
}

SpectralField taylor_green_hat(int n) {
  SpectralField w = forward_transform(analytic_test_fields(AnalyticFlow::taylor_green, GridSpec::periodic_cube(n)).vorticity);
  zero_nyquist_modes(w);
  return w;
}

double max_coeff(const SpectralField& F) {
  double m = 0;
  for (const Complex& c : F.values()) m = std::max(m, std::abs(c));
  return m;
}

double relative_change(const SpectralField& a, const SpectralField& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.values().size(); ++i) d = std::max(d, std::abs(a.values()[i] - b.values()[i]));
  return d / max_coeff(b);
}

}  // namespace

TEST(Velocity, ZeroVorticity) {
  const SpectralField u = velocity_from_vorticity(SpectralField(GridSpec::periodic_cube(8), 3));
  EXPECT_EQ(max_coeff(u), 0.0);
}

TEST(Velocity, BeltramiReproducesItself) {
  const GridSpec g = GridSpec::periodic_cube(32);
  const AnalyticFields a = analytic_test_fields(AnalyticFlow::beltrami_abc, g);
  const SpectralField u_hat = velocity_from_vorticity(forward_transform(a.vorticity));
  EXPECT_LE(max_abs_diff(inverse_transform(u_hat), a.velocity), 1e-12);
  EXPECT_LE(relative_divergence(u_hat), 1e-13);
}

TEST(Velocity, NonzeroMeanRejected) {
  const GridSpec g = GridSpec::periodic_cube(8);
  SpectralField w(g, 3);
  w.at(2, 0, 0, 0) = 1.0;
  EXPECT_THROW(velocity_from_vorticity(w), std::invalid_argument);
}

TEST(Projection, SolenoidalUnchangedGradientRemovedIdempotent) {
  const GridSpec g = GridSpec::kerr_box(16, 12, 8);
  SpectralField F = forward_transform(fixtures::random_field(g, 3, 5));
  zero_nyquist_modes(F);
  const SpectralField P = solenoidal_project(F);
  EXPECT_LE(relative_divergence(P), 1e-14);
  EXPECT_LE(relative_change(solenoidal_project(P), P), 1e-14);

  // i kappa phi
  SpectralField phi = forward_transform(fixtures::random_field(g, 1, 9));
  zero_nyquist_modes(phi);
  SpectralField grad(g, 3);
  for (Axis a : kAxes) {
    const SpectralField d = spectral_derivative(phi, a);
    std::copy(d.component(0).begin(), d.component(0).end(), grad.component(index(a)).begin());
  }
  EXPECT_LE(max_coeff(solenoidal_project(grad)), 1e-14 * max_coeff(grad));
  EXPECT_GT(relative_divergence(grad), 0.5);
}

TEST(Rhs, ZeroAndBeltrami) {
  const GridSpec g = GridSpec::periodic_cube(32);
  EulerSolver solver(g, SolverConfig{});
  EXPECT_EQ(max_coeff(solver.euler_rhs(SpectralField(g, 3))), 0.0);
  const SpectralField w = beltrami_hat(32);
  const SpectralField r = solver.euler_rhs(w);
  EXPECT_LE(std::sqrt(spectral_mean_square(r)), 1e-10 * std::sqrt(spectral_mean_square(w)));
}

TEST(Rhs, PlanarFlowIsPureAdvection) {
  const GridSpec g = GridSpec::periodic_cube(32);
  // psi = sin x sin y + 0.3 cos(2x + y), omega_z = -lap psi
  auto w3 = [](double x, double y) { return 2 * std::sin(x) * std::sin(y) + 1.5 * std::cos(2 * x + y); };
  auto ux = [](double x, double y) { return std::sin(x) * std::cos(y) - 0.3 * std::sin(2 * x + y); };
  auto uy = [](double x, double y) { return -std::cos(x) * std::sin(y) + 0.6 * std::sin(2 * x + y); };
  auto dw_dx = [](double x, double y) { return 2 * std::cos(x) * std::sin(y) - 3.0 * std::sin(2 * x + y); };
  auto dw_dy = [](double x, double y) { return 2 * std::sin(x) * std::cos(y) - 1.5 * std::sin(2 * x + y); };
  const RealField w = sample(g, 3, [&](double x, double y, double, double* o) {
    o[0] = 0;
    o[1] = 0;
    o[2] = w3(x, y);
  });
  const RealField expect = sample(g, 3, [&](double x, double y, double, double* o) {
    o[0] = 0;
    o[1] = 0;
    o[2] = -(ux(x, y) * dw_dx(x, y) + uy(x, y) * dw_dy(x, y));
  });
  for (FilterKind k : {FilterKind::smoothing, FilterKind::two_thirds}) {
    SolverConfig cfg;
    cfg.filter.kind = k;
    EulerSolver solver(g, cfg);
    const RealField r = inverse_transform(solver.euler_rhs(forward_transform(w)));
    EXPECT_LE(max_abs_diff(r, expect), 1e-10 * fixtures::max_abs(expect));
  }
}

TEST(Timestep, Formula) {
  const GridSpec g = GridSpec::periodic_cube(64);
  SolverConfig cfg;
  cfg.dt_max = 1.0;
  EXPECT_EQ(compute_timestep(RealField(g, 3), cfg), 1.0);
  RealField u(g, 3);
  for (int c = 0; c < 3; ++c) u.component(c)[17] = (c == 1 ? -1.0 : 1.0);
  EXPECT_NEAR(compute_timestep(u, cfg), (pi / 4) * (2 * pi / 64), 1e-15);
  EXPECT_NEAR(compute_timestep(u, cfg), 0.0771, 1e-4);
  EXPECT_NEAR(compute_timestep({1, 1, 1}, GridSpec::periodic_cube(128), cfg), 0.5 * compute_timestep(u, cfg), 1e-15);
  cfg.dt_max = 0.01;
  EXPECT_EQ(compute_timestep(u, cfg), 0.01);
}

TEST(Config, Validation) {
  SolverConfig c;
  c.cfl = 0;
  EXPECT_THROW(c.validate(), ConfigError);
  c = SolverConfig{};
  c.dt_max = -1;
  EXPECT_THROW(c.validate(), ConfigError);
  c = SolverConfig{};
  c.filter.kind = FilterKind::initial_quartic;
  EXPECT_THROW(c.validate(), ConfigError);
  EXPECT_NEAR(SolverConfig{}.dt_max, 0.01 * 2 * pi, 1e-15);
  EXPECT_NEAR(SolverConfig{}.cfl, pi / 4, 1e-15);
}

TEST(Rk4, ZeroStaysZeroAndBeltramiSteady) {
  const GridSpec g = GridSpec::periodic_cube(32);
  EulerSolver solver(g, SolverConfig{});
  SimulationState z;
  z.omega_hat = SpectralField(g, 3);
  solver.rk4_step(z, 0.01);
  EXPECT_EQ(max_coeff(z.omega_hat), 0.0);
  EXPECT_DOUBLE_EQ(z.t, 0.01);

  SimulationState s;
  s.omega_hat = beltrami_hat(32);
  const SpectralField before = s.omega_hat;
  solver.rk4_step(s, 0.01);
  EXPECT_LE(relative_change(s.omega_hat, before), 1e-10);
  EXPECT_EQ(s.step_count, 1);
  EXPECT_THROW(solver.rk4_step(s, 0.0), std::invalid_argument);
}

TEST(Rk4, NonFiniteUpdateAbortsWithoutTouchingState) {
  const GridSpec g = GridSpec::periodic_cube(16);
  EulerSolver solver(g, SolverConfig{});
  SimulationState s;
  s.omega_hat = taylor_green_hat(16);
  s.omega_hat *= 1e200;
  const SpectralField before = s.omega_hat;
  try {
    solver.rk4_step(s, 1.0);
    FAIL() << "expected NumericalError";
  } catch (const NumericalError& e) {
    EXPECT_EQ(e.last_good_time(), 0.0);
  }
  EXPECT_EQ(s.t, 0.0);
  EXPECT_EQ(relative_change(s.omega_hat, before), 0.0);
}

TEST(Run, NoStepWhenAlreadyAtEnd) {
  SimulationState s;
  s.omega_hat = taylor_green_hat(16);
  s.t = 0.25;
  s.config.t_end = 0.25;
  int samples = 0;
  RunHooks h;
  h.on_sample = [&](const SimulationState&) { ++samples; };
  const SimulationState r = run_simulation(s, h);
  EXPECT_EQ(r.step_count, 0);
  EXPECT_EQ(r.t, 0.25);
  EXPECT_EQ(relative_change(r.omega_hat, s.omega_hat), 0.0);
  EXPECT_EQ(samples, 1);
  s.config.t_end = 0.1;
  EXPECT_THROW(run_simulation(s), ConfigError);
}

TEST(Run, LandsOnCadenceAndEnd) {
  SimulationState s;
  s.omega_hat = taylor_green_hat(16);
  s.config.t_end = 0.35;
  s.config.cadence = 0.1;
  std::vector<double> times;
  double prev_t = -1;
  RunHooks h;
  h.on_sample = [&](const SimulationState& st) { times.push_back(st.t); };
  h.on_step = [&](const SimulationState& st) {
    EXPECT_GT(st.t, prev_t);
    prev_t = st.t;
    EXPECT_LE(relative_divergence(st.omega_hat), 1e-12);
    EXPECT_LE(relative_divergence(velocity_from_vorticity(st.omega_hat)), 1e-12);
    const double w_rms = std::sqrt(spectral_mean_square(st.omega_hat));
    for (int c = 0; c < 3; ++c) EXPECT_LE(std::abs(st.omega_hat.component(c)[0]), 1e-13 * w_rms);
  };
  const SimulationState r = run_simulation(s, h);
  ASSERT_EQ(times.size(), 5u);
  EXPECT_EQ(times[0], 0.0);
  EXPECT_EQ(times[1], 0.1);
  EXPECT_EQ(times[2], 0.2);
  EXPECT_DOUBLE_EQ(times[3], 0.30000000000000004);
  EXPECT_EQ(times[4], 0.35);
  EXPECT_EQ(r.t, 0.35);
}

TEST(Run, SplitEqualsContinuous) {
  SimulationState s;
  s.omega_hat = taylor_green_hat(16);
  s.config.t_end = 0.4;
  s.config.cadence = 0.2;
  const SimulationState full = run_simulation(s);
  s.config.t_end = 0.2;
  SimulationState half = run_simulation(s);
  half.config.t_end = 0.4;
  const SimulationState rest = run_simulation(half);
  EXPECT_EQ(rest.t, full.t);
  EXPECT_EQ(rest.step_count, full.step_count);
  EXPECT_LE(relative_change(rest.omega_hat, full.omega_hat), 1e-12);
}

TEST(Run, EnergyDoesNotGrowUnderSmoothing) {
  // Under-resolved so that the mask removes energy.
  SimulationState s;
  s.omega_hat = taylor_green_hat(16);
  s.config.t_end = 3.0;
  s.config.cadence = 0.5;
  auto energy = [](const SpectralField& w) { return spectral_mean_square(velocity_from_vorticity(w)); };
  double prev = energy(s.omega_hat);
  RunHooks h;
  h.on_sample = [&](const SimulationState& st) {
    const double e = energy(st.omega_hat);
    EXPECT_LE(e, prev * (1 + 1e-12));
    prev = e;
  };
  run_simulation(s, h);
}
