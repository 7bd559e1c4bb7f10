#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "euler3d/diagnostics.hpp"
#include "euler3d/initial_conditions.hpp"
#include "euler3d/solver.hpp"
#include "euler3d/spectral.hpp"
#include "support.hpp"

using namespace euler3d;
using fixtures::sample;
constexpr double pi = std::numbers::pi;

namespace {

std::array<double, 3> abc(double x, double y, double z) {
  return {std::sin(z) + std::cos(y), std::sin(x) + std::cos(z), std::sin(y) + std::cos(x)};
}

// xi . (omega . grad) u for the ABC flow by central differences of the
// closed form.
double abc_stretch_fd(double x, double y, double z) {
  const double h = 1e-5;
  const auto w = abc(x, y, z);
  std::array<double, 3> s{};
  const double p[3] = {x, y, z};
  for (int j = 0; j < 3; ++j) {
    double a[3] = {p[0], p[1], p[2]}, b[3] = {p[0], p[1], p[2]};
    a[j] += h;
    b[j] -= h;
    const auto ua = abc(a[0], a[1], a[2]), ub = abc(b[0], b[1], b[2]);
    for (int i = 0; i < 3; ++i) s[i] += w[j] * (ua[i] - ub[i]) / (2 * h);
  }
  const double m = std::sqrt(w[0] * w[0] + w[1] * w[1] + w[2] * w[2]);
  return (w[0] * s[0] + w[1] * s[1] + w[2] * s[2]) / m;
}

SpectralField analytic_hat(AnalyticFlow k, int n) {
  SpectralField w = forward_transform(analytic_test_fields(k, GridSpec::periodic_cube(n)).vorticity);
  zero_nyquist_modes(w);
  return w;
}

}  // namespace

TEST(Record, ZeroField) {
  const DiagnosticsRecord r = compute_record(SpectralField(GridSpec::periodic_cube(8), 3), 0.5);
  EXPECT_EQ(r.t, 0.5);
  EXPECT_EQ(r.max_vorticity, 0.0);
  EXPECT_EQ(r.max_velocity, 0.0);
  EXPECT_EQ(r.enstrophy, 0.0);
  EXPECT_EQ(r.production_direct, 0.0);
  EXPECT_EQ(r.stretch_sup, 0.0);
  EXPECT_FALSE(r.bound_ratio.has_value());
  EXPECT_FALSE(r.production_diff.has_value());
}

TEST(Record, BeltramiClosedForms) {
  const SpectralField w = analytic_hat(AnalyticFlow::beltrami_abc, 32);
  RecordChecks checks;
  const DiagnosticsRecord r = compute_record(w, 0.0, &checks);
  EXPECT_NEAR(r.enstrophy, 3 * std::pow(2 * pi, 3), 1e-10 * r.enstrophy);
  EXPECT_NEAR(r.enstrophy, 744.15, 0.01);
  EXPECT_NEAR(checks.enstrophy_physical, r.enstrophy, 1e-10 * r.enstrophy);
  EXPECT_LE(checks.vorticity_divergence, 1e-12);
  EXPECT_LE(checks.velocity_divergence, 1e-12);

  // brute-force maximum of |u| on a fine lattice
  double brute = 0;
  const int m = 192;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        const auto u = abc(-pi + 2 * pi * i / m, -pi + 2 * pi * j / m, -pi + 2 * pi * k / m);
        brute = std::max(brute, std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2]));
      }
  EXPECT_NEAR(brute, std::sqrt(6.0), 1e-12);
  EXPECT_NEAR(r.max_velocity, brute, 1e-12);
  EXPECT_NEAR(r.max_vorticity, brute, 1e-12);
  ASSERT_TRUE(r.bound_ratio.has_value());
  EXPECT_NEAR(*r.bound_ratio, r.stretch_sup / (r.max_vorticity * std::log(r.max_vorticity)), 1e-15);
}

TEST(Record, PeakLocationIsANodeOfTheMaximum) {
  const SpectralField w = analytic_hat(AnalyticFlow::taylor_green, 16);
  const DiagnosticsRecord r = compute_record(w, 0.0);
  EXPECT_NEAR(r.max_vorticity, 2.0, 1e-13);
  const double x = r.max_location[0], y = r.max_location[1], z = r.max_location[2];
  EXPECT_NEAR(std::abs(std::sin(x) * std::sin(y) * std::cos(z)), 1.0, 1e-13);
}

TEST(Stretching, PlanarFlowHasNone) {
  const GridSpec g = GridSpec::periodic_cube(32);
  const RealField w = sample(g, 3, [](double x, double y, double, double* o) {
    o[0] = 0;
    o[1] = 0;
    o[2] = 2 * std::sin(x) * std::sin(y) + 1.5 * std::cos(2 * x + y);
  });
  const RealField s = stretching_field(forward_transform(w));
  EXPECT_LE(fixtures::max_abs(s), 1e-12 * max_magnitude(w));
}

TEST(Stretching, UniformVorticityHasNone) {
  const GridSpec g = GridSpec::periodic_cube(8);
  RealField w(g, 3);
  for (double& v : w.component(1)) v = 8.0;
  const RealField s = stretching_field(forward_transform(w));
  EXPECT_EQ(fixtures::max_abs(s), 0.0);
}

TEST(Stretching, BeltramiMatchesFiniteDifferences) {
  const GridSpec g = GridSpec::periodic_cube(64);
  const RealField s = stretching_field(analytic_hat(AnalyticFlow::beltrami_abc, 64));
  double err = 0;
  for (int ix = 0; ix < 64; ix += 3)
    for (int iy = 0; iy < 64; iy += 5)
      for (int iz = 0; iz < 64; iz += 7) {
        const double fd =
            abc_stretch_fd(g.coordinate(Axis::x, ix), g.coordinate(Axis::y, iy), g.coordinate(Axis::z, iz));
        err = std::max(err, std::abs(s.at(0, ix, iy, iz) - fd));
      }
  EXPECT_LE(err, 1e-6);
}

TEST(Production, DirectMatchesDifferencedOnResolvedRun) {
  SimulationState s;
  s.omega_hat = analytic_hat(AnalyticFlow::taylor_green, 32);
  s.config.t_end = 1.0;
  s.config.cadence = 0.05;
  s.config.dt_max = 0.01;
  std::vector<DiagnosticsRecord> recs;
  RunHooks h;
  h.on_sample = [&](const SimulationState& st) { recs.push_back(compute_record(st.omega_hat, st.t)); };
  run_simulation(s, h);
  fill_production_differences(recs);
  double peak = 0, worst = 0;
  for (const auto& r : recs) peak = std::max(peak, std::abs(r.production_direct));
  for (std::size_t i = 1; i + 1 < recs.size(); ++i)
    worst = std::max(worst, std::abs(recs[i].production_direct - *recs[i].production_diff));
  EXPECT_GT(peak, 1.0);
  EXPECT_LE(worst, 0.02 * peak);
}

TEST(Production, DifferencesAreExactForQuadratics) {
  std::vector<DiagnosticsRecord> recs(5);
  const double ts[5] = {0.0, 0.1, 0.3, 0.35, 0.6};
  for (int i = 0; i < 5; ++i) {
    recs[i].t = ts[i];
    recs[i].enstrophy = 2 + 3 * ts[i] - 4 * ts[i] * ts[i];
  }
  fill_production_differences(recs);
  for (int i = 0; i < 5; ++i) EXPECT_NEAR(*recs[i].production_diff, 3 - 8 * ts[i], 1e-12);
  std::vector<DiagnosticsRecord> two(2);
  EXPECT_THROW(fill_production_differences(two), std::invalid_argument);
}

TEST(Spectrum, SingleCosine) {
  const GridSpec g = GridSpec::periodic_cube(16);
  const RealField u = sample(g, 3, [](double x, double, double, double* o) {
    o[0] = std::cos(x);
    o[1] = 0;
    o[2] = 0;
  });
  const ShellSpectrum s = shell_spectrum(forward_transform(u));
  ASSERT_GE(s.shells.size(), 1u);
  EXPECT_NEAR(s.shells[0], 0.5, 1e-12);
  for (std::size_t i = 1; i < s.shells.size(); ++i) EXPECT_LE(s.shells[i], 1e-30);
  EXPECT_NEAR(s.zero_mode, 0.0, 1e-30);
}

TEST(Spectrum, ParsevalClosure) {
  const GridSpec g = GridSpec::kerr_box(16, 12, 10);
  const RealField f = fixtures::random_field(g, 3, 21);
  const ShellSpectrum s = shell_spectrum(forward_transform(f));
  const double ms = physical_mean_square(f);
  EXPECT_NEAR(s.total() + s.zero_mode, ms, 1e-10 * ms);
}

TEST(Spectrum, EmptyShellsAreZero) {
  const GridSpec g = GridSpec::periodic_cube(16);
  const RealField u = sample(g, 1, [](double x, double, double z, double* o) { o[0] = std::cos(3 * x) + std::sin(4 * z); });
  const ShellSpectrum s = shell_spectrum(forward_transform(u));
  EXPECT_LE(s.shells[0], 1e-30);
  EXPECT_LE(s.shells[1], 1e-30);
  EXPECT_NEAR(s.shells[2], 0.5, 1e-12);
  EXPECT_NEAR(s.shells[3], 0.5, 1e-12);
}

TEST(Spectrum, RowUsesVelocityAndVorticity) {
  const SpectralField w = analytic_hat(AnalyticFlow::beltrami_abc, 16);
  const SpectrumRow row = spectrum_row(w, 1.5);
  EXPECT_EQ(row.t, 1.5);
  EXPECT_NEAR(row.energy.shells[0], 3.0, 1e-12);
  EXPECT_NEAR(row.enstrophy.shells[0], 3.0, 1e-12);
}

TEST(SpectrumCompare, DistanceAndSpike) {
  ShellSpectrum ref, same, off;
  for (int n = 1; n <= 20; ++n) {
    ref.shells.push_back(std::exp(-0.5 * n));
    same.shells.push_back(std::exp(-0.5 * n));
    off.shells.push_back(10 * std::exp(-0.5 * n));
  }
  EXPECT_EQ(log_spectrum_distance(same, ref).distance, 0.0);
  EXPECT_NEAR(log_spectrum_distance(off, ref).distance, 1.0, 1e-12);
  EXPECT_EQ(log_spectrum_distance(off, ref).shells, 20u);
  EXPECT_FALSE(find_cutoff_spike(ref, 10).has_value());
  ShellSpectrum bump = ref;
  bump.shells[11] = bump.shells[9];
  ASSERT_TRUE(find_cutoff_spike(bump, 10).has_value());
  EXPECT_EQ(*find_cutoff_spike(bump, 10), 12);
  EXPECT_EQ(two_thirds_cutoff_shells(GridSpec::kerr_box(96, 64, 192)), (std::vector<int>{21, 32, 64}));
  EXPECT_EQ(two_thirds_cutoff_shells(GridSpec::periodic_cube(48)), std::vector<int>{16});
  const std::vector<int> cutoffs{4, 12};
  EXPECT_EQ(find_cutoff_spike(bump, cutoffs), 12);
  EXPECT_EQ(log_spectrum_distance(off, ref, 1e-10, 7).shells, 7u);
}

TEST(Fit, DoubleExponentialExact) {
  std::vector<double> t, w;
  for (int i = 0; i <= 20; ++i) {
    t.push_back(0.1 * i);
    w.push_back(std::exp(std::exp(0.1 * i)));
  }
  const FitReport f = fit_growth(t, w, GrowthModel::double_exponential);
  EXPECT_NEAR(f.slope, 1.0, 1e-10);
  EXPECT_NEAR(f.intercept, 0.0, 1e-10);
  EXPECT_NEAR(f.r_squared, 1.0, 1e-10);
  EXPECT_EQ(f.prescale, 1.0);
}

TEST(Fit, DoubleExponentialPrescalesSmallValues) {
  std::vector<double> t{0, 1, 2, 3}, w{0.5, 0.7, 0.9, 1.2};
  const FitReport f = fit_growth(t, w, GrowthModel::double_exponential);
  EXPECT_EQ(f.prescale, 8.0);
  EXPECT_THROW(fit_growth(t, w, GrowthModel::double_exponential, std::nullopt, 1.0), std::domain_error);
}

TEST(Fit, InverseLinearRoot) {
  std::vector<double> t, w;
  for (int i = 0; i <= 16; ++i) {
    t.push_back(0.25 * i);
    w.push_back(2.0 / (5.0 - 0.25 * i));
  }
  const FitReport f = fit_growth(t, w, GrowthModel::inverse_linear);
  ASSERT_TRUE(f.root.has_value());
  EXPECT_NEAR(*f.root, 5.0, 1e-8);
  EXPECT_NEAR(f.slope, -0.5, 1e-12);
}

TEST(Fit, ConstantSeries) {
  std::vector<double> t{0, 1, 2, 3, 4}, w(5, 3.0);
  for (GrowthModel m : {GrowthModel::exponential, GrowthModel::double_exponential, GrowthModel::inverse_linear})
    EXPECT_NEAR(fit_growth(t, w, m).slope, 0.0, 1e-14);
  const FitReport p = fit_growth(t, w, GrowthModel::power_constant, 5.0);
  EXPECT_NEAR(p.slope, 0.0, 1e-14);
  ASSERT_EQ(p.scaling_series.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(p.scaling_series[i], 3.0 * (5.0 - t[i]), 1e-14);
  for (std::size_t i = 1; i < 5; ++i) EXPECT_LT(p.scaling_series[i], p.scaling_series[i - 1]);
}

TEST(Fit, PowerConstantRecoversBlowupScaling) {
  std::vector<double> t, w;
  for (int i = 0; i < 10; ++i) {
    t.push_back(i);
    w.push_back(4.0 / (18.7 - i));
  }
  const FitReport p = fit_growth(t, w, GrowthModel::power_constant, 18.7);
  EXPECT_NEAR(p.slope, -1.0, 1e-12);
  EXPECT_NEAR(std::exp(p.intercept), 4.0, 1e-11);
  for (double c : p.scaling_series) EXPECT_NEAR(c, 4.0, 1e-12);
}

TEST(Fit, Errors) {
  std::vector<double> t{0, 1}, w{1, 2};
  EXPECT_THROW(fit_growth(t, w, GrowthModel::exponential), std::invalid_argument);
  std::vector<double> t3{0, 1, 2}, neg{1, -1, 2};
  EXPECT_THROW(fit_growth(t3, neg, GrowthModel::exponential), std::domain_error);
  std::vector<double> back{0, 2, 1}, pos{1, 2, 3};
  EXPECT_THROW(fit_growth(back, pos, GrowthModel::exponential), std::invalid_argument);
  EXPECT_THROW(fit_growth(t3, pos, GrowthModel::power_constant), std::invalid_argument);
  EXPECT_THROW(fit_growth(t3, pos, GrowthModel::power_constant, 1.5), std::domain_error);
}
