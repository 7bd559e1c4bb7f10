#include "euler3d/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "euler3d/solver.hpp"
#include "euler3d/spectral.hpp"

namespace euler3d {

namespace {

/// Physical velocity, vorticity and stretching vector (omega . grad) u.
struct FlowSnapshot {
  RealField u, w, stretch;
  SpectralField u_hat;

  explicit FlowSnapshot(const SpectralField& omega_hat)
      : u(omega_hat.grid(), 3), w(omega_hat.grid(), 3), stretch(omega_hat.grid(), 3) {
    const GridSpec& g = omega_hat.grid();
    // A uniform vorticity component induces no periodic velocity.
    SpectralField fluctuation = omega_hat;
    for (int c = 0; c < 3; ++c) fluctuation.component(c)[0] = 0.0;
    u_hat = velocity_from_vorticity(fluctuation);
    AlignedVector<Complex> scratch(g.num_modes()), tmp(g.num_modes());
    AlignedVector<double> d(g.num_nodes());
    for (int c = 0; c < 3; ++c) {
      fft::inverse(g, u_hat.component(c), u.component(c), scratch);
      fft::inverse(g, omega_hat.component(c), w.component(c), scratch);
    }
    const WavenumberTable kt(g);
    const auto ext = g.spectral_extent();
    const std::size_t nodes = g.num_nodes();
    for (int j = 0; j < 3; ++j) {
      const double* wj = w.component(j).data();
      for (int i = 0; i < 3; ++i) {
        auto src = u_hat.component(i);
        std::size_t m = 0;
        for (int ix = 0; ix < ext[0]; ++ix)
          for (int iy = 0; iy < ext[1]; ++iy)
            for (int kz = 0; kz < ext[2]; ++kz, ++m) {
              const int pos[3] = {ix, iy, kz};
              tmp[m] = Complex(0.0, kt.kappa[j][pos[j]]) * src[m];
            }
        fft::inverse(g, tmp, d, scratch);
        double* si = stretch.component(i).data();
        for (std::size_t n = 0; n < nodes; ++n) si[n] += wj[n] * d[n];
      }
    }
  }
};

double magnitude_at(const RealField& f, std::size_t n) {
  double s = 0.0;
  for (int c = 0; c < f.components(); ++c) s += f.component(c)[n] * f.component(c)[n];
  return std::sqrt(s);
}

}  // namespace

DiagnosticsRecord compute_record(const SpectralField& omega_hat, double t, RecordChecks* checks) {
  const GridSpec& g = omega_hat.grid();
  const FlowSnapshot snap(omega_hat);
  const std::size_t nodes = g.num_nodes();

  DiagnosticsRecord r;
  r.t = t;
  std::size_t peak_node = 0;
  double sum_w2 = 0.0, sum_prod = 0.0;
  for (std::size_t n = 0; n < nodes; ++n) {
    const double wm = magnitude_at(snap.w, n);
    if (wm > r.max_vorticity) {
      r.max_vorticity = wm;
      peak_node = n;
    }
    r.max_velocity = std::max(r.max_velocity, magnitude_at(snap.u, n));
    sum_w2 += wm * wm;
    for (int c = 0; c < 3; ++c) sum_prod += snap.w.component(c)[n] * snap.stretch.component(c)[n];
  }
  const double cell = g.volume() / static_cast<double>(nodes);
  r.enstrophy = g.volume() * spectral_mean_square(omega_hat);
  r.production_direct = 2.0 * sum_prod * cell;

  const double eps = kUnitVorticityThreshold * r.max_vorticity;
  for (std::size_t n = 0; n < nodes; ++n) {
    const double wm = magnitude_at(snap.w, n);
    if (wm <= eps || wm == 0.0) continue;
    double a = 0.0;
    for (int c = 0; c < 3; ++c) a += snap.w.component(c)[n] * snap.stretch.component(c)[n];
    a /= wm;
    r.stretch_sup = std::max(r.stretch_sup, std::abs(a));
    if (n == peak_node) r.stretch_at_peak = a;
  }
  const int iz = static_cast<int>(peak_node % g.n[2]);
  const int iy = static_cast<int>((peak_node / g.n[2]) % g.n[1]);
  const int ix = static_cast<int>(peak_node / (static_cast<std::size_t>(g.n[2]) * g.n[1]));
  r.max_location = {g.coordinate(Axis::x, ix), g.coordinate(Axis::y, iy), g.coordinate(Axis::z, iz)};
  if (r.max_vorticity > 1.0)
    r.bound_ratio = r.stretch_sup / (r.max_vorticity * std::log(r.max_vorticity));

  if (checks) {
    checks->enstrophy_physical = sum_w2 * cell;
    checks->vorticity_divergence = relative_divergence(omega_hat);
    checks->velocity_divergence = relative_divergence(snap.u_hat);
  }
  return r;
}

namespace {
/// Derivative at t[at] of the quadratic through three samples.
double lagrange_derivative(const double* t, const double* f, int at) {
  const double x = t[at];
  double d = 0.0;
  for (int i = 0; i < 3; ++i) {
    // d/dx of L_i(x) = sum_{m != i} prod_{j != i, m} (x - t_j) / prod_{j != i} (t_i - t_j)
    double denom = 1.0;
    for (int j = 0; j < 3; ++j)
      if (j != i) denom *= t[i] - t[j];
    double numer = 0.0;
    for (int m = 0; m < 3; ++m) {
      if (m == i) continue;
      double p = 1.0;
      for (int j = 0; j < 3; ++j)
        if (j != i && j != m) p *= x - t[j];
      numer += p;
    }
    d += f[i] * numer / denom;
  }
  return d;
}
}  // namespace

void fill_production_differences(std::span<DiagnosticsRecord> series) {
  const std::size_t n = series.size();
  if (n < 3) throw std::invalid_argument("fill_production_differences: need at least 3 records");
  for (std::size_t i = 1; i < n; ++i)
    if (!(series[i].t > series[i - 1].t))
      throw std::invalid_argument("fill_production_differences: times must increase");
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t base = i == 0 ? 0 : (i == n - 1 ? n - 3 : i - 1);
    const double t[3] = {series[base].t, series[base + 1].t, series[base + 2].t};
    const double e[3] = {series[base].enstrophy, series[base + 1].enstrophy, series[base + 2].enstrophy};
    series[i].production_diff = lagrange_derivative(t, e, static_cast<int>(i - base));
  }
}

RealField stretching_field(const SpectralField& omega_hat) {
  const FlowSnapshot snap(omega_hat);
  RealField out(omega_hat.grid(), 1);
  const std::size_t nodes = omega_hat.grid().num_nodes();
  const double eps = kUnitVorticityThreshold * max_magnitude(snap.w);
  auto dst = out.component(0);
  for (std::size_t n = 0; n < nodes; ++n) {
    const double wm = magnitude_at(snap.w, n);
    if (wm <= eps || wm == 0.0) continue;
    double a = 0.0;
    for (int c = 0; c < 3; ++c) a += snap.w.component(c)[n] * snap.stretch.component(c)[n];
    dst[n] = a / wm;
  }
  return out;
}

double ShellSpectrum::total() const {
  return std::accumulate(shells.begin(), shells.end(), 0.0);
}

ShellSpectrum shell_spectrum(const SpectralField& F) {
  const GridSpec& g = F.grid();
  const auto ext = g.spectral_extent();
  const double kmax = std::sqrt(0.25 * (double(g.n[0]) * g.n[0] + double(g.n[1]) * g.n[1] +
                                        double(g.n[2]) * g.n[2]));
  ShellSpectrum s;
  s.shells.assign(static_cast<std::size_t>(std::lround(kmax)) + 1, 0.0);
  for (int c = 0; c < F.components(); ++c) {
    auto data = F.component(c);
    std::size_t m = 0;
    for (int ix = 0; ix < ext[0]; ++ix) {
      const long kx = g.mode_index(Axis::x, ix);
      for (int iy = 0; iy < ext[1]; ++iy) {
        const long ky = g.mode_index(Axis::y, iy);
        for (int kz = 0; kz < ext[2]; ++kz, ++m) {
          const long k2 = kx * kx + ky * ky + static_cast<long>(kz) * kz;
          const double e = mode_weight(g, kz) * std::norm(data[m]);
          if (k2 == 0) {
            s.zero_mode += e;
            continue;
          }
          // |k|^2 is an integer, so |k| never sits on a half-integer shell edge.
          const auto shell = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(k2))));
          s.shells[shell - 1] += e;
        }
      }
    }
  }
  while (s.shells.size() > 1 && s.shells.back() == 0.0) s.shells.pop_back();
  return s;
}

SpectrumRow spectrum_row(const SpectralField& omega_hat, double t) {
  SpectrumRow row;
  row.t = t;
  row.energy = shell_spectrum(velocity_from_vorticity(omega_hat));
  row.enstrophy = shell_spectrum(omega_hat);
  return row;
}

SpectrumDistance log_spectrum_distance(const ShellSpectrum& candidate, const ShellSpectrum& reference,
                                       double floor, std::size_t max_shells) {
  if (!(floor > 0)) throw std::invalid_argument("log_spectrum_distance: floor must be positive");
  double peak = 0.0;
  for (double v : reference.shells) peak = std::max(peak, v);
  if (peak <= 0) throw std::invalid_argument("log_spectrum_distance: empty reference");
  const double level = floor * peak;
  const std::size_t m = std::min({reference.shells.size(), candidate.shells.size(), max_shells});
  std::size_t n = 0;
  double sum = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    if (!(reference.shells[i] > level)) continue;
    const double d = std::log10(std::max(candidate.shells[i], level)) - std::log10(reference.shells[i]);
    sum += d * d;
    ++n;
  }
  if (n == 0) throw std::invalid_argument("log_spectrum_distance: no resolved shells");
  return {std::sqrt(sum / static_cast<double>(n)), n};
}

std::vector<int> two_thirds_cutoff_shells(const GridSpec& grid) {
  std::vector<int> c{grid.n[0] / 3, grid.n[1] / 3, grid.n[2] / 3};
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  return c;
}

std::optional<int> find_cutoff_spike(const ShellSpectrum& s, int cutoff, int window, double rise) {
  const int lo = std::max(2, cutoff - window);
  const int hi = std::min(static_cast<int>(s.shells.size()), cutoff + window);
  for (int n = lo; n <= hi; ++n)
    if (s.shells[n - 1] > rise * s.shells[n - 2]) return n;
  return std::nullopt;
}

std::optional<int> find_cutoff_spike(const ShellSpectrum& s, std::span<const int> cutoffs, int window,
                                     double rise) {
  for (int c : cutoffs)
    if (auto n = find_cutoff_spike(s, c, window, rise)) return n;
  return std::nullopt;
}

std::string_view to_string(GrowthModel m) {
  switch (m) {
    case GrowthModel::exponential: return "exponential";
    case GrowthModel::double_exponential: return "double_exponential";
    case GrowthModel::inverse_linear: return "inverse_linear";
    case GrowthModel::power_constant: return "power_constant";
  }
  return "unknown";
}

namespace {
struct LineFit {
  double slope, intercept, r_squared;
};

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LineFit f{};
  f.slope = sxx > 0 ? sxy / sxx : 0.0;
  f.intercept = my - f.slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (f.intercept + f.slope * x[i]);
    ss_res += r * r;
  }
  // A flat series is fitted exactly by slope 0.
  f.r_squared = syy > 0 ? 1.0 - ss_res / syy : 1.0;
  return f;
}
}  // namespace

FitReport fit_growth(std::span<const double> t, std::span<const double> w, GrowthModel model,
                     std::optional<double> blowup_time, std::optional<double> prescale) {
  if (t.size() != w.size()) throw std::invalid_argument("fit_growth: series lengths differ");
  if (t.size() < 3) throw std::invalid_argument("fit_growth: need at least 3 points");
  for (std::size_t i = 1; i < t.size(); ++i)
    if (!(t[i] > t[i - 1])) throw std::invalid_argument("fit_growth: times must strictly increase");

  FitReport rep;
  rep.model = model;
  rep.points = t.size();
  std::vector<double> x(t.begin(), t.end()), y(w.size());
  switch (model) {
    case GrowthModel::exponential:
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (!(w[i] > 0)) throw std::domain_error("fit_growth: nonpositive value under log");
        y[i] = std::log(w[i]);
      }
      break;
    case GrowthModel::double_exponential: {
      const bool all_above_one = std::all_of(w.begin(), w.end(), [](double v) { return v > 1.0; });
      rep.prescale = prescale.value_or(all_above_one ? 1.0 : 8.0);
      for (std::size_t i = 0; i < w.size(); ++i) {
        const double v = rep.prescale * w[i];
        if (!(v > 1.0)) throw std::domain_error("fit_growth: value too small for a double logarithm");
        y[i] = std::log(std::log(v));
      }
      break;
    }
    case GrowthModel::inverse_linear:
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0.0) throw std::domain_error("fit_growth: zero value under inversion");
        y[i] = 1.0 / w[i];
      }
      break;
    case GrowthModel::power_constant: {
      if (!blowup_time) throw std::invalid_argument("fit_growth: power_constant needs a blowup time");
      const double T = *blowup_time;
      rep.scaling_series.resize(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (!(T > t[i])) throw std::domain_error("fit_growth: blowup time must exceed all sample times");
        if (!(w[i] > 0)) throw std::domain_error("fit_growth: nonpositive value under log");
        x[i] = std::log(T - t[i]);
        y[i] = std::log(w[i]);
        rep.scaling_series[i] = w[i] * (T - t[i]);
      }
      break;
    }
  }
  const LineFit f = least_squares(x, y);
  rep.slope = f.slope;
  rep.intercept = f.intercept;
  rep.r_squared = f.r_squared;
  if (model == GrowthModel::inverse_linear && f.slope != 0.0) rep.root = -f.intercept / f.slope;
  return rep;
}

}  // namespace euler3d
