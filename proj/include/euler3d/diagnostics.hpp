#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "euler3d/field.hpp"

namespace euler3d {

/// Scalar diagnostics of one vorticity snapshot.
struct DiagnosticsRecord {
  double t = 0.0;
  double max_vorticity = 0.0;
  std::array<double, 3> max_location{};  ///< box coordinates of the peak node
  double max_velocity = 0.0;
  double enstrophy = 0.0;  ///< integral of |omega|^2 over the box
  /// 2 * integral of omega . (omega . grad) u
  double production_direct = 0.0;
  /// d(enstrophy)/dt from the record series; filled by fill_production_differences.
  std::optional<double> production_diff;
  double stretch_sup = 0.0;      ///< max |xi . grad u . omega|
  double stretch_at_peak = 0.0;  ///< xi . grad u . omega at the peak node
  /// stretch_sup / (|omega|_inf log |omega|_inf), only when |omega|_inf > 1.
  std::optional<double> bound_ratio;
};

/// Side values computed alongside a record for consistency checks.
struct RecordChecks {
  double enstrophy_physical = 0.0;     ///< node-sum enstrophy
  double vorticity_divergence = 0.0;   ///< relative_divergence(omega_hat)
  double velocity_divergence = 0.0;
};

/// Threshold below which xi = omega/|omega| is treated as undefined.
inline constexpr double kUnitVorticityThreshold = 1e-10;

DiagnosticsRecord compute_record(const SpectralField& omega_hat, double t,
                                 RecordChecks* checks = nullptr);

/// Fills production_diff for every record by differentiating the enstrophy
/// series with three-point Lagrange weights (centered in the interior,
/// one-sided at the ends).  Needs at least three records with increasing t.
void fill_production_differences(std::span<DiagnosticsRecord> series);

/// Pointwise xi . (grad u) . omega, zero where |omega| <= 1e-10 |omega|_inf.
RealField stretching_field(const SpectralField& omega_hat);

/// Shell sums of |F_k|^2 over integer-index radius |k| in (n - 1/2, n + 1/2].
struct ShellSpectrum {
  std::vector<double> shells;  ///< shells[n - 1] holds shell n >= 1
  double zero_mode = 0.0;
  double total() const;
};

ShellSpectrum shell_spectrum(const SpectralField& F);

struct SpectrumRow {
  double t = 0.0;
  ShellSpectrum energy;     ///< from the velocity coefficients
  ShellSpectrum enstrophy;  ///< from the vorticity coefficients
};

SpectrumRow spectrum_row(const SpectralField& omega_hat, double t);

/// Root-mean-square difference of log10 shell values against a reference.
/// Shells compared are the first `max_shells` present in both where the
/// reference is above floor * its peak.  Candidate values below that level
/// are clamped to it before taking logs.
struct SpectrumDistance {
  double distance = 0.0;
  std::size_t shells = 0;
};

SpectrumDistance log_spectrum_distance(const ShellSpectrum& candidate, const ShellSpectrum& reference,
                                       double floor = 1e-10,
                                       std::size_t max_shells = static_cast<std::size_t>(-1));

/// Per-axis two-thirds truncation radii floor(N_j / 3), ascending, without
/// repeats.
std::vector<int> two_thirds_cutoff_shells(const GridSpec& grid);

/// First shell within `window` of `cutoff` whose value exceeds the previous
/// shell by more than the factor `rise`.  A decaying tail has none.
std::optional<int> find_cutoff_spike(const ShellSpectrum& s, int cutoff, int window = 5, double rise = 1.0);
/// First spike near any of the cutoffs.
std::optional<int> find_cutoff_spike(const ShellSpectrum& s, std::span<const int> cutoffs, int window = 5,
                                     double rise = 1.0);

enum class GrowthModel { exponential, double_exponential, inverse_linear, power_constant };

std::string_view to_string(GrowthModel m);

struct FitReport {
  GrowthModel model{};
  std::size_t points = 0;
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  double prescale = 1.0;               ///< factor applied before taking logs
  std::optional<double> root;          ///< inverse_linear: extrapolated blowup time
  std::vector<double> scaling_series;  ///< power_constant: c(t) = |omega|(T - t)
};

/// Least-squares growth fits.  exponential: log w vs t; double_exponential:
/// log log(prescale w) vs t (prescale 8 is used automatically when some w <= 1);
/// inverse_linear: 1/w vs t; power_constant: log w vs log(T - t) with T
/// required.  Throws std::invalid_argument for fewer than three points or
/// non-increasing t, std::domain_error when a logarithm is undefined.
FitReport fit_growth(std::span<const double> t, std::span<const double> w, GrowthModel model,
                     std::optional<double> blowup_time = std::nullopt,
                     std::optional<double> prescale = std::nullopt);

}  // namespace euler3d
