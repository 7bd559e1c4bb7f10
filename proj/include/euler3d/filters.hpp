#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "euler3d/field.hpp"
#include "euler3d/grid.hpp"

namespace euler3d {

enum class FilterKind { smoothing, two_thirds, initial_quartic };

std::string_view to_string(FilterKind kind);
/// Throws ConfigError on an unknown name.
FilterKind parse_filter_kind(std::string_view name);

struct FilterSpec {
  FilterKind kind = FilterKind::smoothing;
  double alpha = 36.0;  ///< smoothing strength
  int order = 36;       ///< smoothing exponent m (even)
  double quartic_coefficient = 0.05;

  /// Throws ConfigError for alpha <= 0 or an odd / too small order.
  void validate() const;
};

/// exp(-alpha x^m) for x in [0, 1]; throws std::domain_error outside.
double smoothing_profile(double x, double alpha = 36.0, int order = 36);

/// Separable spectral mask: the value at a stored mode is the product of
/// one factor per axis.  All three supported filters have this form.
class FilterMask {
 public:
  FilterMask(const GridSpec& grid, std::array<std::vector<double>, 3> factors);

  const GridSpec& grid() const noexcept { return grid_; }
  std::span<const double> axis_factor(Axis a) const noexcept { return factors_[index(a)]; }
  double value(int ix, int iy, int kz) const noexcept {
    return factors_[0][ix] * factors_[1][iy] * factors_[2][kz];
  }

  /// Materialize as a scalar spectral field (real entries).
  SpectralField to_field() const;

 private:
  GridSpec grid_;
  std::array<std::vector<double>, 3> factors_;
};

FilterMask build_filter_mask(const GridSpec& grid, const FilterSpec& spec);

/// Coefficient-wise product.  Throws std::invalid_argument on grid mismatch.
SpectralField apply_mask(const SpectralField& F, const FilterMask& mask);
void apply_mask_in_place(SpectralField& F, const FilterMask& mask);

}  // namespace euler3d
