#include "euler3d/filters.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "euler3d/errors.hpp"

namespace euler3d {

std::string_view to_string(FilterKind kind) {
  switch (kind) {
    case FilterKind::smoothing: return "smoothing";
    case FilterKind::two_thirds: return "two_thirds";
    case FilterKind::initial_quartic: return "initial_quartic";
  }
  return "unknown";
}

FilterKind parse_filter_kind(std::string_view name) {
  if (name == "smoothing") return FilterKind::smoothing;
  if (name == "two_thirds") return FilterKind::two_thirds;
  if (name == "initial_quartic") return FilterKind::initial_quartic;
  throw ConfigError("unknown filter kind '" + std::string(name) + "'");
}

void FilterSpec::validate() const {
  if (kind == FilterKind::smoothing) {
    if (!(alpha > 0) || !std::isfinite(alpha)) throw ConfigError("filter alpha must be positive");
    if (order < 2 || order % 2 != 0) throw ConfigError("filter order must be an even integer >= 2");
  }
  if (kind == FilterKind::initial_quartic && !(quartic_coefficient >= 0))
    throw ConfigError("quartic filter coefficient must be nonnegative");
}

double smoothing_profile(double x, double alpha, int order) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("smoothing_profile: x must lie in [0, 1]");
  return std::exp(-alpha * std::pow(x, order));
}

FilterMask::FilterMask(const GridSpec& grid, std::array<std::vector<double>, 3> factors)
    : grid_(grid), factors_(std::move(factors)) {
  const auto ext = grid_.spectral_extent();
  for (int a = 0; a < 3; ++a)
    if (static_cast<int>(factors_[a].size()) != ext[a])
      throw std::invalid_argument("FilterMask: factor length does not match grid");
}

SpectralField FilterMask::to_field() const {
  SpectralField out(grid_, 1);
  const auto ext = grid_.spectral_extent();
  auto dst = out.component(0);
  std::size_t idx = 0;
  for (int ix = 0; ix < ext[0]; ++ix)
    for (int iy = 0; iy < ext[1]; ++iy)
      for (int kz = 0; kz < ext[2]; ++kz, ++idx) dst[idx] = value(ix, iy, kz);
  return out;
}

FilterMask build_filter_mask(const GridSpec& grid, const FilterSpec& spec) {
  spec.validate();
  const auto ext = grid.spectral_extent();
  std::array<std::vector<double>, 3> factors;
  for (Axis a : kAxes) {
    const int na = grid.n[index(a)];
    auto& f = factors[index(a)];
    f.resize(ext[index(a)]);
    for (int i = 0; i < ext[index(a)]; ++i) {
      const int k = std::abs(grid.mode_index(a, i));
      switch (spec.kind) {
        case FilterKind::smoothing:
          f[i] = smoothing_profile(2.0 * k / na, spec.alpha, spec.order);
          break;
        case FilterKind::two_thirds:
          // |2k/N| <= 2/3  <=>  3|k| <= N
          f[i] = (3 * k <= na) ? 1.0 : 0.0;
          break;
        case FilterKind::initial_quartic: {
          const double k2 = static_cast<double>(k) * k;
          f[i] = std::exp(-spec.quartic_coefficient * k2 * k2);
          break;
        }
      }
    }
  }
  return FilterMask(grid, std::move(factors));
}

void apply_mask_in_place(SpectralField& F, const FilterMask& mask) {
  if (!(F.grid() == mask.grid())) throw std::invalid_argument("apply_mask: grid mismatch");
  const auto ext = F.grid().spectral_extent();
  for (int c = 0; c < F.components(); ++c) {
    auto data = F.component(c);
    std::size_t idx = 0;
    for (int ix = 0; ix < ext[0]; ++ix)
      for (int iy = 0; iy < ext[1]; ++iy) {
        const double fxy = mask.axis_factor(Axis::x)[ix] * mask.axis_factor(Axis::y)[iy];
        const auto fz = mask.axis_factor(Axis::z);
        for (int kz = 0; kz < ext[2]; ++kz, ++idx) data[idx] *= fxy * fz[kz];
      }
  }
}

SpectralField apply_mask(const SpectralField& F, const FilterMask& mask) {
  SpectralField out = F;
  apply_mask_in_place(out, mask);
  return out;
}

}  // namespace euler3d
