#pragma once

#include <array>
#include <span>
#include <vector>

#include "euler3d/field.hpp"
#include "euler3d/grid.hpp"

namespace euler3d {

class FilterMask;

/// Forward DFT of every component, normalized by the node count.
/// Throws std::invalid_argument if the field is empty or non-finite.
SpectralField forward_transform(const RealField& f);

/// Inverse DFT. Throws std::invalid_argument if the coefficients are not the
/// transform of a real field (Hermitian defect on the self-conjugate planes
/// above 1e-10 of the largest coefficient).
RealField inverse_transform(const SpectralField& F);

/// Coefficients of d/d(axis): i kappa rho(2k/N) F, with rho the axis factor
/// of `smoothing` (or 1 when null).  Nyquist modes and the zero mode of the
/// result are exactly zero.
SpectralField spectral_derivative(const SpectralField& F, Axis axis,
                                  const FilterMask* smoothing = nullptr);

/// Largest violation of F(-k) = conj F(k) on the kz = 0 and kz = Nz/2
/// planes, relative to max |F|.
double hermitian_defect(const SpectralField& F);

/// Sum of |F_k|^2 over all modes of the full (two-sided) spectrum, summed
/// over components.  Equals the mean of |f|^2 in physical space.
double spectral_mean_square(const SpectralField& F);

/// Node average of |f|^2 summed over components.
double physical_mean_square(const RealField& f);

/// Zero every coefficient whose index is the Nyquist index on any axis.
void zero_nyquist_modes(SpectralField& F);

/// Multiplicity of a stored mode in the two-sided spectrum: 1 on the
/// self-conjugate planes kz = 0 and kz = Nz/2, otherwise 2.
inline double mode_weight(const GridSpec& g, int kz) noexcept {
  return (kz == 0 || 2 * kz == g.n[2]) ? 1.0 : 2.0;
}

/// Wavenumbers used for differentiation along each axis, indexed by stored
/// position.  Nyquist entries are zero.
struct WavenumberTable {
  std::array<std::vector<double>, 3> kappa;
  /// Squared magnitude with the true (nonzero) Nyquist wavenumbers.
  std::array<std::vector<double>, 3> kappa_sq;

  explicit WavenumberTable(const GridSpec& g);
};

/// Low-level transform entry points over raw aligned spans; used by the
/// solver to avoid per-call allocation.  `in` and `out` must come from
/// AlignedVector storage.
namespace fft {
/// out = normalized forward transform of one scalar component.
void forward(const GridSpec& g, std::span<const double> in, std::span<Complex> out);
/// out = inverse transform; `scratch` (num_modes) is overwritten.
void inverse(const GridSpec& g, std::span<const Complex> in, std::span<double> out,
             std::span<Complex> scratch);
}  // namespace fft

}  // namespace euler3d
