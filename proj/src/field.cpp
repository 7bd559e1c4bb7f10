#include "euler3d/field.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace euler3d {

namespace detail {
void* aligned_alloc_bytes(std::size_t bytes) {
  if (bytes == 0) bytes = 1;
  void* p = fftw_malloc(bytes);
  if (!p) throw std::bad_alloc();
  return p;
}
void aligned_free_bytes(void* p) noexcept { fftw_free(p); }
}  // namespace detail

namespace {
void check_components(int c) {
  if (c != 1 && c != 3) throw std::invalid_argument("field must have 1 or 3 components");
}
}  // namespace

RealField::RealField(const GridSpec& grid, int components)
    : grid_(grid), components_(components) {
  check_components(components);
  grid_.validate();
  data_.assign(grid_.num_nodes() * components, 0.0);
}

bool RealField::all_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

SpectralField::SpectralField(const GridSpec& grid, int components)
    : grid_(grid), components_(components) {
  check_components(components);
  grid_.validate();
  data_.assign(grid_.num_modes() * components, Complex{});
}

bool SpectralField::all_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](const Complex& v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  });
}

SpectralField& SpectralField::operator+=(const SpectralField& other) {
  add_scaled(other, 1.0);
  return *this;
}

SpectralField& SpectralField::operator*=(double s) {
  for (auto& v : data_) v *= s;
  return *this;
}

void SpectralField::add_scaled(const SpectralField& other, double s) {
  if (!(grid_ == other.grid_) || components_ != other.components_)
    throw std::invalid_argument("spectral field shape mismatch");
  const Complex* src = other.data_.data();
  Complex* dst = data_.data();
  const std::size_t n = data_.size();
  for (std::size_t i = 0; i < n; ++i) dst[i] += s * src[i];
}

double max_magnitude(const RealField& f) {
  double peak = 0.0;
  for (std::size_t i = 0; i < f.nodes(); ++i) {
    double m2 = 0.0;
    for (int c = 0; c < f.components(); ++c) {
      const double v = f.component(c)[i];
      m2 += v * v;
    }
    peak = std::max(peak, m2);
  }
  return std::sqrt(peak);
}

}  // namespace euler3d
