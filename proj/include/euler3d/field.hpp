#pragma once

#include <complex>
#include <cstddef>
#include <new>
#include <span>
#include <vector>

#include "euler3d/grid.hpp"

namespace euler3d {

using Complex = std::complex<double>;

namespace detail {
void* aligned_alloc_bytes(std::size_t bytes);
void aligned_free_bytes(void* p) noexcept;
}  // namespace detail

/// Allocator returning SIMD-aligned storage so transforms can run directly
/// on field buffers.
template <class T>
struct AlignedAllocator {
  using value_type = T;

  AlignedAllocator() = default;
  template <class U>
  AlignedAllocator(const AlignedAllocator<U>&) noexcept {}

  T* allocate(std::size_t count) {
    return static_cast<T*>(detail::aligned_alloc_bytes(count * sizeof(T)));
  }
  void deallocate(T* p, std::size_t) noexcept { detail::aligned_free_bytes(p); }

  template <class U>
  bool operator==(const AlignedAllocator<U>&) const noexcept {
    return true;
  }
};

template <class T>
using AlignedVector = std::vector<T, AlignedAllocator<T>>;

/// Scalar or vector samples on the grid nodes, component-major.
class RealField {
 public:
  RealField() = default;
  RealField(const GridSpec& grid, int components);

  const GridSpec& grid() const noexcept { return grid_; }
  int components() const noexcept { return components_; }
  std::size_t nodes() const noexcept { return grid_.num_nodes(); }

  std::span<double> component(int c) noexcept {
    return {data_.data() + c * nodes(), nodes()};
  }
  std::span<const double> component(int c) const noexcept {
    return {data_.data() + c * nodes(), nodes()};
  }
  double& at(int c, int ix, int iy, int iz) noexcept {
    return data_[c * nodes() + grid_.node_offset(ix, iy, iz)];
  }
  double at(int c, int ix, int iy, int iz) const noexcept {
    return data_[c * nodes() + grid_.node_offset(ix, iy, iz)];
  }

  std::span<double> values() noexcept { return data_; }
  std::span<const double> values() const noexcept { return data_; }

  bool all_finite() const noexcept;

 private:
  GridSpec grid_{};
  int components_ = 0;
  AlignedVector<double> data_;
};

/// Fourier coefficients in the half-complex layout, normalized so the zero
/// mode equals the field mean.
class SpectralField {
 public:
  SpectralField() = default;
  SpectralField(const GridSpec& grid, int components);

  const GridSpec& grid() const noexcept { return grid_; }
  int components() const noexcept { return components_; }
  std::size_t modes() const noexcept { return grid_.num_modes(); }

  std::span<Complex> component(int c) noexcept {
    return {data_.data() + c * modes(), modes()};
  }
  std::span<const Complex> component(int c) const noexcept {
    return {data_.data() + c * modes(), modes()};
  }
  Complex& at(int c, int ix, int iy, int kz) noexcept {
    return data_[c * modes() + grid_.mode_offset(ix, iy, kz)];
  }
  Complex at(int c, int ix, int iy, int kz) const noexcept {
    return data_[c * modes() + grid_.mode_offset(ix, iy, kz)];
  }

  std::span<Complex> values() noexcept { return data_; }
  std::span<const Complex> values() const noexcept { return data_; }

  bool all_finite() const noexcept;

  SpectralField& operator+=(const SpectralField& other);
  SpectralField& operator*=(double s);
  /// this += s * other
  void add_scaled(const SpectralField& other, double s);

 private:
  GridSpec grid_{};
  int components_ = 0;
  AlignedVector<Complex> data_;
};

/// Largest pointwise Euclidean norm over components.
double max_magnitude(const RealField& f);

}  // namespace euler3d
