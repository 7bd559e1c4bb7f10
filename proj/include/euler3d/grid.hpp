#pragma once

#include <array>
#include <cstddef>
#include <cstdlib>
#include <numbers>

namespace euler3d {

enum class Axis : int { x = 0, y = 1, z = 2 };

inline constexpr std::array<Axis, 3> kAxes{Axis::x, Axis::y, Axis::z};

constexpr int index(Axis a) noexcept { return static_cast<int>(a); }

/// Periodic rectangular box sampled on a uniform grid.
///
/// Node i on axis j sits at origin[j] + i * length[j] / n[j].  Spectral data
/// uses the real-to-complex layout: x and y store all n modes (FFT order),
/// z stores the nonnegative half n/2 + 1.
struct GridSpec {
  std::array<int, 3> n{};
  std::array<double, 3> length{};
  std::array<double, 3> origin{};

  /// Box with the given lengths, centered on the origin, nodes on the
  /// lower face.
  static GridSpec centered(std::array<int, 3> n, std::array<double, 3> length);

  /// 4pi x 4pi x 2pi box used for the antiparallel vortex-tube problem.
  static GridSpec kerr_box(int nx, int ny, int nz);

  /// 2pi-periodic cube, x, y, z in [-pi, pi).
  static GridSpec periodic_cube(int n);

  /// Throws ConfigError unless every n is positive and even and every
  /// length is positive and finite.
  void validate() const;

  double spacing(Axis a) const noexcept { return length[index(a)] / n[index(a)]; }
  double coordinate(Axis a, int i) const noexcept {
    return origin[index(a)] + i * spacing(a);
  }
  double volume() const noexcept { return length[0] * length[1] * length[2]; }

  std::size_t num_nodes() const noexcept {
    return static_cast<std::size_t>(n[0]) * n[1] * n[2];
  }
  /// Stored modes per axis in the half-complex layout.
  std::array<int, 3> spectral_extent() const noexcept { return {n[0], n[1], n[2] / 2 + 1}; }
  std::size_t num_modes() const noexcept {
    auto e = spectral_extent();
    return static_cast<std::size_t>(e[0]) * e[1] * e[2];
  }

  std::size_t node_offset(int ix, int iy, int iz) const noexcept {
    return (static_cast<std::size_t>(ix) * n[1] + iy) * n[2] + iz;
  }
  std::size_t mode_offset(int ix, int iy, int iz) const noexcept {
    return (static_cast<std::size_t>(ix) * n[1] + iy) * (n[2] / 2 + 1) + iz;
  }

  /// Signed integer mode index k in [-n/2, n/2) for stored position i.
  int mode_index(Axis a, int i) const noexcept {
    const int na = n[index(a)];
    if (a == Axis::z) return i;
    return i < na / 2 ? i : i - na;
  }
  bool is_nyquist(Axis a, int i) const noexcept {
    return 2 * std::abs(mode_index(a, i)) == n[index(a)];
  }
  /// Physical wavenumber 2 pi k / L.
  double wavenumber(Axis a, int k) const noexcept {
    return 2.0 * std::numbers::pi * k / length[index(a)];
  }

  bool same_shape(const GridSpec& other) const noexcept { return n == other.n; }
  bool operator==(const GridSpec&) const = default;
};

}  // namespace euler3d

