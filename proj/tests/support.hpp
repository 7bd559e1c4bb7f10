#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "euler3d/field.hpp"
#include "euler3d/grid.hpp"

namespace euler3d::fixtures {

inline RealField random_field(const GridSpec& g, int components, unsigned seed) {
  RealField f(g, components);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (double& v : f.values()) v = dist(rng);
  return f;
}

/// Samples fn(x, y, z) -> component values at every node.
inline RealField sample(const GridSpec& g, int components,
                        const std::function<void(double, double, double, double*)>& fn) {
  RealField f(g, components);
  double buf[3];
  for (int ix = 0; ix < g.n[0]; ++ix)
    for (int iy = 0; iy < g.n[1]; ++iy)
      for (int iz = 0; iz < g.n[2]; ++iz) {
        fn(g.coordinate(Axis::x, ix), g.coordinate(Axis::y, iy), g.coordinate(Axis::z, iz), buf);
        for (int c = 0; c < components; ++c) f.at(c, ix, iy, iz) = buf[c];
      }
  return f;
}

inline double max_abs_diff(const RealField& a, const RealField& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.values().size(); ++i) m = std::max(m, std::abs(a.values()[i] - b.values()[i]));
  return m;
}

inline double max_abs(const RealField& a) {
  double m = 0.0;
  for (double v : a.values()) m = std::max(m, std::abs(v));
  return m;
}

inline double max_abs_diff(const SpectralField& a, const SpectralField& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.values().size(); ++i) m = std::max(m, std::abs(a.values()[i] - b.values()[i]));
  return m;
}

inline double max_abs(const SpectralField& a) {
  double m = 0.0;
  for (const Complex& v : a.values()) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace euler3d::fixtures
