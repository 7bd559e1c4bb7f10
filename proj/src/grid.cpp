#include "euler3d/grid.hpp"

#include <cmath>
#include <string>

#include "euler3d/errors.hpp"

namespace euler3d {

GridSpec GridSpec::centered(std::array<int, 3> n, std::array<double, 3> length) {
  GridSpec g;
  g.n = n;
  g.length = length;
  for (int a = 0; a < 3; ++a) g.origin[a] = -0.5 * length[a];
  g.validate();
  return g;
}

GridSpec GridSpec::kerr_box(int nx, int ny, int nz) {
  constexpr double pi = std::numbers::pi;
  return centered({nx, ny, nz}, {4 * pi, 4 * pi, 2 * pi});
}

GridSpec GridSpec::periodic_cube(int n) {
  constexpr double pi = std::numbers::pi;
  return centered({n, n, n}, {2 * pi, 2 * pi, 2 * pi});
}

void GridSpec::validate() const {
  static constexpr const char* names[] = {"x", "y", "z"};
  for (int a = 0; a < 3; ++a) {
    if (n[a] <= 0 || n[a] % 2 != 0)
      throw ConfigError(std::string("grid size along ") + names[a] +
                        " must be a positive even integer, got " + std::to_string(n[a]));
    if (!(length[a] > 0) || !std::isfinite(length[a]))
      throw ConfigError(std::string("box length along ") + names[a] + " must be positive");
    if (!std::isfinite(origin[a]))
      throw ConfigError(std::string("box origin along ") + names[a] + " must be finite");
  }
}

}  // namespace euler3d
