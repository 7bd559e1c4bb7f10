#include "euler3d/vortex_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "euler3d/diagnostics.hpp"
#include "euler3d/spectral.hpp"

namespace euler3d {

namespace {

struct Stencil {
  std::array<int, 3> lo{}, hi{};
  std::array<double, 3> frac{};
};

Stencil locate(const GridSpec& g, const Vec3& p) {
  Stencil s;
  for (int a = 0; a < 3; ++a) {
    double f = (p[a] - g.origin[a]) / g.spacing(static_cast<Axis>(a));
    const double r = std::nearbyint(f);
    if (std::abs(f - r) < 1e-12) f = r;
    const double fl = std::floor(f);
    s.frac[a] = f - fl;
    long i = static_cast<long>(fl) % g.n[a];
    if (i < 0) i += g.n[a];
    s.lo[a] = static_cast<int>(i);
    s.hi[a] = static_cast<int>((i + 1) % g.n[a]);
  }
  return s;
}

template <class Fn>
void for_corners(const Stencil& s, Fn&& fn) {
  for (int cx = 0; cx < 2; ++cx)
    for (int cy = 0; cy < 2; ++cy)
      for (int cz = 0; cz < 2; ++cz) {
        const double w = (cx ? s.frac[0] : 1 - s.frac[0]) * (cy ? s.frac[1] : 1 - s.frac[1]) *
                         (cz ? s.frac[2] : 1 - s.frac[2]);
        fn(cx ? s.hi[0] : s.lo[0], cy ? s.hi[1] : s.lo[1], cz ? s.hi[2] : s.lo[2], w);
      }
}

double norm3(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

Vec3 axpy(const Vec3& x, double a, const Vec3& y) { return {x[0] + a * y[0], x[1] + a * y[1], x[2] + a * y[2]}; }

}  // namespace

double sample_scalar(const RealField& field, const Vec3& point, int component) {
  const Stencil s = locate(field.grid(), point);
  double v = 0.0;
  for_corners(s, [&](int ix, int iy, int iz, double w) {
    if (w != 0.0) v += w * field.at(component, ix, iy, iz);
  });
  return v;
}

Vec3 sample_vector(const RealField& field, const Vec3& point) {
  const Stencil s = locate(field.grid(), point);
  Vec3 v{};
  const int nc = std::min(field.components(), 3);
  for_corners(s, [&](int ix, int iy, int iz, double w) {
    if (w == 0.0) return;
    for (int c = 0; c < nc; ++c) v[c] += w * field.at(c, ix, iy, iz);
  });
  return v;
}

UnitVorticity unit_vorticity_field(const RealField& omega, std::optional<double> threshold) {
  if (omega.components() != 3) throw std::invalid_argument("unit_vorticity_field: need 3 components");
  UnitVorticity u{RealField(omega.grid(), 3), std::vector<std::uint8_t>(omega.nodes(), 0), 0.0};
  u.threshold = threshold.value_or(kUnitVorticityThreshold * max_magnitude(omega));
  for (std::size_t n = 0; n < omega.nodes(); ++n) {
    const Vec3 w{omega.component(0)[n], omega.component(1)[n], omega.component(2)[n]};
    const double m = norm3(w);
    if (m <= u.threshold || m == 0.0) continue;
    u.defined[n] = 1;
    for (int c = 0; c < 3; ++c) u.xi.component(c)[n] = w[c] / m;
  }
  return u;
}

double VortexLine::arclength() const {
  return std::accumulate(segment_length.begin(), segment_length.end(), 0.0);
}

VortexLine trace_vortex_line(const RealField& omega, const Vec3& seed, double ds, int n_steps,
                             const TraceOptions& options) {
  if (!(ds > 0)) throw std::invalid_argument("trace_vortex_line: ds must be positive");
  if (omega.components() != 3) throw std::invalid_argument("trace_vortex_line: need 3 components");
  const double stop = options.stop_below.value_or(kUnitVorticityThreshold * max_magnitude(omega));
  const double sign = options.backward ? -1.0 : 1.0;

  auto direction = [&](const Vec3& x, Vec3& out) {
    const Vec3 w = sample_vector(omega, x);
    const double m = norm3(w);
    if (!(m > stop)) return false;
    out = {sign * w[0] / m, sign * w[1] / m, sign * w[2] / m};
    return true;
  };

  VortexLine line;
  line.seed = seed;
  line.ds = ds;
  Vec3 k1;
  if (!direction(seed, k1)) throw std::invalid_argument("trace_vortex_line: seed lies where omega is undefined");
  line.points.push_back(seed);
  line.vorticity.push_back(norm3(sample_vector(omega, seed)));

  Vec3 x = seed;
  for (int step = 0; step < n_steps; ++step) {
    Vec3 k2, k3, k4;
    if (!direction(x, k1) || !direction(axpy(x, 0.5 * ds, k1), k2) ||
        !direction(axpy(x, 0.5 * ds, k2), k3) || !direction(axpy(x, ds, k3), k4)) {
      line.stopped_early = true;
      break;
    }
    Vec3 next;
    for (int c = 0; c < 3; ++c) next[c] = x[c] + ds / 6.0 * (k1[c] + 2 * k2[c] + 2 * k3[c] + k4[c]);
    const double m = norm3(sample_vector(omega, next));
    if (!(m > stop)) {
      line.stopped_early = true;
      break;
    }
    x = next;
    line.points.push_back(x);
    line.vorticity.push_back(m);
    line.segment_length.push_back(ds);
  }
  return line;
}

VortexLine max_vorticity_segment(const RealField& omega, double ds, int max_steps, double fraction) {
  const GridSpec& g = omega.grid();
  std::size_t peak = 0;
  double best = -1.0;
  for (std::size_t n = 0; n < omega.nodes(); ++n) {
    const double m = norm3({omega.component(0)[n], omega.component(1)[n], omega.component(2)[n]});
    if (m > best) {
      best = m;
      peak = n;
    }
  }
  const int iz = static_cast<int>(peak % g.n[2]);
  const int iy = static_cast<int>((peak / g.n[2]) % g.n[1]);
  const int ix = static_cast<int>(peak / (static_cast<std::size_t>(g.n[2]) * g.n[1]));
  const Vec3 seed{g.coordinate(Axis::x, ix), g.coordinate(Axis::y, iy), g.coordinate(Axis::z, iz)};

  TraceOptions opt;
  opt.stop_below = fraction * best;
  VortexLine fwd = trace_vortex_line(omega, seed, ds, max_steps, opt);
  opt.backward = true;
  VortexLine bwd = trace_vortex_line(omega, seed, ds, max_steps, opt);

  VortexLine line;
  line.seed = seed;
  line.ds = ds;
  line.stopped_early = fwd.stopped_early || bwd.stopped_early;
  for (std::size_t i = bwd.points.size(); i-- > 1;) {
    line.points.push_back(bwd.points[i]);
    line.vorticity.push_back(bwd.vorticity[i]);
  }
  line.segment_length = bwd.segment_length;
  line.points.insert(line.points.end(), fwd.points.begin(), fwd.points.end());
  line.vorticity.insert(line.vorticity.end(), fwd.vorticity.begin(), fwd.vorticity.end());
  line.segment_length.insert(line.segment_length.end(), fwd.segment_length.begin(), fwd.segment_length.end());
  return line;
}

double LineGeometry::kappa_max() const {
  double m = 0.0;
  for (double k : curvature) m = std::max(m, std::abs(k));
  return m;
}

double LineGeometry::div_xi_max() const {
  double m = 0.0;
  for (double d : div_xi) m = std::max(m, std::abs(d));
  return m;
}

RealField unit_vorticity_divergence(const UnitVorticity& unit) {
  const GridSpec& g = unit.xi.grid();
  const SpectralField xi_hat = forward_transform(unit.xi);
  SpectralField div(g, 1);
  const WavenumberTable kt(g);
  const auto ext = g.spectral_extent();
  auto dst = div.component(0);
  std::size_t m = 0;
  for (int ix = 0; ix < ext[0]; ++ix)
    for (int iy = 0; iy < ext[1]; ++iy)
      for (int kz = 0; kz < ext[2]; ++kz, ++m)
        dst[m] = Complex(0.0, 1.0) * (kt.kappa[0][ix] * xi_hat.component(0)[m] +
                                      kt.kappa[1][iy] * xi_hat.component(1)[m] +
                                      kt.kappa[2][kz] * xi_hat.component(2)[m]);
  return inverse_transform(div);
}

LineGeometry line_geometry(const VortexLine& line, const RealField& omega) {
  if (line.points.size() < 3) throw std::invalid_argument("line_geometry: need at least 3 points");
  LineGeometry geo;
  for (std::size_t i = 1; i + 1 < line.points.size(); ++i) {
    const Vec3& p0 = line.points[i - 1];
    const Vec3& p1 = line.points[i];
    const Vec3& p2 = line.points[i + 1];
    const Vec3 a{p1[0] - p0[0], p1[1] - p0[1], p1[2] - p0[2]};
    const Vec3 b{p2[0] - p0[0], p2[1] - p0[1], p2[2] - p0[2]};
    const Vec3 c{p2[0] - p1[0], p2[1] - p1[1], p2[2] - p1[2]};
    const Vec3 cross{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
    const double la = norm3(a), lb = norm3(b), lc = norm3(c);
    const double area2 = norm3(cross);
    const double denom = la * lb * lc;
    geo.curvature.push_back(denom > 0 && area2 > 1e-15 * la * lb ? 2.0 * area2 / denom : 0.0);
  }

  const UnitVorticity unit = unit_vorticity_field(omega);
  const RealField div = unit_vorticity_divergence(unit);
  const GridSpec& g = omega.grid();
  for (const Vec3& p : line.points) {
    const Stencil s = locate(g, p);
    bool ok = true;
    for_corners(s, [&](int ix, int iy, int iz, double) {
      if (!unit.defined[g.node_offset(ix, iy, iz)]) ok = false;
    });
    if (!ok) {
      ++geo.excluded_points;
      continue;
    }
    geo.div_xi.push_back(sample_scalar(div, p));
  }
  return geo;
}

GeometryReport dhy_report(std::span<const LineHistorySample> history, double blowup_time,
                          double velocity_exponent, double length_exponent, double c_0) {
  if (history.size() < 3) throw std::invalid_argument("dhy_report: need at least 3 samples");
  GeometryReport r;
  r.blowup_time = blowup_time;
  r.velocity_exponent = velocity_exponent;
  r.length_exponent = length_exponent;
  r.c_0 = c_0;
  r.c_l = std::numeric_limits<double>::infinity();
  for (const auto& h : history) {
    if (!(blowup_time > h.t)) throw std::invalid_argument("dhy_report: samples must precede T");
    const double tau = blowup_time - h.t;
    r.kappa_max = std::max(r.kappa_max, std::abs(h.kappa_max));
    r.div_xi_max = std::max(r.div_xi_max, std::abs(h.div_xi_max));
    r.c_u = std::max(r.c_u, h.max_velocity * std::pow(tau, velocity_exponent));
    r.c_l = std::min(r.c_l, h.length * std::pow(tau, -length_exponent));
  }
  r.velocity_condition = velocity_exponent < 1.0 && std::isfinite(r.c_u);
  r.length_lower_bound = r.c_l > 0.0;
  r.length_upper_bound = true;
  for (const auto& h : history) {
    const double bend = std::max(std::abs(h.kappa_max), std::abs(h.div_xi_max));
    if (bend > 0.0 && h.length > c_0 / bend) r.length_upper_bound = false;
  }
  const double critical_beta = 1.0 - velocity_exponent;
  if (std::abs(length_exponent - critical_beta) <= 1e-12)
    r.regime = ExponentRegime::critical;
  else
    r.regime = length_exponent < critical_beta ? ExponentRegime::subcritical : ExponentRegime::supercritical;
  // The critical-case constant 0.43 is known only for C_0 = 0.1.
  if (r.regime == ExponentRegime::critical && std::abs(c_0 - 0.1) <= 1e-12)
    r.critical_inequality = 2.0 * r.c_u < 0.43 * r.c_l;

  const bool exponent_ok = r.regime == ExponentRegime::subcritical ||
                           (r.regime == ExponentRegime::critical && r.critical_inequality.value_or(false));
  r.conditions_met = r.velocity_condition && r.length_lower_bound && r.length_upper_bound && exponent_ok;
  return r;
}

}  // namespace euler3d
