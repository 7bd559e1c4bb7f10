#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "euler3d/field.hpp"

namespace euler3d {

using Vec3 = std::array<double, 3>;

/// Trilinear interpolation with periodic wrapping.
Vec3 sample_vector(const RealField& field, const Vec3& point);
double sample_scalar(const RealField& field, const Vec3& point, int component = 0);

struct UnitVorticity {
  RealField xi;                  ///< omega/|omega|, zero where undefined
  std::vector<std::uint8_t> defined;
  double threshold = 0.0;        ///< |omega| at or below this is undefined
};

/// xi = omega/|omega| where |omega| > 1e-10 |omega|_inf (or `threshold` when
/// given).
UnitVorticity unit_vorticity_field(const RealField& omega,
                                   std::optional<double> threshold = std::nullopt);

struct VortexLine {
  std::vector<Vec3> points;           ///< box coordinates, unwrapped
  std::vector<double> segment_length; ///< integration step per segment
  std::vector<double> vorticity;      ///< |omega| at each point
  Vec3 seed{};
  double ds = 0.0;
  bool stopped_early = false;

  double arclength() const;
};

struct TraceOptions {
  /// Stop once |omega| falls to or below this value; default is the unit
  /// vorticity threshold 1e-10 |omega|_inf.
  std::optional<double> stop_below;
  /// Integrate against the vorticity direction.
  bool backward = false;
};

/// Integrates dx/ds = omega/|omega| with classical RK4 on the trilinear
/// interpolant.  Throws std::invalid_argument if |omega(seed)| is below the
/// stop threshold or ds <= 0.
VortexLine trace_vortex_line(const RealField& omega, const Vec3& seed, double ds, int n_steps,
                             const TraceOptions& options = {});

/// Line through the global vorticity maximum, traced both ways until |omega|
/// drops below `fraction` of the maximum (or max_steps per direction).
VortexLine max_vorticity_segment(const RealField& omega, double ds, int max_steps,
                                 double fraction = 0.6);

struct LineGeometry {
  std::vector<double> curvature;     ///< interior points, circumcircle fits
  std::vector<double> div_xi;        ///< points where div xi is defined
  std::size_t excluded_points = 0;   ///< points next to undefined xi
  double kappa_max() const;
  double div_xi_max() const;         ///< max |div xi|
};

/// Curvature from consecutive point triples (collinear triples give 0) and
/// div xi from the spectral divergence of the thresholded unit vorticity
/// sampled along the line.  Needs at least three points.
LineGeometry line_geometry(const VortexLine& line, const RealField& omega);

/// Spectral divergence of the thresholded unit vorticity.
RealField unit_vorticity_divergence(const UnitVorticity& unit);

/// Per-time measurements along the selected vortex line segment.
struct LineHistorySample {
  double t = 0.0;
  double max_velocity = 0.0;  ///< max |u| along the segment
  double length = 0.0;        ///< arclength L(t)
  double kappa_max = 0.0;
  double div_xi_max = 0.0;
};

enum class ExponentRegime { subcritical, critical, supercritical };

struct GeometryReport {
  double kappa_max = 0.0;
  double div_xi_max = 0.0;
  double blowup_time = 0.0;
  double velocity_exponent = 0.0;  ///< alpha in |u| <= C_U (T - t)^-alpha
  double length_exponent = 0.0;    ///< beta in C_L (T - t)^beta <= L(t)
  double c_u = 0.0;
  double c_l = 0.0;
  double c_0 = 0.0;
  ExponentRegime regime = ExponentRegime::subcritical;
  bool velocity_condition = false;    ///< alpha < 1
  bool length_lower_bound = false;    ///< C_L (T - t)^beta <= L(t) at all samples
  bool length_upper_bound = false;    ///< L(t) <= C_0 / max(|kappa|, |div xi|) at all samples
  /// 2 C_U < 0.43 C_L; evaluated only in the critical regime with C_0 = 0.1.
  std::optional<bool> critical_inequality;
  bool conditions_met = false;
};

/// Evaluates the velocity and line-length hypotheses of the localized
/// non-blowup criterion over a history.  Throws std::invalid_argument with
/// fewer than three samples or a sample at or after T.
GeometryReport dhy_report(std::span<const LineHistorySample> history, double blowup_time,
                          double velocity_exponent, double length_exponent, double c_0 = 0.1);

}  // namespace euler3d
