#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "euler3d/diagnostics.hpp"
#include "euler3d/initial_conditions.hpp"
#include "euler3d/solver.hpp"
#include "euler3d/vortex_geometry.hpp"

namespace euler3d {

inline constexpr std::uint32_t kCheckpointVersion = 1;

/// Everything needed to restart a run.
///
/// File layout (all integers and reals little-endian):
///   8 bytes   magic "EULRCKPT"
///   u32       format version
///   u32       header length H
///   H bytes   JSON header (grid, time, configs, payload description)
///   payload   omega_hat as component-major blocks, each block the modes in
///             (ix, iy, kz) row-major order with kz fastest, each mode stored
///             as two f64 (real, imaginary)
/// A copy of the header is written next to the file as <path>.json.
struct Checkpoint {
  SimulationState state;
  std::string initial_condition = "kerr";
  std::optional<KerrICParams> kerr;
};

void save_checkpoint(const Checkpoint& ckpt, const std::filesystem::path& path);
void save_checkpoint(const SimulationState& state, const std::filesystem::path& path);

/// Throws IoError if unreadable, VersionError on a version mismatch and
/// FormatError on a bad magic, truncated payload or a header that does not
/// describe the payload.
Checkpoint load_checkpoint(const std::filesystem::path& path);

/// Zero-pads the coefficients onto a finer grid over the same box.  Every
/// existing mode keeps its value; a Nyquist coefficient is split evenly
/// between the +N/2 and -N/2 modes of the finer grid, so nodal values at
/// coincident nodes are unchanged.  Throws ConfigError when an axis shrinks
/// or the box differs.
SimulationState upsample_spectral(const SimulationState& state, const GridSpec& target);

inline constexpr const char* kDiagnosticsHeader =
    "t,max_vorticity,loc_x,loc_y,loc_z,max_velocity,enstrophy,production_direct,"
    "production_diff,stretch_sup,stretch_at_peak,bound_ratio";

/// Appends one comma-separated row, writing the header first when the file
/// is missing or empty.  Absent optional values are left empty.
void append_diagnostics_row(const DiagnosticsRecord& record, const std::filesystem::path& path);

/// Parses a file written by append_diagnostics_row.  Throws FormatError on a
/// bad header or row.
std::vector<DiagnosticsRecord> read_diagnostics(const std::filesystem::path& path);

struct PlaneSpec {
  Axis normal = Axis::y;
  double position = 0.0;
  int component = 1;
};

struct PlaneSlice {
  Axis normal = Axis::y;
  int index = 0;       ///< grid index of the plane along the normal
  int component = 0;
  Axis row_axis = Axis::x, col_axis = Axis::z;
  std::vector<double> row_coords, col_coords;
  std::vector<double> values;  ///< row-major, rows along row_axis

  double at(std::size_t r, std::size_t c) const { return values[r * col_coords.size() + c]; }
};

/// Extracts an axis-aligned plane.  The position must lie inside the box and
/// on a node (within 1e-9 of the spacing); throws ConfigError otherwise.
PlaneSlice extract_plane_slice(const RealField& field, const PlaneSpec& plane);

/// Writes the slice as text: '#' metadata lines, a row of column coordinates,
/// then one line per row starting with the row coordinate.
void export_plane_slice(const RealField& field, const PlaneSpec& plane,
                        const std::filesystem::path& path);
PlaneSlice read_plane_slice(const std::filesystem::path& path);

/// Comma-separated shell spectrum: shell,energy,enstrophy (shell 0 is the
/// mean mode).
void write_spectrum(const SpectrumRow& row, const std::filesystem::path& path);
SpectrumRow read_spectrum(const std::filesystem::path& path);

/// One point per row: x,y,z,vorticity.
void write_vortex_line(const VortexLine& line, const std::filesystem::path& path);
/// key = value lines.
void write_geometry_report(const GeometryReport& report, const std::filesystem::path& path);

/// Shortest decimal text that reads back to the same double.
std::string format_double(double v);
/// Throws FormatError unless the whole string is a number.
double parse_double(std::string_view text);

}  // namespace euler3d
