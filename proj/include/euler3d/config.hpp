#pragma once

#include <array>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "euler3d/grid.hpp"
#include "euler3d/initial_conditions.hpp"
#include "euler3d/solver.hpp"

namespace euler3d {

enum class InitialKind { kerr, beltrami, taylor_green };

std::string_view to_string(InitialKind k);
/// Accepts kerr, beltrami (or beltrami_abc) and taylor_green.
InitialKind parse_initial_kind(std::string_view name);

/// Everything a batch run needs.  Text form is one `key = value` per line;
/// '#' starts a comment.  Box lengths and dt_max default from the initial
/// condition (Kerr box or 2 pi cube, dt_max = 0.01 lz) unless set.
struct RunConfig {
  InitialKind ic = InitialKind::kerr;
  std::array<int, 3> n{96, 64, 192};
  std::array<double, 3> length{};
  SolverConfig solver{};
  KerrICParams kerr{};
  std::array<double, 3> amplitudes{1.0, 1.0, 1.0};
  std::string output_dir = "out";
  bool checkpoints = true;  ///< checkpoint at every sample time
  bool spectra = true;      ///< shell spectra at every sample time

  /// Keys given explicitly (file or override), as opposed to defaults.
  std::set<std::string> explicit_keys;

  GridSpec grid() const;
};

/// Every recognized key in echo order.
const std::vector<std::string>& config_keys();

/// Applies one assignment.  Throws ConfigError on an unknown key or a value
/// that does not parse.  Reals accept a trailing or lone `pi` factor
/// ("4pi", "0.02*pi", "pi/2").
void set_config_value(RunConfig& cfg, std::string_view key, std::string_view value);

/// Parses config text on top of `base`.  Unknown or repeated keys are
/// errors; the line number is part of the message.
RunConfig parse_config_text(std::string_view text, RunConfig base = {});
RunConfig load_config_file(const std::string& path, RunConfig base = {});

/// Applies "key=value" overrides.
void apply_overrides(RunConfig& cfg, const std::vector<std::string>& assignments);

/// Fills defaults that depend on other keys and validates the result.
/// Throws ConfigError.
void resolve_config(RunConfig& cfg);

/// Canonical text of every key; parse_config_text of the result reproduces
/// the same text.
std::string config_text(const RunConfig& cfg);

}  // namespace euler3d
