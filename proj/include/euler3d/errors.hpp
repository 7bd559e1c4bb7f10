#pragma once

#include <stdexcept>
#include <string>

namespace euler3d {

/// Invalid user configuration (unknown key, inconsistent grid, bad value).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical breakdown during a run (non-finite values, instability).
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double last_good_time)
      : std::runtime_error(what), last_good_time_(last_good_time) {}

  double last_good_time() const noexcept { return last_good_time_; }

 private:
  double last_good_time_;
};

/// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File was readable but its contents are not a valid checkpoint.
class FormatError : public IoError {
 public:
  using IoError::IoError;
};

/// Checkpoint written by an incompatible format version.
class VersionError : public FormatError {
 public:
  using FormatError::FormatError;
};

}  // namespace euler3d
