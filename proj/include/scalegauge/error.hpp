#pragma once

#include <stdexcept>
#include <string>

namespace sg {

// Error categories. Values are stable; the C API exposes them verbatim as
// sg_status (offset by nothing), so renumbering is a breaking change.
enum class ErrorCode : int {
  Ok = 0,
  ZeroScale = 1,
  StructureMismatch = 2,
  DivisionByVacuum = 3,
  SiteMismatch = 4,
  NotInBaseSet = 5,
  DimensionMismatch = 6,
  ShapeMismatch = 7,
  PathOutOfBounds = 8,
  NotIntegrable = 9,
  ZeroCoupling = 10,
  UnknownGenerator = 11,
  ConfigError = 12,
  IoError = 13,
  NonFinite = 14,
  InvalidArgument = 15,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace sg
