#pragma once

#include <stdexcept>
#include <string>

namespace acm {

enum class ErrorKind {
  InvalidInput,  // malformed arguments, invalid ACM, element not in the monoid
  OutOfRange,    // input beyond the configured arithmetic range
  Overflow,      // checked 64-bit arithmetic would wrap
  CapExceeded,   // an enumeration or search cap was hit
  Structural,    // a structural search failed (e.g. no power of p in M)
  Unavailable,   // a construction does not exist for this input
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid_input";
    case ErrorKind::OutOfRange: return "out_of_range";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::CapExceeded: return "cap_exceeded";
    case ErrorKind::Structural: return "structural";
    case ErrorKind::Unavailable: return "unavailable";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace acm
