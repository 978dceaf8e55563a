#ifndef FQK_ERROR_HPP
#define FQK_ERROR_HPP

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fqk {

enum class ErrorKind {
  DimensionMismatch,
  NonConvergence,
  InvalidDimension,
  SignIncoherentInput,
  NotReflectable,
  NotAcyclic,
  MissingAction,
  InconsistentVerdict,
  InfiniteComponent,
  InfiniteType,
  SignCoherenceViolation,
  OutOfRange,
  UnknownKey,
  InvalidParameter,
  ParseError,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::InvalidDimension: return "InvalidDimension";
    case ErrorKind::SignIncoherentInput: return "SignIncoherentInput";
    case ErrorKind::NotReflectable: return "NotReflectable";
    case ErrorKind::NotAcyclic: return "NotAcyclic";
    case ErrorKind::MissingAction: return "MissingAction";
    case ErrorKind::InconsistentVerdict: return "InconsistentVerdict";
    case ErrorKind::InfiniteComponent: return "InfiniteComponent";
    case ErrorKind::InfiniteType: return "InfiniteType";
    case ErrorKind::SignCoherenceViolation: return "SignCoherenceViolation";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::UnknownKey: return "UnknownKey";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Default numeric tolerance; the FQK_TOL environment variable overrides it.
inline double default_tolerance() {
  static const double tol = [] {
    if (const char* env = std::getenv("FQK_TOL")) {
      char* end = nullptr;
      double v = std::strtod(env, &end);
      if (end != env && v > 0.0) return v;
    }
    return 1e-9;
  }();
  return tol;
}

}  // namespace fqk

#endif  // FQK_ERROR_HPP
