#ifndef ELASTOSURF_ERRORS_HPP
#define ELASTOSURF_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace elastosurf {

/// Failure categories raised by the library. The C API maps each kind onto a
/// status code, so new kinds must be added there as well.
enum class ErrorKind {
  invalid_argument,
  domain,             // argument outside the mathematical domain (J <= 0, cube root of a negative, ...)
  definiteness,       // metric or tensor expected SPD
  chart,              // formula invalid in the given chart (non-foliation, polar singularity)
  normalization,      // vector expected to be unit in its metric
  singularity,        // singular deformation gradient
  incompressibility,  // |J - 1| or |Jbar - 1| above tolerance
  unsupported_model,  // closed form requested for a model that has none
  bracketing,         // root scan found no sign change
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct ScanSample {
  double x;
  double residual;
};

/// Raised by the cavity solver when no sign change of the equilibrium residual
/// exists on the scanned bracket. Carries the scan so callers can report it.
class BracketingError : public Error {
 public:
  BracketingError(const std::string& what, std::vector<ScanSample> scan)
      : Error(ErrorKind::bracketing, what), scan_(std::move(scan)) {}
  const std::vector<ScanSample>& scan() const noexcept { return scan_; }

 private:
  std::vector<ScanSample> scan_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace elastosurf

#endif  // ELASTOSURF_ERRORS_HPP
