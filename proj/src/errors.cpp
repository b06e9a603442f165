#include "elastosurf/errors.hpp"

namespace elastosurf {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid argument";
    case ErrorKind::domain: return "domain error";
    case ErrorKind::definiteness: return "definiteness error";
    case ErrorKind::chart: return "chart error";
    case ErrorKind::normalization: return "normalization error";
    case ErrorKind::singularity: return "singularity error";
    case ErrorKind::incompressibility: return "incompressibility violation";
    case ErrorKind::unsupported_model: return "unsupported model";
    case ErrorKind::bracketing: return "bracketing failure";
  }
  return "unknown error";
}

}  // namespace elastosurf
