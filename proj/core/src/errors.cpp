#include "sfrey/errors.hpp"

namespace sfrey {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "INVALID_ARGUMENT";
    case Errc::not_squarefree: return "NOT_SQUAREFREE";
    case Errc::unsupported_field: return "UNSUPPORTED_FIELD";
    case Errc::not_found: return "NOT_FOUND";
    case Errc::not_double_root: return "NOT_DOUBLE_ROOT";
    case Errc::degenerate: return "DEGENERATE";
    case Errc::singular: return "SINGULAR";
    case Errc::integrality_violation: return "INTEGRALITY_VIOLATION";
    case Errc::bad_reduction: return "BAD_REDUCTION";
    case Errc::non_minimal_model: return "NON_MINIMAL_MODEL";
    case Errc::cap_exceeded: return "CAP_EXCEEDED";
    case Errc::set_too_large: return "SET_TOO_LARGE";
    case Errc::field_mismatch: return "FIELD_MISMATCH";
  }
  return "UNKNOWN";
}

}  // namespace sfrey
