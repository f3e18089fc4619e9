#pragma once

#include <stdexcept>
#include <string>

namespace sfrey {

enum class Errc {
  invalid_argument,
  not_squarefree,
  unsupported_field,
  not_found,
  not_double_root,
  degenerate,
  singular,
  integrality_violation,
  bad_reduction,
  non_minimal_model,
  cap_exceeded,
  set_too_large,
  field_mismatch,
};

const char* errc_name(Errc code) noexcept;

/// Every failure surfaced by the library carries one of the codes above so
/// callers (the CLI in particular) can map it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace sfrey
