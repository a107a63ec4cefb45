#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace htube {

enum class ErrorKind {
  // Domain errors: the inputs fall outside the region where a formula holds.
  InvalidPoint,
  ModelMismatch,
  SupercriticalViolation,
  NonpositiveH,
  DomainViolation,
  DegenerateProjection,
  NonToralSister,
  // Numerical failures: the inputs are valid but a solver gave up.
  StepFailure,
  QuadratureFailure,
  DegenerateTangency,
  RootBracket,
};

std::string_view to_string(ErrorKind kind);

/// True for kinds that signal a numerical failure rather than bad input.
bool is_numerical(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace htube
