#pragma once

#include <stdexcept>
#include <string>

namespace kcontact {

/// Input outside an operation's contract: malformed files, wrong field,
/// dimension mismatch, degenerate or non-closed forms. CLI exit code 2.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what, std::string kind = "input")
      : std::invalid_argument(what), kind_(std::move(kind)) {}

  /// Short machine-readable category ("parse", "index", "jacobi", ...).
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// Raised when ad(xi) has a non-squarefree minimal polynomial and the
/// requested operation needs a diagonalizable Reeb adjoint.
class NotDiagonalizable : public InputError {
 public:
  explicit NotDiagonalizable(const std::string& what)
      : InputError(what, "not-diagonalizable") {}
};

/// A mathematical identity that must hold on valid input failed to hold.
/// Either the input slipped past validation or the claimed identity is false
/// for it. CLI exit code 3.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace kcontact
