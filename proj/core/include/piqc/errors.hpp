#pragma once

#include <stdexcept>
#include <string>

namespace piqc {

/// Input that violates an operation's preconditions (shape, dimension, range).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Request outside what the implementation supports (e.g. too many qubits for
/// dense diagonalization).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical result broke an invariant that should hold by construction.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Time integration produced an invalid state; shrink the step.
class IntegrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inconsistent experiment configuration (e.g. unequal evaluation budgets).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed Pauli-sum or configuration document. `where()` names the field
/// (e.g. "terms[2].paulis") or "line L, column C" for syntax errors.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string where, const std::string& message)
      : std::runtime_error(where.empty() ? message : where + ": " + message),
        where_(std::move(where)),
        message_(message) {}

  const std::string& where() const noexcept { return where_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string where_;
  std::string message_;
};

}  // namespace piqc
