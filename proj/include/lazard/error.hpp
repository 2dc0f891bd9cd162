#pragma once

#include <stdexcept>
#include <string>

namespace lazard {

enum class ErrorKind {
  InvalidArgument,
  DimensionMismatch,
  NotAUnit,
  DegreeTooHigh,
  ClassTooLarge,
  ExponentialNotExact,
  NotUnipotent,
  NotNilpotent,
  AbelianizationTorsion,
  NotSolvable,
  ModuleAxiom,
  CocyclesNotPreserved,
  MalformedChain,
  Parse,
};

const char* to_string(ErrorKind kind);

// Every recoverable failure in the library is reported through this type;
// kind() lets callers (notably the CLI) classify it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lazard
