#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclolab {

enum class ErrorKind {
  InvalidArgument,
  NotDivisible,
  ModulusMismatch,
  NotCoprime,
  FactorizationLimit,
  LimitExceeded,
  RamifiedPrime,
  PrimalityError,
  BoundExhausted,
  SamePrime,
  // A mathematical check failed. Never expected; signals a bug.
  VerificationFailed,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace cyclolab
