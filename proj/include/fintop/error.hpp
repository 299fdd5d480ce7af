#pragma once

#include <stdexcept>
#include <string>

namespace fintop {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
  /// Short machine-readable tag used in CLI diagnostics.
  virtual const char* kind() const noexcept { return "error"; }
};

/// Malformed input: unknown identifiers, bad partitions, bad files.
class InputError : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "input"; }
};

/// An open-set family that violates the topology axioms.
class NotATopology : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "not-a-topology"; }
};

/// A decomposition that is not invariant where invariance is required.
class NotInvariant : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "not-invariant"; }
};

/// An internal consistency check failed. Never caused by valid input.
class InternalError : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "internal-invariant-violation"; }
};

}  // namespace fintop
