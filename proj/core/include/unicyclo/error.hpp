#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace unicyclo {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad argument supplied by the caller (exit code 2 in the CLI).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A hypothesis of a theorem check does not hold for the given parameters.
class PreconditionUnmet : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class InvalidBasis : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class NotNumerical : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// (x^d - 1) did not divide the polynomial exactly.
class NonExactDivision : public Error {
 public:
  NonExactDivision(std::uint64_t d, const std::string& detail)
      : Error("division by x^" + std::to_string(d) + " - 1 is not exact: " + detail), divisor_(d) {}
  std::uint64_t divisor() const noexcept { return divisor_; }

 private:
  std::uint64_t divisor_;
};

class NonUnitConstantTerm : public Error {
 public:
  using Error::Error;
};

/// Two computations that must agree did not.
class InternalMismatch : public Error {
 public:
  using Error::Error;
};

/// A verified identity failed; the message names the identity and index.
class IdentityViolation : public Error {
 public:
  using Error::Error;
};

class PredictionMismatch : public Error {
 public:
  using Error::Error;
};

class SearchCeilingExceeded : public Error {
 public:
  using Error::Error;
};

class CeilingExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace unicyclo
