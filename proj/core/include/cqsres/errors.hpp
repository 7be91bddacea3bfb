#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cqsres {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A string does not blow down to a canonical continued fraction.
struct NotContractible : Error {
  using Error::Error;
};

// A quantity that the theory guarantees to be integral failed to be so;
// always indicates invalid input data (a chain that is not a resolution).
struct NonIntegral : Error {
  using Error::Error;
};

// No curve multiplicity c >= 1 produces the requested intersection number.
struct NoSuchCurve : Error {
  using Error::Error;
};

// A resolution construction produced data violating its own postconditions.
struct ConstructionFailed : Error {
  using Error::Error;
};

// The antiflip at this curve has a degenerate (zero) new index.
struct Degenerate : Error {
  using Error::Error;
};

// Input text failed to parse; `position` is a byte offset into the input.
struct SyntaxError : Error {
  SyntaxError(const std::string& msg, std::size_t position)
      : Error(msg + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

// Two independent computations of the same quantity disagree. This is an
// internal consistency check; it should never fire on valid input.
struct FormulaMismatch : Error {
  using Error::Error;
};

struct NegativeArrowCount : Error {
  using Error::Error;
};

}  // namespace cqsres
