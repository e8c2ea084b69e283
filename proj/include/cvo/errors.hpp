#pragma once

#include <stdexcept>
#include <string>

namespace cvo {

struct OutOfDomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct ZeroPolynomialError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Endpoint masses or mean integrals differ: the two weights already disagree
// on affine functions, so no convex-order verdict applies.
struct NotNormalizedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotIncomparableError : std::logic_error {
  using std::logic_error::logic_error;
};

struct ToleranceNotMetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoBracketError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cvo
