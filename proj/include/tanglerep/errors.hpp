#pragma once

#include <stdexcept>
#include <string>

namespace tanglerep {

/// Inputs violate a documented precondition: malformed expressions, mixed
/// fields in one operation, out-of-range parameters, bad CLI flags.
class usage_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An operation is undefined in the coefficient field, e.g. division by zero.
class arithmetic_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A generic value cannot be carried into the requested field, e.g. the
/// denominator vanishes at the evaluation point.
class specialization_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A context or derived object cannot be built because one of its structural
/// invariants fails; the message names the invariant.
class construction_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace tanglerep
