#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

/// Input lies outside the documented domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// F'(lambda) could not be certified positive, so X(lambda) is undefined.
class XUndefinedError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An enclosure straddles a branch or clamp boundary at a point where a
/// single-branch result is required (derivative evaluation, typically).
class BranchBoundaryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A candidate fails the hypothesis required on entry to a recursion.
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A state the surrounding argument proves impossible was reached.
/// Always indicates a bug in this library, never bad input.
class InternalContradictionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An explicit precondition of an algorithm does not hold for the input.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested computation exceeds the configured search budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (colorings, rationals, config values).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The budgeted partition search found no candidate meeting the required
/// excess, although one is guaranteed to exist at full scale.
class PartitionShortfallError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A checked evaluation disagreed with its own higher-precision recomputation.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ramsey
