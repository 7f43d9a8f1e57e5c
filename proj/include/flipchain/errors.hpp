#pragma once

#include <stdexcept>
#include <string>

namespace flipchain {

// Base of every error the library raises. Callers that only care about
// "something went wrong" can catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside an operation's documented domain (bad degree, genus, file).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Index outside the valid chamber / flip range.
class OutOfRange : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// A formula-level precondition (e.g. -d > 4g-4) does not hold.
class PreconditionFailed : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// Exact division left a remainder. Always a transcription or index bug.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

// Coefficient extraction past the truncation order of a series.
class OrderExceeded : public Error {
 public:
  using Error::Error;
};

// A Poincare polynomial kept a negative t-exponent.
class NegativeExponentSurvived : public Error {
 public:
  using Error::Error;
};

// Two incomparable subobjects tie for maximal destabilizer.
class AmbiguousModel : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// A model does not satisfy the constraint-closure axiom required by the
// rank-2 equivalence checks.
class AxiomViolated : public Error {
 public:
  using Error::Error;
};

// Split-case oriented stability was requested on a model without a split
// descriptor.
class MissingSplitData : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

}  // namespace flipchain
