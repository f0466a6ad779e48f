// Exception types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace schlicht {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Interval/box operations asked to work on an empty set.
struct EmptyDomainError : Error {
  using Error::Error;
};

// Series lacking the required z^2*(1 + ...) leading form, or not normalized.
struct BadLeadingTermError : Error {
  using Error::Error;
};

// Grunsky table index outside the stored range.
struct MissingIndexError : Error {
  using Error::Error;
};

// Objective evaluated at a point outside its domain.
struct OutsideDomainError : Error {
  using Error::Error;
};

// Gradient requested where the radical term is not differentiable.
struct BoundarySingularityError : Error {
  using Error::Error;
};

// Root isolation requires a square-free polynomial.
struct NotSquareFreeError : Error {
  using Error::Error;
};

// Branch-and-bound exceeded its box budget before reaching the tolerance.
struct BudgetExceededError : Error {
  using Error::Error;
};

// Newton refinement stepped outside the feasible region and could not recover.
struct LeftDomainError : Error {
  using Error::Error;
};

// A sign-certification sweep ran out of subdivision budget before covering
// the interval (neither proved nor disproved).
struct InconclusiveError : Error {
  using Error::Error;
};

}  // namespace schlicht
