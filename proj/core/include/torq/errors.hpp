#pragma once

#include <stdexcept>
#include <string>

namespace torq {

// Domain-level failures. The CLI maps all of these to exit code 3.

// The polarization sits on a wall of the weight arrangement, so a
// chamber-dependent quantity is not defined.
struct WallError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Some semistable stratum has a positive-dimensional stabilizer, so the
// twisted-sector list is not finite.
struct InfiniteInertiaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The finite isotropy groups exceed the configured order cap.
struct GroupTooLargeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An enumeration exceeded the configured work budget.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The requested curve class has an unstable leading support.
struct InvalidDegreeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A one-parameter subgroup fails the admissibility inequalities for the
// given support.
struct InadmissibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Edge collapse asked to merge incompatible scaling states.
struct IllegalMergeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Stabilization has no collapse left to perform but the tree is still
// unstable (e.g. a single unstable vertex).
struct UnstabilizableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace torq
