#pragma once

#include <stdexcept>
#include <string>

namespace latgon {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad inputs: malformed bodies, infeasible shapes, mismatched grids.
// The CLI maps these to exit code 2.
struct ValidationError : Error {
    using Error::Error;
};

// Numeric failures: a solver that did not converge, a curve that did not
// close, an exhausted search budget. The CLI maps these to exit code 3.
struct NumericError : Error {
    using Error::Error;
};

struct GridMismatch : ValidationError {
    using ValidationError::ValidationError;
};

// Edge-vector input whose sum is not the zero vector.
struct NonZeroSum : ValidationError {
    using ValidationError::ValidationError;
};

// Fewer than three edge directions remain after merging parallels.
struct EmptyEdgeSet : ValidationError {
    using ValidationError::ValidationError;
};

// Closing-vector merge left too few directions to form a polygon.
struct DegenerateClosing : ValidationError {
    using ValidationError::ValidationError;
};

// Guide shape does not satisfy area = 1 / centroid = 0.
struct InfeasibleShape : ValidationError {
    using ValidationError::ValidationError;
};

struct NoConvergence : NumericError {
    using NumericError::NumericError;
};

// No positive radial function reachable along the damped iteration path.
struct NonPositive : NumericError {
    using NumericError::NumericError;
};

// Boundary curve failed to close; signals an unconverged solution.
struct NotClosed : NumericError {
    using NumericError::NumericError;
};

// Search budget exhausted before any feasible incumbent was found.
struct BudgetExceeded : NumericError {
    using NumericError::NumericError;
};

}  // namespace latgon
