#pragma once

#include <stdexcept>

namespace gorstab {

// Malformed textual/JSON input (bad tokens, bad structure, bad rationals).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structurally invalid graph data: loops, duplicate edges, out-of-range
// endpoints, empty vertex set, duplicate vertex names.
struct InvalidGraph : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A caller-supplied argument is outside an operation's domain.
struct InvalidParameter : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An enumeration was asked to run past its configured safety cap.
struct SizeLimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Vectors/monomials/points indexed by mismatching coordinate sets.
struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A polyhedron required to be bounded has a recession direction.
struct Unbounded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A documented precondition of an operation does not hold for the input.
struct PreconditionFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Vertex enumeration produced a non-integral vertex where a lattice
// polytope is required.
struct NotLatticePolytope : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal cross-check (e.g. polynomial extrapolation) disagreed with
// directly computed data.
struct ValidationFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computed h^*-coefficient came out negative, which signals a bug or a
// non-polytopal input rather than a legitimate answer.
struct NegativeDelta : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A bounded backtracking search ran out of its node budget before reaching
// a definite answer.
struct SearchBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace gorstab
