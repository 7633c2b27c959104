#pragma once

#include <stdexcept>

namespace gridreg {

// Base for input and precondition errors raised by this library. Legitimate
// negative verdicts (a coloring that is not perfect, a matrix without a
// standard order, ...) are returned as values, never thrown.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Coloring violates its own representation: bad periods, bad k, cell array of
// the wrong length, colors out of range, or a color in [1..k] that never occurs.
struct InvalidColoring : Error { using Error::Error; };

// BFS asked for distances to an empty source set.
struct EmptySource : Error { using Error::Error; };

// One-dimensional pattern requested with k = 0.
struct InvalidK : Error { using Error::Error; };

struct AllZeroDelta : Error { using Error::Error; };

// Binary word of odd length where pairs of bits were expected.
struct OddLength : Error { using Error::Error; };

// Cylindrical lift into a dimension that is not strictly larger.
struct DimensionNotLarger : Error { using Error::Error; };

// Reducible-family matrix parameters out of range.
struct InvalidSpec : Error { using Error::Error; };

struct NotTridiagonal : Error { using Error::Error; };

struct MonotonicityViolation : Error { using Error::Error; };

// Cell sequence handed to the chain verifier is not an ascending chain.
struct NotAChain : Error { using Error::Error; };

// Opposition asked for a color pair whose degree triples differ.
struct TriplesDiffer : Error { using Error::Error; };

// A neighbor's color jumps by more than one: the coloring is not layered.
struct NotLayered : Error { using Error::Error; };

// Direction data inside one component contradicts the hyperplane structure.
// This signals an implementation bug, not a property of the input.
struct InconsistentDelta : Error { using Error::Error; };

}  // namespace gridreg
