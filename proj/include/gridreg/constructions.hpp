#pragma once

#include <optional>
#include <vector>

#include "gridreg/perfectness.hpp"
#include "gridreg/torus.hpp"

namespace gridreg {

// The three one-dimensional distance regular patterns for a given k:
//   reflective    1,2,...,k-1,k,k-1,...,2          period 2k-2
//   left_doubled  1,1,2,...,k-1,k,k-1,...,2        period 2k-1
//   both_doubled  1,1,2,...,k-1,k,k,k-1,...,2      period 2k
enum class OneDimKind { reflective, left_doubled, both_doubled };

// Throws InvalidK for k = 0. For k = 1 all kinds degenerate to the
// monochromatic pattern (reflective's nominal period 2k-2 = 0 is impossible).
PeriodicColoring one_dim_pattern(int k, OneDimKind kind);

// color(x) = pattern(delta . x mod period). The result lives on the torus
// with the pattern's period along every support axis and period 1 elsewhere.
// Throws AllZeroDelta.
PeriodicColoring lift_reducible(const PeriodicColoring& pattern, const std::vector<int>& delta);

// Parameter matrix family of lifted one-dimensional colorings: corner rows
// (2n - eps1*r, eps1*r) and (eps2*r, 2n - eps2*r), interior rows
// (r, 2n - 2r, r), where r = |support(delta)| and eps in {1,2} by kind:
// reflective (2,2), left_doubled (1,2), both_doubled (1,1).
struct ReducibleMatrixSpec {
  int n = 1;
  int k = 1;
  int r = 1;     // 1 <= r <= n
  int eps1 = 2;  // in {1,2}
  int eps2 = 2;
};

// Throws InvalidSpec when parameters leave the family's range.
ParameterMatrix reducible_matrix(const ReducibleMatrixSpec& spec);

// Re-embed an m-dimensional coloring into n > m dimensions with period-1 new
// axes; the diagonal entries grow by 2(n - m). Throws DimensionNotLarger.
PeriodicColoring cylindrical_lift(const PeriodicColoring& coloring, int n);

// Word over {0,1}, even length 2n.
using BinaryWord = std::vector<int>;

// Pairwise base map 00,01,11,10 -> 0,1,2,3 applied to consecutive bit pairs;
// a graph isomorphism between the hypercube {0,1}^{2n} and the period-4
// torus in n dimensions. Throws OddLength.
std::vector<int> gray_point(const BinaryWord& word);
BinaryWord gray_inverse(const std::vector<int>& point);

// Weight coloring of the hypercube {0,1}^{2n}: color = weight + 1. Kept on
// the hypercube vertex set (bitmask-indexed), not as a torus coloring.
struct HypercubeColoring {
  int half_dim = 0;         // n; words have 2n bits
  std::vector<int> colors;  // size 2^(2n), indexed by bitmask, bit b = word[b]
};

HypercubeColoring hamming_distance_coloring(int n);

// Parameter matrix of a hypercube coloring by direct counting; nullopt when
// the counts are not uniform per color.
std::optional<ParameterMatrix> hypercube_parameter_matrix(const HypercubeColoring& coloring);

// The weight coloring transported through gray_point: an irreducible
// distance regular coloring with k = 2n+1 on the period-4 torus.
PeriodicColoring gray_lift(int n);

}  // namespace gridreg
