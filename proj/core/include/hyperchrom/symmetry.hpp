#ifndef HYPERCHROM_SYMMETRY_HPP
#define HYPERCHROM_SYMMETRY_HPP

#include <cstdint>
#include <vector>

#include "hyperchrom/coloring.hpp"
#include "hyperchrom/hypergraph.hpp"

namespace hyperchrom {

/// image[v] = where v goes.
using VertexPermutation = std::vector<int>;

class VertexCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonIntegerAverage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Image of a sorted vertex set under a permutation, re-sorted.
std::vector<int> lift_permutation(const VertexPermutation& pi, const std::vector<int>& set);

/// Explicit element list; instances are small enough that listing the group
/// beats any generator-based representation.
struct AutomorphismSet {
  std::vector<VertexPermutation> elements;
  long long order() const { return static_cast<long long>(elements.size()); }
};

struct AutomorphismOptions {
  /// Refuse instances with more vertices than this; the search is a
  /// backtracking enumeration and the group is stored element by element.
  int max_vertices = 12;
};

/// All vertex permutations mapping the edge set onto itself, found by
/// backtracking over images with signature pruning. Throws
/// VertexCapExceeded above the configured cap.
AutomorphismSet automorphisms(const Hypergraph& h, const AutomorphismOptions& opts = {});

/// Index of an edge image under pi, or -1 when the image is not an edge.
int map_edge(const Hypergraph& h, const VertexPermutation& pi, int e);

/// Subgroup of `aut` whose elements preserve every edge's color:
/// color(pi(e)) == color(e) for all e. The two-sided condition (inverse
/// also preserves colors) is implied and asserted.
AutomorphismSet color_preserving_subgroup(const AutomorphismSet& aut, const Hypergraph& h,
                                          const EdgeColoring& coloring);

/// Orbits of the group action on edge indices, each block sorted, blocks
/// ordered by smallest member.
std::vector<std::vector<int>> orbits(const AutomorphismSet& group, const Hypergraph& h);

struct BurnsideBound {
  long long bound = 0;             // orbit count = (1/|T|) sum of fixed edges
  std::vector<int> fixed_counts;   // per group element, edges fixed setwise
};

/// Burnside/Cauchy-Frobenius count of edge orbits under a color-preserving
/// subgroup; each orbit is monochromatic, so the orbit count bounds the
/// number of colors a minimum coloring needs from above.
BurnsideBound burnside_bound(const AutomorphismSet& group, const Hypergraph& h);

struct BurnsideAverage {
  long long sum = 0;
  long long order = 0;
  long long bound = 0;
};

/// Pure formula evaluator: average the fixed-point counts of a group of
/// |counts| elements. Throws NonIntegerAverage when the sum is not
/// divisible by the order, which for genuine group data cannot happen.
BurnsideAverage burnside_orbit_average(const std::vector<long long>& fixed_counts);

}  // namespace hyperchrom

#endif
