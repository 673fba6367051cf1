#ifndef HYPERCHROM_COLORING_HPP
#define HYPERCHROM_COLORING_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hyperchrom/hypergraph.hpp"

namespace hyperchrom {

/// Proper edge coloring: colors[e] in 0..q-1, intersecting edges differ,
/// and every color below q is used at least once.
struct EdgeColoring {
  std::vector<int> colors;
  int q = 0;
};

class ColoringError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Graph with one vertex per hyperedge and adjacency = nonempty
/// intersection. Proper hyperedge colorings of h are exactly proper vertex
/// colorings of this graph.
SimpleGraph intersection_graph(const Hypergraph& h);

/// Exact chromatic index by branch-and-bound on the intersection graph:
/// DSATUR vertex order, new colors introduced only as max-used+1, greedy
/// clique as the lower bound and greedy DSATUR as the initial upper bound.
/// Deterministic for a fixed (h, seed); seed permutes tie-breaking only, so
/// any seed still returns some minimum coloring. Colors are canonicalized
/// by first use along the edge order.
EdgeColoring chromatic_index_exact(const Hypergraph& h, std::uint64_t seed = 0);

/// Throws ColoringError when the assignment is malformed (wrong length or
/// negative entry); returns whether intersecting edges always differ.
bool is_proper(const Hypergraph& h, const std::vector<int>& colors);

/// Rebuilds a canonical EdgeColoring (first-use color order, q = #used)
/// from a raw assignment. Throws ColoringError if the assignment is
/// malformed or improper.
EdgeColoring canonical_coloring(const Hypergraph& h, const std::vector<int>& colors);

/// Sorted color set seen at each vertex. Under properness + linearity the
/// set at v has exactly deg(v) elements.
std::vector<std::vector<int>> induced_vertex_colors(const Hypergraph& h,
                                                    const EdgeColoring& coloring);

struct PairAdjacency {
  bool holds = false;
  /// First color pair with no intersecting representatives, if any.
  std::optional<std::pair<int, int>> violation;
  /// Recoloring witness for the violation: every edge of violation->second
  /// can take violation->first, dropping the color count by one.
  std::vector<int> merged_colors;
};

/// For a minimum coloring every two color classes must touch, otherwise the
/// two classes merge into one and the coloring was not minimum. This checks
/// that property for an arbitrary proper coloring.
PairAdjacency pair_adjacency_check(const Hypergraph& h, const EdgeColoring& coloring);

}  // namespace hyperchrom

#endif
