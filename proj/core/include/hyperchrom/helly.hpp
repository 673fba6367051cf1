#ifndef HYPERCHROM_HELLY_HPP
#define HYPERCHROM_HELLY_HPP

#include <vector>

namespace hyperchrom {

struct HellyResult {
  bool helly = true;
  /// On failure: indices of a pairwise-intersecting family with empty
  /// common intersection, namely the smallest violating maximal clique of
  /// the family-intersection graph.
  std::vector<int> witness;
};

/// Helly property of a finite set family: every pairwise-intersecting
/// subfamily has a common element. Any subfamily lives inside a maximal
/// clique of the intersection graph, and a maximal clique with a common
/// element covers all its subfamilies, so checking the maximal cliques
/// (Bron-Kerbosch with pivoting) decides the property.
HellyResult helly_check(const std::vector<std::vector<int>>& sets);

/// All maximal cliques (as sorted index lists) of the graph where i ~ j iff
/// sets i and j intersect. Deterministic order.
std::vector<std::vector<int>> maximal_intersecting_families(
    const std::vector<std::vector<int>>& sets);

}  // namespace hyperchrom

#endif
