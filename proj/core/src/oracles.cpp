#include "hyperchrom/oracles.hpp"

#include <algorithm>
#include <numeric>

#include "hyperchrom/setops.hpp"

namespace hyperchrom {

namespace {

bool colorable_with(const Hypergraph& h, int q, std::vector<int>& assign, int e) {
  if (e == h.edge_count()) return true;
  for (int c = 0; c < q; ++c) {
    bool clash = false;
    for (int f = 0; f < e && !clash; ++f)
      clash = assign[f] == c && intersects(h.edge(e), h.edge(f));
    if (clash) continue;
    assign[e] = c;
    if (colorable_with(h, q, assign, e + 1)) return true;
  }
  return false;
}

}  // namespace

int oracle_chromatic_index(const Hypergraph& h) {
  if (h.edge_count() > 10)
    throw OracleTooLarge("chromatic oracle refuses more than 10 edges");
  for (int q = 1; q <= h.edge_count(); ++q) {
    std::vector<int> assign(h.edge_count(), -1);
    if (colorable_with(h, q, assign, 0)) return q;
  }
  return h.edge_count();  // unreachable: m colors always suffice
}

long long oracle_automorphism_order(const Hypergraph& h) {
  int n = h.vertex_count();
  if (n > 8) throw OracleTooLarge("automorphism oracle refuses more than 8 vertices");

  // Sorted edge list for O(log m) membership tests on images.
  std::vector<std::vector<int>> sorted_edges = h.edges();
  std::sort(sorted_edges.begin(), sorted_edges.end());

  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  long long count = 0;
  do {
    bool ok = true;
    for (int e = 0; e < h.edge_count() && ok; ++e) {
      std::vector<int> image;
      image.reserve(h.edge(e).size());
      for (int v : h.edge(e)) image.push_back(pi[v]);
      std::sort(image.begin(), image.end());
      ok = std::binary_search(sorted_edges.begin(), sorted_edges.end(), image);
    }
    if (ok) ++count;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return count;
}

bool oracle_helly(const std::vector<std::vector<int>>& sets) {
  int n = static_cast<int>(sets.size());
  if (n > 12) throw OracleTooLarge("Helly oracle refuses more than 12 sets");
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) < 2) continue;
    std::vector<int> chosen;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) chosen.push_back(i);
    bool pairwise = true;
    for (std::size_t i = 0; i < chosen.size() && pairwise; ++i)
      for (std::size_t j = i + 1; j < chosen.size() && pairwise; ++j)
        pairwise = intersects(sets[chosen[i]], sets[chosen[j]]);
    if (!pairwise) continue;
    std::vector<int> common = sets[chosen[0]];
    for (std::size_t i = 1; i < chosen.size(); ++i)
      common = set_intersection(common, sets[chosen[i]]);
    if (common.empty()) return false;
  }
  return true;
}

}  // namespace hyperchrom
