#include "hyperchrom/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hyperchrom/setops.hpp"

namespace hyperchrom {

std::vector<int> lift_permutation(const VertexPermutation& pi, const std::vector<int>& set) {
  std::vector<int> out;
  out.reserve(set.size());
  for (int v : set) out.push_back(pi[v]);
  std::sort(out.begin(), out.end());
  return out;
}

int map_edge(const Hypergraph& h, const VertexPermutation& pi, int e) {
  std::vector<int> image = lift_permutation(pi, h.edge(e));
  // Linear hypergraph: any two vertices pin down at most one edge, so probe
  // through the star of the smallest image vertex.
  for (int candidate : h.star(image[0]))
    if (h.edge(candidate) == image) return candidate;
  return -1;
}

namespace {

struct Signature {
  int degree;
  int degree2;
  std::vector<int> edge_sizes;  // sorted multiset of incident edge sizes

  bool operator==(const Signature&) const = default;
};

struct AutSearch {
  const Hypergraph& h;
  int n;
  std::vector<Signature> sig;
  std::vector<std::vector<int>> candidates;  // same-signature vertices
  std::vector<int> order;                    // vertices, rarest signature first

  std::vector<int> image;
  std::vector<char> used;
  std::vector<VertexPermutation> found;

  explicit AutSearch(const Hypergraph& graph) : h(graph), n(graph.vertex_count()) {
    Metrics m = metrics(h);
    sig.resize(n);
    for (int v = 0; v < n; ++v) {
      sig[v].degree = m.degree[v];
      sig[v].degree2 = m.degree2[v];
      for (int e : h.star(v)) sig[v].edge_sizes.push_back(static_cast<int>(h.edge(e).size()));
      std::sort(sig[v].edge_sizes.begin(), sig[v].edge_sizes.end());
    }
    candidates.resize(n);
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w)
        if (sig[v] == sig[w]) candidates[v].push_back(w);
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return candidates[a].size() < candidates[b].size();
    });
  }

  // Partial consistency: for every already-placed w, the pair (v, w) lies on
  // an edge of a given size iff the image pair does.
  bool compatible(int v, int target) const {
    for (int w = 0; w < n; ++w) {
      if (image[w] < 0 || w == v) continue;
      int e = h.edge_through(v, w);
      int f = h.edge_through(target, image[w]);
      if ((e < 0) != (f < 0)) return false;
      if (e >= 0 && h.edge(e).size() != h.edge(f).size()) return false;
    }
    return true;
  }

  bool full_check() const {
    for (int e = 0; e < h.edge_count(); ++e)
      if (map_edge(h, image, e) < 0) return false;
    return true;
  }

  void extend(std::size_t pos) {
    if (pos == order.size()) {
      // Pairwise consistency does not yet force whole edges onto whole
      // edges (three pair-compatible vertices may land on three different
      // edges), hence the final verification.
      if (full_check()) found.push_back(image);
      return;
    }
    int v = order[pos];
    for (int target : candidates[v]) {
      if (used[target]) continue;
      if (!compatible(v, target)) continue;
      image[v] = target;
      used[target] = 1;
      extend(pos + 1);
      used[target] = 0;
      image[v] = -1;
    }
  }
};

}  // namespace

AutomorphismSet automorphisms(const Hypergraph& h, const AutomorphismOptions& opts) {
  if (h.vertex_count() > opts.max_vertices)
    throw VertexCapExceeded("automorphism search capped at " +
                            std::to_string(opts.max_vertices) + " vertices, instance has " +
                            std::to_string(h.vertex_count()));
  AutSearch search(h);
  search.image.assign(search.n, -1);
  search.used.assign(search.n, 0);
  search.extend(0);
  std::sort(search.found.begin(), search.found.end());
  AutomorphismSet out;
  out.elements = std::move(search.found);
  return out;
}

AutomorphismSet color_preserving_subgroup(const AutomorphismSet& aut, const Hypergraph& h,
                                          const EdgeColoring& coloring) {
  AutomorphismSet sub;
  for (const auto& pi : aut.elements) {
    bool preserves = true;
    for (int e = 0; e < h.edge_count() && preserves; ++e) {
      int image = map_edge(h, pi, e);
      preserves = image >= 0 && coloring.colors[image] == coloring.colors[e];
    }
    if (preserves) sub.elements.push_back(pi);
  }
  // The condition is two-sided: a bijection preserving colors forward also
  // preserves them backward. Cheap to verify, so verify.
  for (const auto& pi : sub.elements) {
    VertexPermutation inv(pi.size());
    for (std::size_t v = 0; v < pi.size(); ++v) inv[pi[v]] = static_cast<int>(v);
    for (int e = 0; e < h.edge_count(); ++e) {
      int image = map_edge(h, inv, e);
      if (image < 0 || coloring.colors[image] != coloring.colors[e])
        throw std::logic_error("color-preserving subgroup is not closed under inverse");
    }
  }
  return sub;
}

std::vector<std::vector<int>> orbits(const AutomorphismSet& group, const Hypergraph& h) {
  int m = h.edge_count();
  std::vector<int> root(m, -1);
  std::vector<std::vector<int>> blocks;
  for (int e = 0; e < m; ++e) {
    if (root[e] >= 0) continue;
    std::vector<int> block{e};
    root[e] = e;
    for (std::size_t i = 0; i < block.size(); ++i)
      for (const auto& pi : group.elements) {
        int image = map_edge(h, pi, block[i]);
        if (root[image] < 0) {
          root[image] = e;
          block.push_back(image);
        }
      }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  return blocks;
}

BurnsideBound burnside_bound(const AutomorphismSet& group, const Hypergraph& h) {
  BurnsideBound out;
  out.fixed_counts.reserve(group.elements.size());
  std::vector<long long> counts;
  for (const auto& pi : group.elements) {
    int fixed = 0;
    for (int e = 0; e < h.edge_count(); ++e)
      if (map_edge(h, pi, e) == e) ++fixed;
    out.fixed_counts.push_back(fixed);
    counts.push_back(fixed);
  }
  out.bound = burnside_orbit_average(counts).bound;
  return out;
}

BurnsideAverage burnside_orbit_average(const std::vector<long long>& fixed_counts) {
  if (fixed_counts.empty()) throw NonIntegerAverage("empty group");
  BurnsideAverage avg;
  avg.order = static_cast<long long>(fixed_counts.size());
  for (long long c : fixed_counts) avg.sum += c;
  if (avg.sum % avg.order != 0)
    throw NonIntegerAverage("fixed-count sum " + std::to_string(avg.sum) +
                            " is not divisible by group order " + std::to_string(avg.order));
  avg.bound = avg.sum / avg.order;
  return avg;
}

}  // namespace hyperchrom
