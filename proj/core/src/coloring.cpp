#include "hyperchrom/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "hyperchrom/setops.hpp"

namespace hyperchrom {

SimpleGraph intersection_graph(const Hypergraph& h) {
  SimpleGraph g;
  g.n = h.edge_count();
  g.adj.assign(g.n, {});
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (intersects(h.edge(i), h.edge(j))) {
        g.adj[i].push_back(j);
        g.adj[j].push_back(i);
      }
  return g;
}

namespace {

// Branch-and-bound state for the exact solver. Sizes here are tiny (tens
// of edges), so adjacency is kept as bool matrix rows for O(1) conflict
// tests.
struct Solver {
  int n;
  std::vector<std::vector<char>> adj;
  std::vector<int> degree;
  std::vector<int> tie_rank;  // permutation breaking all remaining ties

  std::vector<int> best;
  int best_q;

  std::vector<int> assign;
  std::vector<std::vector<int>> sat;  // sat[v] = sorted distinct neighbor colors

  explicit Solver(const SimpleGraph& g, const std::vector<int>& rank)
      : n(g.n), adj(g.n, std::vector<char>(g.n, 0)), degree(g.n), tie_rank(rank) {
    for (int v = 0; v < n; ++v) {
      degree[v] = g.degree(v);
      for (int w : g.adj[v]) adj[v][w] = 1;
    }
  }

  // Greedy clique: seed with the best-ranked max-degree vertex, extend by
  // common neighbors. Gives the initial lower bound.
  std::vector<int> greedy_clique() const {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (degree[a] != degree[b]) return degree[a] > degree[b];
      return tie_rank[a] < tie_rank[b];
    });
    std::vector<int> clique;
    for (int v : order) {
      bool ok = true;
      for (int c : clique)
        if (!adj[v][c]) { ok = false; break; }
      if (ok) clique.push_back(v);
    }
    return clique;
  }

  int pick_vertex() const {
    int best_v = -1;
    std::size_t best_sat = 0;
    for (int v = 0; v < n; ++v) {
      if (assign[v] >= 0) continue;
      std::size_t s = sat[v].size();
      if (best_v < 0 || s > best_sat ||
          (s == best_sat && (degree[v] > degree[best_v] ||
                             (degree[v] == degree[best_v] && tie_rank[v] < tie_rank[best_v])))) {
        best_v = v;
        best_sat = s;
      }
    }
    return best_v;
  }

  void add_sat(int v, int color) {
    for (int w = 0; w < n; ++w)
      if (adj[v][w]) {
        auto& s = sat[w];
        auto it = std::lower_bound(s.begin(), s.end(), color);
        if (it == s.end() || *it != color) s.insert(it, color);
      }
  }

  void rebuild_sat() {
    sat.assign(n, {});
    for (int v = 0; v < n; ++v)
      if (assign[v] >= 0) add_sat(v, assign[v]);
  }

  bool feasible(int v, int color) const {
    return !std::binary_search(sat[v].begin(), sat[v].end(), color);
  }

  void search(int colored, int used, int lower_bound) {
    if (used >= best_q) return;  // cannot improve
    if (colored == n) {
      best = assign;
      best_q = used;
      return;
    }
    int v = pick_vertex();
    int limit = std::min(used + 1, best_q - 1);  // may open color `used` only
    for (int c = 0; c < limit; ++c) {
      if (c < used && !feasible(v, c)) continue;
      if (c == used && used + 1 >= best_q) break;
      int next_used = std::max(used, c + 1);
      if (std::max(next_used, lower_bound) >= best_q) continue;
      assign[v] = c;
      auto saved = sat;  // tiny graphs; plain copy keeps the code obvious
      add_sat(v, c);
      search(colored + 1, next_used, lower_bound);
      sat = std::move(saved);
      assign[v] = -1;
      if (best_q == lower_bound) return;  // proven optimal
    }
  }
};

}  // namespace

EdgeColoring chromatic_index_exact(const Hypergraph& h, std::uint64_t seed) {
  SimpleGraph g = intersection_graph(h);
  std::vector<int> rank(g.n);
  std::iota(rank.begin(), rank.end(), 0);
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    for (int i = g.n - 1; i > 0; --i) {
      int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
      std::swap(rank[i], rank[j]);
    }
  }

  Solver solver(g, rank);
  int lower = static_cast<int>(solver.greedy_clique().size());

  // Greedy DSATUR pass for the initial upper bound (and a feasible coloring).
  solver.assign.assign(g.n, -1);
  solver.sat.assign(g.n, {});
  int used = 0;
  for (int step = 0; step < g.n; ++step) {
    int v = solver.pick_vertex();
    int c = 0;
    while (!solver.feasible(v, c)) ++c;
    solver.assign[v] = c;
    solver.add_sat(v, c);
    used = std::max(used, c + 1);
  }
  solver.best = solver.assign;
  solver.best_q = used;

  if (solver.best_q > lower) {
    solver.assign.assign(g.n, -1);
    solver.sat.assign(g.n, {});
    solver.search(0, 0, lower);
  }

  return canonical_coloring(h, solver.best);
}

bool is_proper(const Hypergraph& h, const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != h.edge_count())
    throw ColoringError("coloring has " + std::to_string(colors.size()) + " entries for " +
                        std::to_string(h.edge_count()) + " edges");
  for (int c : colors)
    if (c < 0) throw ColoringError("coloring contains a negative color");
  for (int i = 0; i < h.edge_count(); ++i)
    for (int j = i + 1; j < h.edge_count(); ++j)
      if (colors[i] == colors[j] && intersects(h.edge(i), h.edge(j))) return false;
  return true;
}

EdgeColoring canonical_coloring(const Hypergraph& h, const std::vector<int>& colors) {
  if (!is_proper(h, colors)) throw ColoringError("assignment is not a proper coloring");
  const int raw_max = colors.empty() ? -1 : *std::max_element(colors.begin(), colors.end());
  std::vector<int> remap(raw_max + 1, -1);
  EdgeColoring out;
  out.colors.resize(colors.size());
  int next = 0;
  for (std::size_t e = 0; e < colors.size(); ++e) {
    int c = colors[e];
    if (remap[c] < 0) remap[c] = next++;
    out.colors[e] = remap[c];
  }
  out.q = next;
  return out;
}

std::vector<std::vector<int>> induced_vertex_colors(const Hypergraph& h,
                                                    const EdgeColoring& coloring) {
  std::vector<std::vector<int>> sets(h.vertex_count());
  for (int v = 0; v < h.vertex_count(); ++v) {
    for (int e : h.star(v)) sets[v].push_back(coloring.colors[e]);
    std::sort(sets[v].begin(), sets[v].end());
    sets[v].erase(std::unique(sets[v].begin(), sets[v].end()), sets[v].end());
  }
  return sets;
}

PairAdjacency pair_adjacency_check(const Hypergraph& h, const EdgeColoring& coloring) {
  int q = coloring.q;
  std::vector<std::vector<char>> touch(q, std::vector<char>(q, 0));
  for (int i = 0; i < h.edge_count(); ++i)
    for (int j = i + 1; j < h.edge_count(); ++j)
      if (intersects(h.edge(i), h.edge(j))) {
        touch[coloring.colors[i]][coloring.colors[j]] = 1;
        touch[coloring.colors[j]][coloring.colors[i]] = 1;
      }
  PairAdjacency result;
  for (int a = 0; a < q; ++a)
    for (int b = a + 1; b < q; ++b)
      if (!touch[a][b]) {
        result.holds = false;
        result.violation = {a, b};
        result.merged_colors = coloring.colors;
        for (int& c : result.merged_colors)
          if (c == b) c = a;
        return result;
      }
  result.holds = true;
  return result;
}

}  // namespace hyperchrom
