#include "hyperchrom/helly.hpp"

#include <algorithm>

#include "hyperchrom/setops.hpp"

namespace hyperchrom {

namespace {

struct BronKerbosch {
  const std::vector<std::vector<char>>& adj;
  std::vector<std::vector<int>> cliques;

  void run(std::vector<int>& r, std::vector<int> p, std::vector<int> x) {
    if (p.empty() && x.empty()) {
      cliques.push_back(r);
      return;
    }
    // Pivot on the candidate adjacent to most of p; classic pruning.
    int pivot = -1;
    std::size_t best = 0;
    for (int candidate_set = 0; candidate_set < 2; ++candidate_set)
      for (int u : (candidate_set == 0 ? p : x)) {
        std::size_t count = 0;
        for (int v : p)
          if (adj[u][v]) ++count;
        if (pivot < 0 || count > best) {
          pivot = u;
          best = count;
        }
      }
    std::vector<int> branch;
    for (int v : p)
      if (pivot < 0 || !adj[pivot][v]) branch.push_back(v);
    for (int v : branch) {
      std::vector<int> p2, x2;
      for (int w : p)
        if (adj[v][w]) p2.push_back(w);
      for (int w : x)
        if (adj[v][w]) x2.push_back(w);
      r.push_back(v);
      run(r, std::move(p2), std::move(x2));
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  }
};

}  // namespace

std::vector<std::vector<int>> maximal_intersecting_families(
    const std::vector<std::vector<int>>& sets) {
  int n = static_cast<int>(sets.size());
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (intersects(sets[i], sets[j])) adj[i][j] = adj[j][i] = 1;

  BronKerbosch bk{adj, {}};
  std::vector<int> r, p(n), x;
  for (int i = 0; i < n; ++i) p[i] = i;
  bk.run(r, std::move(p), std::move(x));
  for (auto& clique : bk.cliques) std::sort(clique.begin(), clique.end());
  std::sort(bk.cliques.begin(), bk.cliques.end());
  return bk.cliques;
}

HellyResult helly_check(const std::vector<std::vector<int>>& sets) {
  HellyResult result;
  std::vector<std::vector<int>> violating;
  for (const auto& family : maximal_intersecting_families(sets)) {
    if (family.size() < 2) continue;
    std::vector<int> common = sets[family[0]];
    for (std::size_t i = 1; i < family.size() && !common.empty(); ++i)
      common = set_intersection(common, sets[family[i]]);
    if (common.empty()) violating.push_back(family);
  }
  if (!violating.empty()) {
    result.helly = false;
    // Report the smallest violating maximal family (ties: lexicographic).
    std::sort(violating.begin(), violating.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                if (a.size() != b.size()) return a.size() < b.size();
                return a < b;
              });
    result.witness = violating.front();
  }
  return result;
}

}  // namespace hyperchrom
