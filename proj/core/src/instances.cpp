#include "hyperchrom/instances.hpp"

#include <algorithm>
#include <random>

#include "hyperchrom/setops.hpp"

namespace hyperchrom {

Hypergraph fano() {
  std::vector<std::string> points{"1", "2", "3", "4", "5", "6", "7"};
  std::vector<std::vector<std::string>> lines{
      {"1", "2", "3"}, {"1", "4", "5"}, {"1", "6", "7"}, {"2", "4", "6"},
      {"2", "5", "7"}, {"3", "4", "7"}, {"3", "5", "6"}};
  return Hypergraph::validate("fano", std::move(points), lines);
}

Hypergraph flower(int petals, int edge_size) {
  if (petals < 1 || edge_size < 2)
    throw InfeasibleConfig("flower needs at least one petal of size two");
  std::vector<std::string> labels{"c"};
  std::vector<std::vector<std::string>> edges;
  for (int p = 0; p < petals; ++p) {
    std::vector<std::string> edge{"c"};
    for (int t = 1; t < edge_size; ++t) {
      labels.push_back("p" + std::to_string(p + 1) + "t" + std::to_string(t));
      edge.push_back(labels.back());
    }
    edges.push_back(std::move(edge));
  }
  return Hypergraph::validate("flower_" + std::to_string(petals) + "_" + std::to_string(edge_size),
                              std::move(labels), edges);
}

HellyPositiveInstance helly_positive(int missing) {
  if (missing < 2) throw InfeasibleConfig("need at least two missing colors");
  // Pivot degree a, hub degree a + missing. The hub's pencil is the only
  // large clique, so q equals the hub degree and the pencil is forced to
  // carry every color; whichever colors the pivot's star picks up, the
  // other `missing` ones all live on the pencil.
  int a = missing;
  int pencil = a + missing;

  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> edges;
  labels.push_back("v");  // intended pivot
  labels.push_back("u");  // hub

  // Pivot star: a edges {v, fresh, fresh}. The first tip is shared with the
  // first pencil edge to keep the instance connected.
  std::vector<std::string> star_tips;
  for (int i = 0; i < a; ++i)
    for (int t = 0; t < 2; ++t) {
      labels.push_back("s" + std::to_string(i + 1) + (t == 0 ? "a" : "b"));
      star_tips.push_back(labels.back());
    }
  for (int i = 0; i < a; ++i)
    edges.push_back({"v", star_tips[2 * i], star_tips[2 * i + 1]});

  for (int j = 0; j < pencil; ++j) {
    if (j == 0) {
      // Bridge edge through the first star tip.
      edges.push_back({"u", star_tips[0], "t1b"});
      labels.push_back("t1b");
      continue;
    }
    std::string ta = "t" + std::to_string(j + 1) + "a";
    std::string tb = "t" + std::to_string(j + 1) + "b";
    labels.push_back(ta);
    labels.push_back(tb);
    edges.push_back({"u", ta, tb});
  }

  HellyPositiveInstance out{
      Hypergraph::validate("helly_positive_" + std::to_string(missing), std::move(labels), edges),
      "v", "u"};
  return out;
}

namespace {

// Uniform draw in [0, bound) independent of the standard library's
// distribution implementations, so outputs are identical across platforms.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                        std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do { x = rng(); } while (x >= limit);
  return x % bound;
}

}  // namespace

Hypergraph random_linear(const GeneratorConfig& cfg) {
  if (cfg.n < 2 || cfg.m < 1 || cfg.size_min < 2 || cfg.size_min > cfg.size_max ||
      cfg.size_max > cfg.n)
    throw InfeasibleConfig("generator config out of range");

  std::mt19937_64 rng(cfg.seed);
  std::vector<std::vector<int>> edges;
  long long budget = static_cast<long long>(cfg.n) * cfg.m * 10;

  while (static_cast<int>(edges.size()) < cfg.m && budget > 0) {
    --budget;
    int size = cfg.size_min +
               static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(
                                                    cfg.size_max - cfg.size_min + 1)));
    std::vector<int> edge;
    while (static_cast<int>(edge.size()) < size) {
      int v = static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(cfg.n)));
      if (!std::count(edge.begin(), edge.end(), v)) edge.push_back(v);
    }
    std::sort(edge.begin(), edge.end());

    bool ok = true;
    for (const auto& other : edges) {
      if (other == edge || intersection_size(other, edge) > 1) {
        ok = false;
        break;
      }
    }
    if (ok) edges.push_back(std::move(edge));
  }

  if (edges.empty()) throw InfeasibleConfig("budget exhausted before placing any edge");

  // Drop unused vertices, keeping index order, so the result validates.
  std::vector<char> used(cfg.n, 0);
  for (const auto& e : edges)
    for (int v : e) used[v] = 1;
  std::vector<std::string> labels;
  for (int v = 0; v < cfg.n; ++v)
    if (used[v]) labels.push_back("v" + std::to_string(v));

  std::vector<std::vector<std::string>> edge_labels;
  edge_labels.reserve(edges.size());
  for (const auto& e : edges) {
    std::vector<std::string> le;
    for (int v : e) le.push_back("v" + std::to_string(v));
    edge_labels.push_back(std::move(le));
  }

  std::string name = "random_n" + std::to_string(cfg.n) + "_m" + std::to_string(cfg.m) + "_s" +
                     std::to_string(cfg.seed);
  return Hypergraph::validate(std::move(name), std::move(labels), edge_labels);
}

}  // namespace hyperchrom
