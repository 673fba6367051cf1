#include "hyperchrom/bounds.hpp"

#include <algorithm>

#include "hyperchrom/setops.hpp"

namespace hyperchrom {

BoundsReport bounds_report(const std::vector<ThetaClass>& thetas, const CaseSplit& split,
                           int c0, int q, const Metrics& m) {
  BoundsReport r;
  r.c0 = c0;
  std::vector<int> members = gamma(thetas, split, c0);
  r.gamma_size = static_cast<int>(members.size());
  r.star_color_count = static_cast<int>(split.star_colors.size());
  r.hstar = star_color_hypergraph(thetas, members, split, c0);

  std::vector<int> key_union;
  for (int idx : members) key_union = set_union(key_union, thetas[idx].key);
  r.key_union_size = static_cast<int>(key_union.size());
  // Every key contains c0, so inside H* the color c0 neighbors every other
  // vertex of the two-section: its degree is |union| - 1.
  r.hstar_degree2_c0 = r.key_union_size == 0 ? 0 : r.key_union_size - 1;

  r.union_bound = make_inequality("q <= |C*| + |U keys|", q,
                                  Rational(r.star_color_count) + Rational(r.key_union_size));
  r.hstar_bound =
      make_inequality("q <= |C*| + deg2_Hstar(c0) + 1", q,
                      Rational(r.star_color_count) + Rational(r.hstar_degree2_c0) + Rational(1));
  r.degree_bound = make_inequality(
      "q <= |C*| + (Delta-1)|Gamma| + 1", q,
      Rational(r.star_color_count) + Rational(m.delta - 1) * Rational(r.gamma_size) + Rational(1));
  r.ratio_bound = ratio_bound_evaluate(q, r.gamma_size, m.antirank, m.delta2);
  r.gamma_antirank = make_inequality("|Gamma|+1 <= ar-1", Rational(r.gamma_size) + Rational(1),
                                     Rational(m.antirank) - Rational(1));
  r.certificate = r.gamma_antirank.holds;
  return r;
}

Inequality ratio_bound_evaluate(long long q, long long gamma_size, long long antirank,
                                long long delta2) {
  if (antirank < 2)
    throw AntirankDegenerate("antirank " + std::to_string(antirank) +
                             " leaves the ratio bound undefined");
  Rational lhs = Rational(q) + Rational(gamma_size);
  Rational rhs =
      Rational(gamma_size + 1, antirank - 1) * Rational(delta2) + Rational(1);
  return make_inequality("q + |Gamma| <= ((|Gamma|+1)/(ar-1)) Delta2 + 1", lhs, rhs);
}

HellySufficiency helly_sufficiency_check(const EdgeColoring& coloring, const CaseSplit& split,
                                         const std::vector<ThetaClass>& thetas,
                                         const Metrics& m) {
  HellySufficiency s;
  s.applicable = m.antirank >= 3 && split.kind == CaseKind::Case2;
  if (!s.applicable) return s;

  s.hgamma = gamma_hypergraph(split, thetas);
  s.helly = helly_check(s.hgamma.edges);
  s.fires = s.helly.helly;
  if (!s.fires) return s;

  // Proof chain, re-checked numerically. The star of the pivot's class
  // carries |C*| distinct colors and every missing color is accounted for
  // by a single class covering the missing set, so q splits as
  // |C*| + |missing| and both parts are at most Delta.
  s.q_decomposition_lhs = coloring.q;
  s.q_decomposition_rhs =
      static_cast<long long>(split.star_colors.size() + split.missing_colors.size());
  s.two_delta = make_inequality("q <= 2*Delta", Rational(coloring.q),
                                Rational(2) * Rational(m.delta));
  bool chain_ok = s.q_decomposition_lhs == s.q_decomposition_rhs && s.two_delta.holds;
  if (!chain_ok)
    throw std::logic_error("Helly sufficiency fired but its proof chain failed numerically");
  s.certificate = true;
  return s;
}

CliqueCondition clique_condition_check(const Hypergraph& h, const EdgeColoring& coloring,
                                       const CaseSplit& split, const Metrics& m) {
  CliqueCondition c;
  c.k = m.rank == m.antirank ? m.rank : 0;
  c.applicable = c.k >= 3 && split.kind == CaseKind::Case2;
  if (!c.applicable) return c;
  c.threshold = static_cast<long long>(c.k) * c.k - c.k + 1;

  // Edges whose color is missing at the pivot.
  std::vector<int> missing_edges;
  for (int e = 0; e < h.edge_count(); ++e)
    if (contains(split.missing_colors, coloring.colors[e])) missing_edges.push_back(e);

  std::vector<std::vector<int>> sets;
  sets.reserve(missing_edges.size());
  for (int e : missing_edges) sets.push_back(h.edge(e));

  // Qualifying family: pairwise intersecting and touching every missing
  // color. Pairwise-intersecting edges have pairwise-distinct colors, so a
  // qualifying family has exactly |missing| members; any such family sits
  // inside a maximal one, and a maximal family qualifies iff it covers the
  // missing set.
  for (const auto& family : maximal_intersecting_families(sets)) {
    std::vector<int> colors;
    for (int idx : family) colors.push_back(coloring.colors[missing_edges[idx]]);
    std::sort(colors.begin(), colors.end());
    if (colors != split.missing_colors) continue;
    std::vector<int> edges;
    for (int idx : family) edges.push_back(missing_edges[idx]);
    std::sort(edges.begin(), edges.end());
    if (!c.family_found || edges.size() > c.family.size()) {
      c.family_found = true;
      c.family = edges;
    }
  }
  if (!c.family_found) return c;

  c.fires = static_cast<long long>(c.family.size()) > c.threshold;
  if (!c.fires) return c;

  std::vector<int> common = h.edge(c.family[0]);
  for (std::size_t i = 1; i < c.family.size() && !common.empty(); ++i)
    common = set_intersection(common, h.edge(c.family[i]));
  if (!common.empty()) {
    c.common_vertex = common.front();
    c.certificate = true;
  }
  return c;
}

}  // namespace hyperchrom
