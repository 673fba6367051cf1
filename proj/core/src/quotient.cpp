#include "hyperchrom/quotient.hpp"

#include <algorithm>
#include <map>

#include "hyperchrom/setops.hpp"

namespace hyperchrom {

std::vector<SimClass> sim_partition(const Hypergraph& h, const EdgeColoring& coloring) {
  std::map<std::vector<int>, SimClass> by_star;
  for (int v = 0; v < h.vertex_count(); ++v) {
    SimClass& cls = by_star[h.star(v)];
    if (cls.members.empty()) cls.star = h.star(v);
    cls.members.push_back(v);
  }
  std::vector<SimClass> classes;
  classes.reserve(by_star.size());
  for (auto& [star, cls] : by_star) {
    for (int e : star) cls.colors.push_back(coloring.colors[e]);
    std::sort(cls.colors.begin(), cls.colors.end());
    cls.colors.erase(std::unique(cls.colors.begin(), cls.colors.end()), cls.colors.end());
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(),
            [](const SimClass& a, const SimClass& b) { return a.members[0] < b.members[0]; });
  return classes;
}

std::vector<int> pivot_candidates(const Hypergraph& h) {
  Metrics m = metrics(h);
  std::vector<int> out;
  for (int v = 0; v < h.vertex_count(); ++v)
    if (m.degree2[v] == m.delta2) out.push_back(v);
  return out;
}

int pick_pivot(const Hypergraph& h) { return pivot_candidates(h).front(); }

CaseSplit classify_case(const Hypergraph& h, const EdgeColoring& coloring, int pivot) {
  CaseSplit split;
  split.pivot = pivot;
  for (int e : h.star(pivot)) split.star_colors.push_back(coloring.colors[e]);
  std::sort(split.star_colors.begin(), split.star_colors.end());
  split.star_colors.erase(std::unique(split.star_colors.begin(), split.star_colors.end()),
                          split.star_colors.end());
  for (int c = 0; c < coloring.q; ++c)
    if (!contains(split.star_colors, c)) split.missing_colors.push_back(c);
  switch (split.missing_colors.size()) {
    case 0: split.kind = CaseKind::Case1; break;
    case 1: split.kind = CaseKind::SingleMissing; break;
    default: split.kind = CaseKind::Case2; break;
  }
  return split;
}

std::vector<ThetaClass> omega_theta(const CaseSplit& split,
                                    const std::vector<SimClass>& classes) {
  if (split.kind == CaseKind::Case1)
    throw NotApplicable("no color is missing at the pivot; omega is empty by definition");
  std::map<std::vector<int>, ThetaClass> by_key;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (!intersects(classes[i].colors, split.missing_colors)) continue;
    ThetaClass& theta = by_key[classes[i].colors];
    if (theta.class_indices.empty()) theta.key = classes[i].colors;
    theta.class_indices.push_back(static_cast<int>(i));
  }
  std::vector<ThetaClass> thetas;
  thetas.reserve(by_key.size());
  for (auto& [key, theta] : by_key) thetas.push_back(std::move(theta));
  return thetas;
}

std::vector<int> gamma(const std::vector<ThetaClass>& thetas, const CaseSplit& split, int c0) {
  if (split.kind != CaseKind::Case2)
    throw NotApplicable("gamma needs at least two missing colors");
  if (!contains(split.missing_colors, c0))
    throw NotApplicable("c0 must be a missing color");
  std::vector<int> members;
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    const auto& key = thetas[i].key;
    if (!contains(key, c0)) continue;
    for (int c : split.missing_colors)
      if (c != c0 && contains(key, c)) {
        members.push_back(static_cast<int>(i));
        break;
      }
  }
  return members;
}

const ThetaClass& pair_witness(const std::vector<ThetaClass>& thetas, const CaseSplit& split,
                               int c0, int ci) {
  if (!contains(split.missing_colors, c0) || !contains(split.missing_colors, ci) || c0 == ci)
    throw NotApplicable("pair witness is defined for two distinct missing colors");
  for (const auto& theta : thetas)
    if (contains(theta.key, c0) && contains(theta.key, ci)) return theta;
  throw NonMinimalColoring(
      "no vertex class sees both missing colors " + std::to_string(c0) + " and " +
      std::to_string(ci) +
      "; their color classes never intersect, so the coloring is not minimum");
}

DerivedHypergraph star_color_hypergraph(const std::vector<ThetaClass>& thetas,
                                        const std::vector<int>& gamma_members,
                                        const CaseSplit& split, int c0) {
  if (split.kind != CaseKind::Case2)
    throw NotApplicable("the color hypergraph is built from gamma, which needs Case 2");
  std::vector<int> colors;  // union of the keys
  for (int idx : gamma_members) colors = set_union(colors, thetas[idx].key);
  DerivedHypergraph d;
  d.name = "hstar_c" + std::to_string(c0 + 1);
  std::map<int, int> color_index;
  for (int c : colors) {
    color_index[c] = static_cast<int>(d.vertex_names.size());
    d.vertex_names.push_back("c" + std::to_string(c + 1));
  }
  for (int idx : gamma_members) {
    std::vector<int> edge;
    for (int c : thetas[idx].key) edge.push_back(color_index[c]);
    std::sort(edge.begin(), edge.end());
    d.edges.push_back(std::move(edge));
    d.edge_sources.push_back({idx});
  }
  return d;
}

DerivedHypergraph gamma_hypergraph(const CaseSplit& split,
                                   const std::vector<ThetaClass>& thetas) {
  if (split.kind != CaseKind::Case2)
    throw NotApplicable("the gamma hypergraph needs at least two missing colors");

  std::vector<std::vector<int>> gamma_sets;
  for (int c0 : split.missing_colors) gamma_sets.push_back(gamma(thetas, split, c0));

  std::vector<int> used;  // theta indices appearing in some gamma set
  for (const auto& g : gamma_sets) used = set_union(used, g);

  DerivedHypergraph d;
  d.name = "hgamma";
  std::map<int, int> node_of;
  for (int idx : used) {
    node_of[idx] = static_cast<int>(d.vertex_names.size());
    // A theta class is identified by its color set; name the node after it.
    std::string name = "[";
    const auto& key = thetas[idx].key;
    for (std::size_t k = 0; k < key.size(); ++k) {
      if (k) name += ",";
      name += "c" + std::to_string(key[k] + 1);
    }
    name += "]";
    d.vertex_names.push_back(std::move(name));
  }

  for (std::size_t gi = 0; gi < gamma_sets.size(); ++gi) {
    std::vector<int> edge;
    for (int idx : gamma_sets[gi]) edge.push_back(node_of[idx]);
    std::sort(edge.begin(), edge.end());
    int color = split.missing_colors[gi];
    bool merged = false;
    for (std::size_t prev = 0; prev < d.edges.size(); ++prev)
      if (d.edges[prev] == edge) {
        d.edge_sources[prev].push_back(color);
        d.merged_duplicates = true;
        merged = true;
        break;
      }
    if (!merged) {
      d.edges.push_back(std::move(edge));
      d.edge_sources.push_back({color});
    }
  }
  return d;
}

}  // namespace hyperchrom
