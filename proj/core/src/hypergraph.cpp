#include "hyperchrom/hypergraph.hpp"

#include <algorithm>
#include <map>

#include "hyperchrom/setops.hpp"

namespace hyperchrom {

Hypergraph Hypergraph::validate(std::string name,
                                std::vector<std::string> vertex_labels,
                                const std::vector<std::vector<std::string>>& edges_by_label) {
  if (vertex_labels.empty())
    throw ValidationError(ValidationFault::EmptyVertexList, "instance has no vertices");

  std::map<std::string, int> index_of;
  for (std::size_t i = 0; i < vertex_labels.size(); ++i) {
    auto [it, fresh] = index_of.emplace(vertex_labels[i], static_cast<int>(i));
    if (!fresh)
      throw ValidationError(ValidationFault::DuplicateVertexLabel,
                            "duplicate vertex label '" + vertex_labels[i] + "'");
  }

  Hypergraph h;
  h.name_ = std::move(name);
  h.labels_ = std::move(vertex_labels);
  h.edges_.reserve(edges_by_label.size());

  for (std::size_t e = 0; e < edges_by_label.size(); ++e) {
    std::vector<int> members;
    members.reserve(edges_by_label[e].size());
    for (const auto& label : edges_by_label[e]) {
      auto it = index_of.find(label);
      if (it == index_of.end())
        throw ValidationError(ValidationFault::UnknownLabel,
                              "edge " + std::to_string(e) + " uses unknown label '" + label + "'");
      members.push_back(it->second);
    }
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
      throw ValidationError(ValidationFault::RepeatedVertexInEdge,
                            "edge " + std::to_string(e) + " lists a vertex twice");
    if (members.size() < 2)
      throw ValidationError(ValidationFault::SizeOneEdge,
                            "edge " + std::to_string(e) + " has fewer than two vertices",
                            static_cast<int>(e));
    h.edges_.push_back(std::move(members));
  }

  for (int i = 0; i < h.edge_count(); ++i) {
    for (int j = i + 1; j < h.edge_count(); ++j) {
      int common = intersection_size(h.edges_[i], h.edges_[j]);
      if (h.edges_[i] == h.edges_[j])
        throw ValidationError(ValidationFault::DuplicateEdge,
                              "edges " + std::to_string(i) + " and " + std::to_string(j) +
                                  " are identical",
                              i, j);
      if (common > 1)
        throw ValidationError(ValidationFault::NonLinearPair,
                              "edges " + std::to_string(i) + " and " + std::to_string(j) +
                                  " share " + std::to_string(common) + " vertices",
                              i, j);
    }
  }

  h.stars_.assign(h.vertex_count(), {});
  for (int e = 0; e < h.edge_count(); ++e)
    for (int v : h.edges_[e]) h.stars_[v].push_back(e);

  for (int v = 0; v < h.vertex_count(); ++v)
    if (h.stars_[v].empty())
      throw ValidationError(ValidationFault::IsolatedVertex,
                            "vertex '" + h.labels_[v] + "' lies on no edge");

  return h;
}

int Hypergraph::label_index(const std::string& label) const {
  for (int v = 0; v < vertex_count(); ++v)
    if (labels_[v] == label) return v;
  return -1;
}

int Hypergraph::edge_through(int u, int v) const {
  const auto& su = stars_[u];
  const auto& sv = stars_[v];
  std::size_t i = 0, j = 0;
  while (i < su.size() && j < sv.size()) {
    if (su[i] < sv[j]) ++i;
    else if (su[i] > sv[j]) ++j;
    else return su[i];
  }
  return -1;
}

Hypergraph Hypergraph::relabeled(const std::vector<int>& relabel,
                                 const std::string& new_name) const {
  std::vector<std::string> new_labels(labels_.size());
  for (int v = 0; v < vertex_count(); ++v) new_labels[relabel[v]] = labels_[v];
  std::vector<std::vector<std::string>> new_edges;
  new_edges.reserve(edges_.size());
  for (const auto& e : edges_) {
    std::vector<std::string> edge;
    edge.reserve(e.size());
    for (int v : e) edge.push_back(new_labels[relabel[v]]);
    new_edges.push_back(std::move(edge));
  }
  return validate(new_name, std::move(new_labels), new_edges);
}

Metrics metrics(const Hypergraph& h) {
  Metrics m;
  m.degree.resize(h.vertex_count());
  m.degree2.resize(h.vertex_count());
  m.rank = 0;
  m.antirank = h.vertex_count() + 1;
  for (const auto& e : h.edges()) {
    m.rank = std::max(m.rank, static_cast<int>(e.size()));
    m.antirank = std::min(m.antirank, static_cast<int>(e.size()));
  }
  for (int v = 0; v < h.vertex_count(); ++v) {
    m.degree[v] = h.degree(v);
    int d2 = 0;
    // Linearity makes the incident edges pairwise disjoint away from v, so
    // the two-section degree is exactly the sum of (|e|-1).
    for (int e : h.star(v)) d2 += static_cast<int>(h.edge(e).size()) - 1;
    m.degree2[v] = d2;
    m.delta = std::max(m.delta, m.degree[v]);
    m.delta2 = std::max(m.delta2, d2);
  }
  return m;
}

bool SimpleGraph::adjacent(int u, int v) const {
  return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

SimpleGraph two_section(const Hypergraph& h) {
  SimpleGraph g;
  g.n = h.vertex_count();
  g.adj.assign(g.n, {});
  for (const auto& e : h.edges())
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j) {
        g.adj[e[i]].push_back(e[j]);
        g.adj[e[j]].push_back(e[i]);
      }
  for (auto& row : g.adj) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return g;
}

SandwichCheck check_sandwich(const Hypergraph& h) {
  Metrics m = metrics(h);
  SandwichCheck s;
  s.lhs = static_cast<long long>(m.antirank - 1) * m.delta;
  s.mid = m.delta2;
  s.rhs = static_cast<long long>(m.rank - 1) * m.delta;
  s.holds = s.lhs <= s.mid && s.mid <= s.rhs;
  return s;
}

}  // namespace hyperchrom
