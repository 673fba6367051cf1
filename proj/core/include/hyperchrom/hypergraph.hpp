#ifndef HYPERCHROM_HYPERGRAPH_HPP
#define HYPERCHROM_HYPERGRAPH_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace hyperchrom {

/// Which structural invariant an input violated.
enum class ValidationFault {
  EmptyVertexList,
  DuplicateVertexLabel,
  UnknownLabel,
  RepeatedVertexInEdge,
  SizeOneEdge,
  DuplicateEdge,
  NonLinearPair,
  IsolatedVertex,
};

class ValidationError : public std::runtime_error {
 public:
  ValidationError(ValidationFault fault, std::string message, int a = -1, int b = -1)
      : std::runtime_error(std::move(message)), fault_(fault), first_(a), second_(b) {}

  ValidationFault fault() const { return fault_; }
  /// Offending edge indices for NonLinearPair / DuplicateEdge, else -1.
  int first_index() const { return first_; }
  int second_index() const { return second_; }

 private:
  ValidationFault fault_;
  int first_;
  int second_;
};

/// A validated linear loopless hypergraph: every edge has at least two
/// vertices, no two edges share more than one vertex, no duplicate edges,
/// and no vertex is isolated. Construction goes through validate(); once
/// built the object is immutable, so every algorithm here can assume the
/// invariants without re-checking.
class Hypergraph {
 public:
  static Hypergraph validate(std::string name,
                             std::vector<std::string> vertex_labels,
                             const std::vector<std::vector<std::string>>& edges_by_label);

  const std::string& name() const { return name_; }
  int vertex_count() const { return static_cast<int>(labels_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_[v]; }
  /// -1 when the label is not a vertex of this instance.
  int label_index(const std::string& label) const;

  /// Edge as a sorted vector of vertex indices.
  const std::vector<int>& edge(int e) const { return edges_[e]; }
  const std::vector<std::vector<int>>& edges() const { return edges_; }

  /// Indices of the edges containing v, ascending.
  const std::vector<int>& star(int v) const { return stars_[v]; }

  int degree(int v) const { return static_cast<int>(stars_[v].size()); }

  /// The unique edge through both u and v, or -1. (Uniqueness is what
  /// linearity buys us.)
  int edge_through(int u, int v) const;

  /// Edge membership in original input order but with vertex indices
  /// remapped through `relabel` (a permutation of 0..n-1). Used by tests
  /// to build isomorphic copies; the result is re-validated.
  Hypergraph relabeled(const std::vector<int>& relabel, const std::string& new_name) const;

 private:
  Hypergraph() = default;

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> edges_;
  std::vector<std::vector<int>> stars_;
};

struct Metrics {
  int delta = 0;     // max vertex degree
  int delta2 = 0;    // max two-section degree
  int rank = 0;      // largest edge size
  int antirank = 0;  // smallest edge size
  std::vector<int> degree;
  std::vector<int> degree2;  // deg2(v) = sum over edges at v of (|e|-1)
};

Metrics metrics(const Hypergraph& h);

/// Plain undirected graph on 0..n-1 with sorted adjacency lists.
struct SimpleGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;

  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  bool adjacent(int u, int v) const;
};

/// The two-section ("shadow") graph: vertices of h, an edge wherever two
/// vertices share a hyperedge.
SimpleGraph two_section(const Hypergraph& h);

struct SandwichCheck {
  long long lhs = 0;  // (antirank-1) * delta
  long long mid = 0;  // delta2
  long long rhs = 0;  // (rank-1) * delta
  bool holds = false;
};

/// (ar-1)*Delta <= Delta2 <= (r-1)*Delta, which pins the two-section degree
/// between the degree scaled by the extreme edge sizes.
SandwichCheck check_sandwich(const Hypergraph& h);

}  // namespace hyperchrom

#endif
