#ifndef HYPERCHROM_IO_HPP
#define HYPERCHROM_IO_HPP

#include <string>

#include "hyperchrom/hypergraph.hpp"
#include "hyperchrom/quotient.hpp"

namespace hyperchrom {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Instance document: {"name": str, "vertices": [label...], "edges":
/// [[label...]...]}. Unknown fields are ignored. Throws InputError with a
/// field diagnostic on malformed documents and ValidationError when the
/// described hypergraph breaks an invariant.
Hypergraph parse_instance(const std::string& text);

/// Canonical serialization: fixed field order, vertices and edges exactly
/// as stored, two-space indent, trailing newline. parse(serialize(h))
/// reproduces h exactly.
std::string serialize_instance(const Hypergraph& h);

/// Optional extra fields (e.g. a suggested pivot) appended to the canonical
/// document; parse_instance ignores them.
std::string serialize_instance_with_pivot(const Hypergraph& h, const std::string& pivot_label);

/// Two-section graph in DOT, deterministic edge order.
std::string two_section_dot(const Hypergraph& h);

/// Derived hypergraph in DOT as a bipartite incidence drawing: box nodes
/// for hyperedges, plain nodes for vertices.
std::string derived_dot(const DerivedHypergraph& d);

}  // namespace hyperchrom

#endif
