#include "hyperchrom/io.hpp"

#include <sstream>

#include "json.hpp"

namespace hyperchrom {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> string_array(const nlohmann::json& node, const std::string& where) {
  if (!node.is_array()) {
    throw InputError(where + " must be an array of strings");
  }
  std::vector<std::string> out;
  out.reserve(node.size());
  for (const auto& item : node) {
    if (!item.is_string()) {
      throw InputError(where + " must contain only strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

/// DOT identifiers are quoted, so only '"' and '\' need escaping.
std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

Hypergraph parse_instance(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw InputError("instance document must be a JSON object");
  }
  if (!doc.contains("name") || !doc["name"].is_string()) {
    throw InputError("field \"name\" must be a string");
  }
  if (!doc.contains("vertices")) {
    throw InputError("field \"vertices\" is required");
  }
  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    throw InputError("field \"edges\" must be an array of label arrays");
  }
  const auto vertices = string_array(doc["vertices"], "field \"vertices\"");
  std::vector<std::vector<std::string>> edges;
  edges.reserve(doc["edges"].size());
  int index = 0;
  for (const auto& edge : doc["edges"]) {
    edges.push_back(string_array(edge, "edge #" + std::to_string(index)));
    ++index;
  }
  return Hypergraph::validate(doc["name"].get<std::string>(), vertices, edges);
}

namespace {

ordered_json instance_document(const Hypergraph& h) {
  ordered_json doc;
  doc["name"] = h.name();
  doc["vertices"] = h.labels();
  ordered_json edges = ordered_json::array();
  for (int e = 0; e < h.edge_count(); ++e) {
    ordered_json labels = ordered_json::array();
    for (int v : h.edge(e)) {
      labels.push_back(h.label(v));
    }
    edges.push_back(std::move(labels));
  }
  doc["edges"] = std::move(edges);
  return doc;
}

}  // namespace

std::string serialize_instance(const Hypergraph& h) {
  return instance_document(h).dump(2) + "\n";
}

std::string serialize_instance_with_pivot(const Hypergraph& h, const std::string& pivot_label) {
  ordered_json doc = instance_document(h);
  doc["suggested_pivot"] = pivot_label;
  return doc.dump(2) + "\n";
}

std::string two_section_dot(const Hypergraph& h) {
  const SimpleGraph g = two_section(h);
  std::ostringstream out;
  out << "graph " << dot_quote(h.name() + ".2sec") << " {\n";
  for (int v = 0; v < g.n; ++v) {
    out << "  " << dot_quote(h.label(v)) << ";\n";
  }
  for (int u = 0; u < g.n; ++u) {
    for (int v : g.adj[u]) {
      if (u < v) {
        out << "  " << dot_quote(h.label(u)) << " -- " << dot_quote(h.label(v)) << ";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

std::string derived_dot(const DerivedHypergraph& d) {
  std::ostringstream out;
  out << "graph " << dot_quote(d.name) << " {\n";
  for (const auto& name : d.vertex_names) {
    out << "  " << dot_quote(name) << ";\n";
  }
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    const std::string box = "e" + std::to_string(e);
    std::string label;
    for (int c : d.edge_sources[e]) {
      if (!label.empty()) {
        label += ',';
      }
      label += 'c';
      label += std::to_string(c + 1);
    }
    out << "  " << dot_quote(box) << " [shape=box,label=" << dot_quote(label) << "];\n";
    for (int v : d.edges[e]) {
      out << "  " << dot_quote(box) << " -- " << dot_quote(d.vertex_names[v]) << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace hyperchrom
