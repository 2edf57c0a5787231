#include "arbor/source.hpp"

#include "arbor/ast.hpp"

namespace arbor {

std::string_view to_string(Language lang) {
  return lang == Language::mermaid ? "mermaid" : "dot";
}

std::string_view to_string(Structure structure) {
  switch (structure) {
    case Structure::array: return "array";
    case Structure::binary_tree: return "binary_tree";
    case Structure::linked_list: return "linked_list";
    case Structure::two_d_array: return "2d_array";
  }
  return "unknown";
}

std::optional<Language> parse_language(std::string_view text) {
  if (text == "mermaid") return Language::mermaid;
  if (text == "dot") return Language::dot;
  return std::nullopt;
}

std::optional<Structure> parse_structure(std::string_view text) {
  if (text == "array") return Structure::array;
  if (text == "binary_tree" || text == "binary-tree") return Structure::binary_tree;
  if (text == "linked_list" || text == "linked-list") return Structure::linked_list;
  if (text == "2d_array" || text == "2d-array") return Structure::two_d_array;
  return std::nullopt;
}

const AstNode* DiagramAst::find(const std::string& id) const {
  for (const auto& n : nodes) {
    if (n.id == id) return &n;
  }
  return nullptr;
}

bool same_structure(const DiagramAst& a, const DiagramAst& b) {
  if (a.nodes.size() != b.nodes.size() || a.edges.size() != b.edges.size()) return false;
  for (std::size_t i = 0; i < a.nodes.size(); ++i) {
    const auto& x = a.nodes[i];
    const auto& y = b.nodes[i];
    if (x.id != y.id || x.label != y.label) return false;
  }
  for (std::size_t i = 0; i < a.edges.size(); ++i) {
    const auto& x = a.edges[i];
    const auto& y = b.edges[i];
    if (x.from != y.from || x.to != y.to || x.label != y.label) return false;
  }
  return true;
}

}  // namespace arbor
