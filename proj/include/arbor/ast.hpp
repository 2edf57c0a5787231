#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arbor/error.hpp"

namespace arbor {

enum class NodeShape { circle, square, unspecified };

struct AstNode {
  std::string id;
  std::string label;
  NodeShape shape = NodeShape::unspecified;
  // Where the node was first mentioned.
  SourceSpan span;

  friend bool operator==(const AstNode&, const AstNode&) = default;
};

struct AstEdge {
  std::string from;
  std::string to;
  std::optional<std::string> label;
  // false for Mermaid `---` links; the compiler still reads them left to right.
  bool directed = true;
  SourceSpan span;

  friend bool operator==(const AstEdge&, const AstEdge&) = default;
};

/// Language-neutral parse result. Nodes are ordered by first mention, edges by
/// declaration; both orders are significant downstream.
struct DiagramAst {
  std::vector<AstNode> nodes;
  std::vector<AstEdge> edges;

  const AstNode* find(const std::string& id) const;
};

/// Field-for-field comparison that ignores source spans and edge
/// directedness, i.e. what the two front ends must agree on.
bool same_structure(const DiagramAst& a, const DiagramAst& b);

}  // namespace arbor
