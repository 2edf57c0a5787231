#include "arbor/compiler.hpp"

#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "arbor/parser.hpp"

namespace arbor {
namespace {

std::optional<Side> side_from_label(const std::optional<std::string>& label) {
  if (!label) return std::nullopt;
  const std::string& l = *label;
  if (l == "L" || l == "l" || l == "left" || l == "Left") return Side::left;
  if (l == "R" || l == "r" || l == "right" || l == "Right") return Side::right;
  return std::nullopt;
}

Side opposite(Side s) { return s == Side::left ? Side::right : Side::left; }

std::unordered_map<std::string, std::size_t> index_nodes(const DiagramAst& ast) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < ast.nodes.size(); ++i) index.emplace(ast.nodes[i].id, i);
  return index;
}

}  // namespace

BinaryTree compile_tree(const DiagramAst& ast, const Meta& meta) {
  if (ast.nodes.empty()) throw Error(ErrorCode::EmptyDiagram, "diagram has no nodes");
  const auto index = index_nodes(ast);
  const std::size_t n = ast.nodes.size();

  std::vector<std::vector<std::size_t>> children(n);  // edge indices
  std::vector<std::vector<std::size_t>> parents(n);
  for (std::size_t e = 0; e < ast.edges.size(); ++e) {
    const auto& edge = ast.edges[e];
    if (edge.from == edge.to) {
      throw Error(ErrorCode::NotATree, "node '" + edge.from + "' links to itself",
                  edge.span.begin);
    }
    children[index.at(edge.from)].push_back(e);
    parents[index.at(edge.to)].push_back(e);
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (children[i].size() > 2) {
      throw Error(ErrorCode::ArityExceeded,
                  "node '" + ast.nodes[i].id + "' has " + std::to_string(children[i].size()) +
                      " children; a binary tree allows at most 2",
                  ast.edges[children[i][2]].span.begin);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (parents[i].size() > 1) {
      throw Error(ErrorCode::NotATree,
                  "node '" + ast.nodes[i].id + "' has more than one parent",
                  ast.edges[parents[i][1]].span.begin);
    }
  }

  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < n; ++i) {
    if (parents[i].empty()) roots.push_back(i);
  }
  if (roots.empty()) {
    throw Error(ErrorCode::NotATree, "diagram has no root; the edges form a cycle",
                ast.nodes.front().span.begin);
  }
  if (roots.size() > 1) {
    throw Error(ErrorCode::NotATree,
                "diagram has more than one root ('" + ast.nodes[roots[0]].id + "' and '" +
                    ast.nodes[roots[1]].id + "'); it must be a single connected tree",
                ast.nodes[roots[1]].span.begin);
  }

  // Child sides, keyed by edge index.
  std::vector<Side> side(ast.edges.size(), Side::left);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& ce = children[i];
    if (ce.size() == 1) {
      side[ce[0]] = side_from_label(ast.edges[ce[0]].label).value_or(Side::left);
    } else if (ce.size() == 2) {
      const auto a = side_from_label(ast.edges[ce[0]].label);
      const auto b = side_from_label(ast.edges[ce[1]].label);
      if (a && b && *a == *b) {
        throw Error(ErrorCode::PositionConflict,
                    "node '" + ast.nodes[i].id + "' has two " + std::string(to_string(*a)) +
                        " children",
                    ast.edges[ce[1]].span.begin);
      }
      if (a) {
        side[ce[0]] = *a;
        side[ce[1]] = opposite(*a);
      } else if (b) {
        side[ce[0]] = opposite(*b);
        side[ce[1]] = *b;
      } else {
        side[ce[0]] = Side::left;
        side[ce[1]] = Side::right;
      }
    }
  }

  std::vector<int> depth(n, -1);
  std::vector<NodePosition> position(n, NodePosition::root);
  depth[roots[0]] = 0;
  std::deque<std::size_t> queue{roots[0]};
  std::size_t reached = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    ++reached;
    for (std::size_t e : children[u]) {
      const std::size_t v = index.at(ast.edges[e].to);
      depth[v] = depth[u] + 1;
      position[v] = as_position(side[e]);
      queue.push_back(v);
    }
  }
  if (reached != n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (depth[i] < 0) {
        throw Error(ErrorCode::NotATree,
                    "node '" + ast.nodes[i].id + "' is not connected to the root (cycle)",
                    ast.nodes[i].span.begin);
      }
    }
  }

  BinaryTree tree;
  tree.meta = meta;
  tree.nodes.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    tree.nodes.push_back(
        {ast.nodes[i].id, ast.nodes[i].label, depth[i], position[i], children[i].empty()});
  }
  tree.edges.reserve(ast.edges.size());
  for (std::size_t e = 0; e < ast.edges.size(); ++e) {
    tree.edges.push_back({ast.edges[e].from, ast.edges[e].to, side[e]});
  }
  return tree;
}

Array compile_array(const DiagramAst& ast, const Meta& meta) {
  if (ast.nodes.empty()) throw Error(ErrorCode::EmptyDiagram, "diagram has no elements");
  for (const auto& node : ast.nodes) {
    if (node.shape == NodeShape::circle) {
      throw Error(ErrorCode::StructureMismatch,
                  "array element '" + node.id + "' is drawn as a circle; use [value]",
                  node.span.begin);
    }
  }
  const auto index = index_nodes(ast);
  const std::size_t n = ast.nodes.size();
  std::vector<std::optional<std::size_t>> next(n);
  std::vector<int> indegree(n, 0);
  for (const auto& edge : ast.edges) {
    const std::size_t from = index.at(edge.from);
    const std::size_t to = index.at(edge.to);
    if (from == to || next[from] || indegree[to] > 0) {
      throw Error(ErrorCode::NotAChain,
                  "array links must form a single chain; '" + edge.from + "' -> '" + edge.to +
                      "' branches or loops",
                  edge.span.begin);
    }
    next[from] = to;
    ++indegree[to];
  }

  std::optional<std::size_t> head;
  for (std::size_t i = 0; i < n; ++i) {
    if (indegree[i] == 0) {
      if (head) {
        throw Error(ErrorCode::NotAChain,
                    "array has more than one first element ('" + ast.nodes[*head].id +
                        "' and '" + ast.nodes[i].id + "')",
                    ast.nodes[i].span.begin);
      }
      head = i;
    }
  }
  if (!head) {
    throw Error(ErrorCode::NotAChain, "array links form a cycle", ast.nodes.front().span.begin);
  }

  Array array;
  array.meta = meta;
  std::optional<std::size_t> cur = head;
  while (cur && array.elements.size() < n) {
    array.elements.push_back({ast.nodes[*cur].id, ast.nodes[*cur].label, array.elements.size()});
    cur = next[*cur];
  }
  if (array.elements.size() != n) {
    throw Error(ErrorCode::NotAChain, "array links form a cycle", ast.nodes.front().span.begin);
  }
  return array;
}

Ir compile(const DiagramAst& ast, Structure structure, const Meta& meta) {
  switch (structure) {
    case Structure::binary_tree: return compile_tree(ast, meta);
    case Structure::array: return compile_array(ast, meta);
    case Structure::linked_list:
    case Structure::two_d_array:
      break;
  }
  throw Error(ErrorCode::UnsupportedStructure,
              std::string(to_string(structure)) + " cannot be compiled from diagram source");
}

Ir compile_source(const SourceSpec& spec) {
  return compile(parse(spec), spec.structure, spec.meta);
}

}  // namespace arbor
