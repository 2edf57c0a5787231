#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "arbor/source.hpp"

namespace arbor {

enum class Side { left, right };
enum class NodePosition { root, left, right };

std::string_view to_string(Side side);
std::string_view to_string(NodePosition pos);

inline NodePosition as_position(Side side) {
  return side == Side::left ? NodePosition::left : NodePosition::right;
}

struct TreeNode {
  std::string id;
  std::string value;
  int depth = 0;
  NodePosition position = NodePosition::root;
  bool is_leaf = true;

  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

struct TreeEdge {
  std::string parent;
  std::string child;
  Side position = Side::left;

  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

/// Binary tree IR. Nodes keep source declaration order, edges keep edge
/// declaration order. Lookups are linear; trees here are classroom-sized.
struct BinaryTree {
  Meta meta;
  std::vector<TreeNode> nodes;
  std::vector<TreeEdge> edges;

  const TreeNode* find(std::string_view id) const;
  const TreeNode* root() const;
  const TreeNode* parent(std::string_view id) const;
  const TreeNode* child(std::string_view id, Side side) const;

  /// Root first, then level by level, left before right.
  std::vector<const TreeNode*> breadth_first() const;
  /// Left subtree, node, right subtree.
  std::vector<const TreeNode*> in_order() const;
  /// Number of levels; 0 for an empty tree.
  int height() const;

  friend bool operator==(const BinaryTree&, const BinaryTree&) = default;
};

struct Element {
  std::string id;
  std::string value;
  std::size_t index = 0;

  friend bool operator==(const Element&, const Element&) = default;
};

struct Array {
  Meta meta;
  std::vector<Element> elements;

  friend bool operator==(const Array&, const Array&) = default;
};

struct ListNode {
  std::string id;
  std::string value;

  friend bool operator==(const ListNode&, const ListNode&) = default;
};

struct LinkedList {
  Meta meta;
  std::vector<ListNode> nodes;

  friend bool operator==(const LinkedList&, const LinkedList&) = default;
};

struct GridRow {
  // index is the column within the row.
  std::vector<Element> children;

  friend bool operator==(const GridRow&, const GridRow&) = default;
};

struct Grid {
  Meta meta;
  std::vector<GridRow> rows;

  friend bool operator==(const Grid&, const Grid&) = default;
};

using Ir = std::variant<BinaryTree, Array, LinkedList, Grid>;

Structure structure_of(const Ir& ir);
const Meta& meta_of(const Ir& ir);

}  // namespace arbor
