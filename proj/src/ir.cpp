#include "arbor/ir.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace arbor {

std::string_view to_string(Side side) { return side == Side::left ? "left" : "right"; }

std::string_view to_string(NodePosition pos) {
  switch (pos) {
    case NodePosition::root: return "root";
    case NodePosition::left: return "left";
    case NodePosition::right: return "right";
  }
  return "root";
}

const TreeNode* BinaryTree::find(std::string_view id) const {
  for (const auto& n : nodes) {
    if (n.id == id) return &n;
  }
  return nullptr;
}

const TreeNode* BinaryTree::root() const {
  for (const auto& n : nodes) {
    const bool has_parent =
        std::any_of(edges.begin(), edges.end(), [&](const TreeEdge& e) { return e.child == n.id; });
    if (!has_parent) return &n;
  }
  return nullptr;
}

const TreeNode* BinaryTree::parent(std::string_view id) const {
  for (const auto& e : edges) {
    if (e.child == id) return find(e.parent);
  }
  return nullptr;
}

const TreeNode* BinaryTree::child(std::string_view id, Side side) const {
  for (const auto& e : edges) {
    if (e.parent == id && e.position == side) return find(e.child);
  }
  return nullptr;
}

std::vector<const TreeNode*> BinaryTree::breadth_first() const {
  std::vector<const TreeNode*> out;
  const TreeNode* r = root();
  if (r == nullptr) return out;
  std::deque<const TreeNode*> queue{r};
  while (!queue.empty()) {
    const TreeNode* n = queue.front();
    queue.pop_front();
    out.push_back(n);
    for (Side s : {Side::left, Side::right}) {
      if (const TreeNode* c = child(n->id, s)) queue.push_back(c);
    }
  }
  return out;
}

std::vector<const TreeNode*> BinaryTree::in_order() const {
  std::vector<const TreeNode*> out;
  std::function<void(const TreeNode*)> walk = [&](const TreeNode* n) {
    if (n == nullptr) return;
    walk(child(n->id, Side::left));
    out.push_back(n);
    walk(child(n->id, Side::right));
  };
  walk(root());
  return out;
}

int BinaryTree::height() const {
  int h = 0;
  for (const auto& n : nodes) h = std::max(h, n.depth + 1);
  return h;
}

Structure structure_of(const Ir& ir) {
  struct Visitor {
    Structure operator()(const BinaryTree&) const { return Structure::binary_tree; }
    Structure operator()(const Array&) const { return Structure::array; }
    Structure operator()(const LinkedList&) const { return Structure::linked_list; }
    Structure operator()(const Grid&) const { return Structure::two_d_array; }
  };
  return std::visit(Visitor{}, ir);
}

const Meta& meta_of(const Ir& ir) {
  return std::visit([](const auto& v) -> const Meta& { return v.meta; }, ir);
}

}  // namespace arbor
