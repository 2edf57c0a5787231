#include "arbor/navigable.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "arbor/describe.hpp"
#include "arbor/error.hpp"
#include "arbor/html.hpp"
#include "json.hpp"

namespace arbor {
namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) {
  return j.dump(-1, ' ', false, Json::error_handler_t::replace);
}

std::string caption_of(const Ir& ir) {
  const Meta& meta = meta_of(ir);
  return meta.title && !meta.title->empty() ? *meta.title : describe(ir);
}

std::string accessible_name(const TreeNode& n) {
  if (n.position == NodePosition::root) return n.value + ", root";
  return n.value + ", " + std::string(to_string(n.position)) + " child";
}

Json tree_model(const BinaryTree& tree, const NavState& initial) {
  Json model;
  model["nodes"] = Json::array();
  auto id_or_null = [](const TreeNode* n) { return n ? Json(n->id) : Json(nullptr); };
  for (const TreeNode* n : tree.breadth_first()) {
    Json node;
    node["id"] = n->id;
    node["value"] = n->value;
    node["depth"] = n->depth;
    node["position"] = std::string(to_string(n->position));
    node["parent"] = id_or_null(tree.parent(n->id));
    node["left"] = id_or_null(tree.child(n->id, Side::left));
    node["right"] = id_or_null(tree.child(n->id, Side::right));
    model["nodes"].push_back(std::move(node));
  }
  model["initial_cursor"] = initial.cursor;
  model["initial_expanded"] = Json(initial.expanded);
  model["double_press_ms"] = kDoublePressWindowMs;
  return model;
}

class TreeWriter {
 public:
  TreeWriter(const BinaryTree& tree, const NavState& state) : tree_(tree), state_(state) {
    for (const TreeNode* n : tree.breadth_first()) order_.emplace(n->id, order_.size());
  }

  void item(const TreeNode& n, int posinset, int setsize, std::string& out) const {
    const bool internal = !n.is_leaf;
    const bool expanded = state_.expanded.contains(n.id);
    out += "<li role=\"treeitem\" id=\"arbor-node-" + std::to_string(order_.at(n.id)) +
           "\" data-id=\"" + html_escape(n.id) + "\" aria-level=\"" + std::to_string(n.depth + 1) +
           "\" aria-posinset=\"" + std::to_string(posinset) + "\" aria-setsize=\"" +
           std::to_string(setsize) + "\"";
    if (internal) out += expanded ? " aria-expanded=\"true\"" : " aria-expanded=\"false\"";
    out += " aria-label=\"" + html_escape(accessible_name(n)) + "\" tabindex=\"" +
           (n.id == state_.cursor ? "0" : "-1") + "\">";
    out += "<span class=\"arbor-node\" aria-hidden=\"true\">" + html_escape(n.value) + "</span>";
    if (internal) {
      std::vector<const TreeNode*> kids;
      for (Side s : {Side::left, Side::right}) {
        if (const TreeNode* c = tree_.child(n.id, s)) kids.push_back(c);
      }
      out += expanded ? "\n<ul role=\"group\">\n" : "\n<ul role=\"group\" hidden>\n";
      for (std::size_t i = 0; i < kids.size(); ++i) {
        item(*kids[i], static_cast<int>(i + 1), static_cast<int>(kids.size()), out);
      }
      out += "</ul>\n";
    }
    out += "</li>\n";
  }

 private:
  const BinaryTree& tree_;
  const NavState& state_;
  std::map<std::string, std::size_t> order_;
};

NavigableDoc emit_tree(const BinaryTree& tree, const Ir& ir) {
  if (tree.nodes.empty()) throw Error(ErrorCode::EmptyDiagram, "tree has no nodes");
  const NavState initial = initial_state(tree);
  NavigableDoc doc;
  doc.nav_model = dump(tree_model(tree, initial));

  std::string& h = doc.html;
  h += "<div class=\"arbor-navigable\" data-structure=\"binary_tree\" data-nav-model=\"" +
       html_escape(doc.nav_model) + "\">\n";
  h += "<ul role=\"tree\" class=\"arbor-tree\" aria-label=\"" + html_escape(caption_of(ir)) +
       "\">\n";
  TreeWriter(tree, initial).item(*tree.root(), 1, 1, h);
  h += "</ul>\n</div>\n";
  return doc;
}

NavigableDoc emit_array(const Array& array, const Ir& ir) {
  if (array.elements.empty()) throw Error(ErrorCode::EmptyDiagram, "array has no elements");
  Json model;
  model["elements"] = Json::array();
  for (const auto& e : array.elements) {
    Json el;
    el["id"] = e.id;
    el["value"] = e.value;
    el["index"] = e.index;
    model["elements"].push_back(std::move(el));
  }
  model["initial_cursor"] = array.elements.front().id;

  NavigableDoc doc;
  doc.nav_model = dump(model);
  std::string& h = doc.html;
  h += "<div class=\"arbor-navigable\" data-structure=\"array\" data-nav-model=\"" +
       html_escape(doc.nav_model) + "\">\n";
  h += "<ul role=\"list\" class=\"arbor-array\" aria-label=\"" + html_escape(caption_of(ir)) +
       "\">\n";
  for (const auto& e : array.elements) {
    const std::string idx = std::to_string(e.index);
    h += "<li role=\"listitem\" id=\"arbor-item-" + idx + "\" data-id=\"" + html_escape(e.id) +
         "\" aria-label=\"" + html_escape("Index " + idx + ", value " + e.value) +
         "\" tabindex=\"" + (e.index == 0 ? "0" : "-1") + "\">";
    h += "<span class=\"arbor-index\" aria-hidden=\"true\">" + idx + "</span>";
    h += "<span class=\"arbor-value\" aria-hidden=\"true\">" + html_escape(e.value) + "</span>";
    h += "</li>\n";
  }
  h += "</ul>\n</div>\n";
  return doc;
}

// Nodes on one level, left to right.
std::vector<std::string> level_of(const BinaryTree& tree, int depth) {
  std::vector<std::string> out;
  for (const TreeNode* n : tree.breadth_first()) {
    if (n->depth == depth) out.push_back(n->id);
  }
  return out;
}

void reveal(const BinaryTree& tree, const std::string& id, std::set<std::string>& expanded) {
  for (const TreeNode* p = tree.parent(id); p != nullptr; p = tree.parent(p->id)) {
    expanded.insert(p->id);
  }
}

NavState move_along_level(const BinaryTree& tree, const NavState& state, bool forward) {
  const TreeNode* cur = tree.find(state.cursor);
  const TreeNode* parent = tree.parent(state.cursor);

  std::string target;
  // Sibling under the same parent first.
  if (parent != nullptr) {
    const Side sibling_side = forward ? Side::right : Side::left;
    if (cur->position != as_position(sibling_side)) {
      if (const TreeNode* s = tree.child(parent->id, sibling_side)) target = s->id;
    }
  }
  if (target.empty()) {
    const auto level = level_of(tree, cur->depth);
    const auto it = std::find(level.begin(), level.end(), state.cursor);
    if (forward && it + 1 != level.end()) target = *(it + 1);
    if (!forward && it != level.begin()) target = *(it - 1);
  }
  if (target.empty()) return state;

  NavState next = state;
  next.cursor = target;
  reveal(tree, target, next.expanded);
  return next;
}

}  // namespace

std::string_view to_string(NavCommand cmd) {
  switch (cmd) {
    case NavCommand::right_right: return "right_right";
    case NavCommand::left_left: return "left_left";
    case NavCommand::up: return "up";
    case NavCommand::down: return "down";
  }
  return "up";
}

NavigableDoc emit_navigable(const Ir& ir) {
  if (const auto* tree = std::get_if<BinaryTree>(&ir)) return emit_tree(*tree, ir);
  if (const auto* array = std::get_if<Array>(&ir)) return emit_array(*array, ir);
  throw Error(ErrorCode::UnsupportedStructure,
              "no navigable output for " + std::string(to_string(structure_of(ir))));
}

NavState initial_state(const BinaryTree& tree) {
  NavState state;
  if (const TreeNode* root = tree.root()) {
    state.cursor = root->id;
    if (!root->is_leaf) state.expanded.insert(root->id);
  }
  return state;
}

bool is_valid_state(const BinaryTree& tree, const NavState& state) {
  if (tree.find(state.cursor) == nullptr) return false;
  for (const auto& id : state.expanded) {
    const TreeNode* n = tree.find(id);
    if (n == nullptr || n->is_leaf) return false;
  }
  for (const TreeNode* p = tree.parent(state.cursor); p != nullptr; p = tree.parent(p->id)) {
    if (!state.expanded.contains(p->id)) return false;
  }
  return true;
}

NavState nav_step(const BinaryTree& tree, const NavState& state, NavCommand cmd) {
  const TreeNode* cur = tree.find(state.cursor);
  if (cur == nullptr) return state;

  switch (cmd) {
    case NavCommand::right_right: {
      const TreeNode* first = tree.child(cur->id, Side::left);
      if (first == nullptr) first = tree.child(cur->id, Side::right);
      if (first == nullptr) return state;
      NavState next = state;
      next.expanded.insert(cur->id);
      next.cursor = first->id;
      return next;
    }
    case NavCommand::left_left: {
      const TreeNode* parent = tree.parent(cur->id);
      if (parent == nullptr) return state;
      NavState next = state;
      for (Side s : {Side::left, Side::right}) {
        if (const TreeNode* c = tree.child(parent->id, s)) next.expanded.erase(c->id);
      }
      next.cursor = parent->id;
      return next;
    }
    case NavCommand::up: return move_along_level(tree, state, false);
    case NavCommand::down: return move_along_level(tree, state, true);
  }
  return state;
}

}  // namespace arbor
