#pragma once

#include <set>
#include <string>
#include <string_view>

#include "arbor/ir.hpp"

namespace arbor {

// Two presses of the same arrow within this window count as one
// right_right / left_left command. Consumed by the editor front end.
inline constexpr int kDoublePressWindowMs = 500;

struct NavigableDoc {
  std::string html;
  // JSON: {"nodes":[{id,value,depth,position,parent,left,right}],
  //        "initial_cursor":..,"initial_expanded":[..],"double_press_ms":500}
  // for trees; {"elements":[{id,value,index}],"initial_cursor":..} for arrays.
  std::string nav_model;
};

/// Arrays become a list whose items read "Index i, value v". Trees become a
/// WAI-ARIA tree (nested role=group lists) whose items read "v, left child",
/// "v, right child" or "v, root", with level / posinset / setsize set and
/// only the root expanded. The nav model is embedded in data-nav-model.
NavigableDoc emit_navigable(const Ir& ir);

enum class NavCommand { right_right, left_left, up, down };

std::string_view to_string(NavCommand cmd);

struct NavState {
  std::string cursor;
  std::set<std::string> expanded;

  friend bool operator==(const NavState&, const NavState&) = default;
};

/// Cursor on the root, root expanded when it has children.
NavState initial_state(const BinaryTree& tree);

/// Cursor names a node, every expanded id is an internal node, and every
/// ancestor of the cursor is expanded.
bool is_valid_state(const BinaryTree& tree, const NavState& state);

/// Keyboard semantics for the tree widget:
///   right_right  expand the cursor and move to its first child (left if both
///                exist); no-op on a leaf.
///   left_left    collapse the cursor and its siblings, move to the parent;
///                no-op at the root.
///   up / down    previous / next sibling, else previous / next node on the
///                same level anywhere in the tree (its ancestors get
///                expanded); no-op at the ends of the level.
NavState nav_step(const BinaryTree& tree, const NavState& state, NavCommand cmd);

}  // namespace arbor
