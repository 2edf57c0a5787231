#include "arbor/validate.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

namespace arbor {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::DuplicateId: return "DuplicateId";
    case ViolationKind::UnknownEndpoint: return "UnknownEndpoint";
    case ViolationKind::SelfLoop: return "SelfLoop";
    case ViolationKind::MultipleParents: return "MultipleParents";
    case ViolationKind::ArityExceeded: return "ArityExceeded";
    case ViolationKind::DuplicatePosition: return "DuplicatePosition";
    case ViolationKind::Cycle: return "Cycle";
    case ViolationKind::MultipleRoots: return "MultipleRoots";
    case ViolationKind::DepthMismatch: return "DepthMismatch";
    case ViolationKind::PositionMismatch: return "PositionMismatch";
    case ViolationKind::LeafFlagMismatch: return "LeafFlagMismatch";
    case ViolationKind::IndexMismatch: return "IndexMismatch";
    case ViolationKind::RaggedRows: return "RaggedRows";
  }
  return "Unknown";
}

namespace {

template <typename Range, typename IdOf>
void check_unique_ids(const Range& items, IdOf id_of, std::vector<Violation>& out) {
  std::map<std::string, int> seen;
  for (const auto& item : items) ++seen[id_of(item)];
  for (const auto& [id, count] : seen) {
    if (count > 1) {
      out.push_back({ViolationKind::DuplicateId, {id},
                     "id '" + id + "' appears " + std::to_string(count) + " times"});
    }
  }
}

std::vector<Violation> validate_tree(const BinaryTree& tree) {
  std::vector<Violation> out;
  check_unique_ids(tree.nodes, [](const TreeNode& n) { return n.id; }, out);
  if (!out.empty()) return out;

  std::set<std::string> ids;
  for (const auto& n : tree.nodes) ids.insert(n.id);

  std::map<std::string, std::vector<const TreeEdge*>> by_parent;
  std::map<std::string, std::vector<const TreeEdge*>> by_child;
  for (const auto& e : tree.edges) {
    if (!ids.contains(e.parent) || !ids.contains(e.child)) {
      std::vector<std::string> missing;
      if (!ids.contains(e.parent)) missing.push_back(e.parent);
      if (!ids.contains(e.child) && e.child != e.parent) missing.push_back(e.child);
      std::sort(missing.begin(), missing.end());
      out.push_back({ViolationKind::UnknownEndpoint, missing,
                     "edge " + e.parent + " -> " + e.child + " references an unknown node"});
      continue;
    }
    if (e.parent == e.child) {
      out.push_back({ViolationKind::SelfLoop, {e.parent}, "node '" + e.parent + "' is its own child"});
      continue;
    }
    by_parent[e.parent].push_back(&e);
    by_child[e.child].push_back(&e);
  }
  for (const auto& [child, edges] : by_child) {
    if (edges.size() > 1) {
      out.push_back({ViolationKind::MultipleParents, {child},
                     "node '" + child + "' has " + std::to_string(edges.size()) + " parents"});
    }
  }
  for (const auto& [parent, edges] : by_parent) {
    if (edges.size() > 2) {
      out.push_back({ViolationKind::ArityExceeded, {parent},
                     "node '" + parent + "' has " + std::to_string(edges.size()) + " children"});
    }
    std::map<Side, int> sides;
    for (const auto* e : edges) ++sides[e->position];
    for (const auto& [side, count] : sides) {
      if (count > 1) {
        out.push_back({ViolationKind::DuplicatePosition, {parent},
                       "node '" + parent + "' has " + std::to_string(count) + " " +
                           std::string(to_string(side)) + " children"});
      }
    }
  }
  if (!out.empty()) return out;

  // Every node has at most one parent now, so cycles are found by walking
  // parent pointers.
  std::unordered_map<std::string, std::string> parent_of;
  for (const auto& e : tree.edges) parent_of[e.child] = e.parent;
  std::set<std::string> on_cycle;
  for (const auto& n : tree.nodes) {
    if (on_cycle.contains(n.id)) continue;
    std::vector<std::string> path;
    std::set<std::string> seen;
    std::string cur = n.id;
    while (true) {
      if (seen.contains(cur)) {
        auto start = std::find(path.begin(), path.end(), cur);
        std::vector<std::string> cycle(start, path.end());
        if (!on_cycle.contains(cycle.front())) {
          on_cycle.insert(cycle.begin(), cycle.end());
          std::sort(cycle.begin(), cycle.end());
          std::string listed;
          for (const auto& id : cycle) listed += (listed.empty() ? "" : ", ") + id;
          out.push_back({ViolationKind::Cycle, cycle, "edges form a cycle through " + listed});
        }
        break;
      }
      seen.insert(cur);
      path.push_back(cur);
      auto it = parent_of.find(cur);
      if (it == parent_of.end()) break;
      cur = it->second;
    }
  }
  if (!out.empty()) return out;

  std::vector<std::string> roots;
  for (const auto& n : tree.nodes) {
    if (!parent_of.contains(n.id)) roots.push_back(n.id);
  }
  if (roots.size() > 1) {
    std::sort(roots.begin(), roots.end());
    out.push_back({ViolationKind::MultipleRoots, roots, "tree is disconnected: several roots"});
    return out;
  }
  if (roots.empty()) return out;

  std::unordered_map<std::string, int> depth{{roots.front(), 0}};
  std::unordered_map<std::string, NodePosition> position{{roots.front(), NodePosition::root}};
  std::deque<std::string> queue{roots.front()};
  while (!queue.empty()) {
    const std::string u = queue.front();
    queue.pop_front();
    for (const auto* e : by_parent[u]) {
      depth[e->child] = depth[u] + 1;
      position[e->child] = as_position(e->position);
      queue.push_back(e->child);
    }
  }
  for (const auto& n : tree.nodes) {
    if (n.depth != depth.at(n.id)) {
      out.push_back({ViolationKind::DepthMismatch, {n.id},
                     "node '" + n.id + "' has depth " + std::to_string(n.depth) + ", expected " +
                         std::to_string(depth.at(n.id))});
    }
    if (n.position != position.at(n.id)) {
      out.push_back({ViolationKind::PositionMismatch, {n.id},
                     "node '" + n.id + "' is marked " + std::string(to_string(n.position)) +
                         ", expected " + std::string(to_string(position.at(n.id)))});
    }
    const bool leaf = by_parent[n.id].empty();
    if (n.is_leaf != leaf) {
      out.push_back({ViolationKind::LeafFlagMismatch, {n.id},
                     "node '" + n.id + "' leaf flag disagrees with its edges"});
    }
  }
  return out;
}

void check_indices(const std::vector<Element>& elements, std::vector<Violation>& out) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i].index != i) {
      out.push_back({ViolationKind::IndexMismatch, {elements[i].id},
                     "element '" + elements[i].id + "' has index " +
                         std::to_string(elements[i].index) + " at position " + std::to_string(i)});
    }
  }
}

std::vector<Violation> validate_array(const Array& array) {
  std::vector<Violation> out;
  check_unique_ids(array.elements, [](const Element& e) { return e.id; }, out);
  check_indices(array.elements, out);
  return out;
}

std::vector<Violation> validate_list(const LinkedList& list) {
  std::vector<Violation> out;
  check_unique_ids(list.nodes, [](const ListNode& n) { return n.id; }, out);
  return out;
}

std::vector<Violation> validate_grid(const Grid& grid) {
  std::vector<Violation> out;
  std::vector<Element> all;
  for (const auto& row : grid.rows) all.insert(all.end(), row.children.begin(), row.children.end());
  check_unique_ids(all, [](const Element& e) { return e.id; }, out);
  if (!grid.rows.empty()) {
    const std::size_t width = grid.rows.front().children.size();
    const bool ragged = std::any_of(grid.rows.begin(), grid.rows.end(),
                                    [&](const GridRow& r) { return r.children.size() != width; });
    if (ragged) {
      std::string lengths;
      for (const auto& r : grid.rows) {
        lengths += (lengths.empty() ? "" : ", ") + std::to_string(r.children.size());
      }
      out.push_back({ViolationKind::RaggedRows, {}, "rows have unequal lengths: " + lengths});
    }
  }
  for (const auto& row : grid.rows) check_indices(row.children, out);
  return out;
}

std::string summarize(const std::vector<Violation>& violations) {
  std::string msg = "IR violates " + std::to_string(violations.size()) + " invariant(s): ";
  for (std::size_t i = 0; i < violations.size(); ++i) {
    msg += (i ? "; " : "") + std::string(to_string(violations[i].kind)) + " (" +
           violations[i].message + ")";
  }
  return msg;
}

}  // namespace

IrViolationError::IrViolationError(std::vector<Violation> violations)
    : Error(ErrorCode::IrViolation, summarize(violations)), violations_(std::move(violations)) {}

std::vector<Violation> validate_ir(const Ir& ir) {
  struct Visitor {
    std::vector<Violation> operator()(const BinaryTree& t) const { return validate_tree(t); }
    std::vector<Violation> operator()(const Array& a) const { return validate_array(a); }
    std::vector<Violation> operator()(const LinkedList& l) const { return validate_list(l); }
    std::vector<Violation> operator()(const Grid& g) const { return validate_grid(g); }
  };
  return std::visit(Visitor{}, ir);
}

}  // namespace arbor
