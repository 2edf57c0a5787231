#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "arbor/navigable.hpp"
#include "support/trees.hpp"

namespace arbor::testing {

// Independent model of the keyboard semantics over the generator's arrays.
struct NavOracle {
  const Shape& s;
  std::vector<int> parent, depth;
  std::map<int, std::vector<int>> level;  // depth -> nodes in level order

  explicit NavOracle(const Shape& shape)
      : s(shape), parent(parents(shape)), depth(depths(shape)) {
    for (int v : bfs_order(shape)) level[depth[v]].push_back(v);
  }

  int id(const std::string& name) const { return std::stoi(name.substr(1)); }
  bool internal(int v) const { return s.left[v] >= 0 || s.right[v] >= 0; }

  NavState step(const NavState& st, NavCommand cmd) const {
    NavState out = st;
    const int c = id(st.cursor);
    switch (cmd) {
      case NavCommand::right_right: {
        if (!internal(c)) return st;
        out.expanded.insert(st.cursor);
        out.cursor = node_id(s.left[c] >= 0 ? s.left[c] : s.right[c]);
        return out;
      }
      case NavCommand::left_left: {
        const int p = parent[c];
        if (p < 0) return st;
        out.expanded.erase(node_id(s.left[p] >= 0 ? s.left[p] : c));
        if (s.right[p] >= 0) out.expanded.erase(node_id(s.right[p]));
        out.cursor = node_id(p);
        return out;
      }
      case NavCommand::up:
      case NavCommand::down: {
        const auto& row = level.at(depth[c]);
        const auto pos = std::find(row.begin(), row.end(), c) - row.begin();
        const auto next = pos + (cmd == NavCommand::up ? -1 : 1);
        if (next < 0 || next >= static_cast<long>(row.size())) return st;
        const int target = row[next];
        out.cursor = node_id(target);
        for (int a = parent[target]; a >= 0; a = parent[a]) out.expanded.insert(node_id(a));
        return out;
      }
    }
    return st;
  }

  bool valid(const NavState& st) const {
    const int c = id(st.cursor);
    if (c < 0 || c >= s.size()) return false;
    for (const auto& e : st.expanded) {
      if (!internal(id(e))) return false;
    }
    for (int a = parent[c]; a >= 0; a = parent[a]) {
      if (!st.expanded.count(node_id(a))) return false;
    }
    return true;
  }
};

}  // namespace arbor::testing
