#pragma once

#include <string>
#include <vector>

#include "arbor/ir.hpp"

namespace arbor {

inline constexpr const char* kAbsentCell = "None";

struct TabularDoc {
  std::string html;
  std::string csv;
  std::vector<std::string> column_names;
  // Cell text per row, unescaped; row_ids[i] is the IR id behind rows[i].
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row_ids;
};

/// Arrays: Index, Value in index order.
/// Trees: Value, Parent, Position, Left Child, Right Child in breadth-first
/// order; missing relatives read "None".
/// Throws UnsupportedStructure for linked lists and 2D arrays.
TabularDoc emit_table(const Ir& ir);

}  // namespace arbor
