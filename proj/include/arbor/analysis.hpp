#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arbor/ir.hpp"

namespace arbor {

// Queries behind the classroom tasks: membership, sortedness, child lookup,
// leaf counting, BST checking and binary-search walkthroughs. Values are
// compared as integers; a label that is not an integer raises
// NonNumericValue instead of falling back to string order.

/// Parses a whole label as a base-10 integer.
std::optional<std::int64_t> parse_integer(std::string_view text);

std::optional<std::size_t> find_value(const Array& array, std::string_view value);

/// Non-strict: equal neighbours count as sorted.
bool is_sorted_increasing(const Array& array);

std::optional<TreeNode> child_of(const BinaryTree& tree, std::string_view node_id, Side side);

/// Leaves in left-to-right (in-order) order.
std::vector<TreeNode> leaves(const BinaryTree& tree);

enum class Bound { lower, upper };

struct BstViolation {
  std::string node_id;
  Bound bound_violated;
  std::int64_t bound_value;
  // Ancestor whose value induces the violated bound.
  std::string ancestor_id;

  friend bool operator==(const BstViolation&, const BstViolation&) = default;
};

struct BstReport {
  bool holds = true;
  std::vector<BstViolation> violations;  // breadth-first node order
};

/// Every node must lie strictly between the bounds induced by all of its
/// ancestors, not merely on the correct side of its parent.
BstReport check_bst(const BinaryTree& tree);

enum class SearchDecision { go_left, go_right, found, dead_end };

std::string_view to_string(SearchDecision d);

struct SearchTraceStep {
  std::string node_id;
  std::string value;
  SearchDecision decision;

  friend bool operator==(const SearchTraceStep&, const SearchTraceStep&) = default;
};

/// Walks from the root comparing against `target`, whether or not the tree is
/// a valid BST. The last step is `found` or `dead_end`.
std::vector<SearchTraceStep> binary_search_trace(const BinaryTree& tree, std::int64_t target);

}  // namespace arbor
