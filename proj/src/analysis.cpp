#include "arbor/analysis.hpp"

#include <charconv>
#include <functional>

#include "arbor/error.hpp"

namespace arbor {

std::optional<std::int64_t> parse_integer(std::string_view text) {
  std::int64_t v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first == last) return std::nullopt;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return v;
}

namespace {

std::int64_t require_integer(const std::string& id, const std::string& value) {
  auto v = parse_integer(value);
  if (!v) {
    throw Error(ErrorCode::NonNumericValue,
                "value '" + value + "' of '" + id + "' is not an integer");
  }
  return *v;
}

}  // namespace

std::optional<std::size_t> find_value(const Array& array, std::string_view value) {
  for (const auto& e : array.elements) {
    if (e.value == value) return e.index;
  }
  return std::nullopt;
}

bool is_sorted_increasing(const Array& array) {
  std::vector<std::int64_t> values;
  values.reserve(array.elements.size());
  for (const auto& e : array.elements) values.push_back(require_integer(e.id, e.value));
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] < values[i - 1]) return false;
  }
  return true;
}

std::optional<TreeNode> child_of(const BinaryTree& tree, std::string_view node_id, Side side) {
  if (tree.find(node_id) == nullptr) {
    throw Error(ErrorCode::UnknownNode, "no node with id '" + std::string(node_id) + "'");
  }
  if (const TreeNode* c = tree.child(node_id, side)) return *c;
  return std::nullopt;
}

std::vector<TreeNode> leaves(const BinaryTree& tree) {
  std::vector<TreeNode> out;
  for (const TreeNode* n : tree.in_order()) {
    if (n->is_leaf) out.push_back(*n);
  }
  return out;
}

BstReport check_bst(const BinaryTree& tree) {
  for (const auto& n : tree.nodes) require_integer(n.id, n.value);

  struct Limit {
    std::int64_t value;
    std::string ancestor;
  };
  struct Frame {
    const TreeNode* node;
    std::optional<Limit> lower;
    std::optional<Limit> upper;
  };

  BstReport report;
  const TreeNode* root = tree.root();
  if (root == nullptr) return report;

  std::vector<Frame> level{{root, std::nullopt, std::nullopt}};
  while (!level.empty()) {
    std::vector<Frame> next;
    for (const auto& f : level) {
      const std::int64_t v = *parse_integer(f.node->value);
      if (f.lower && v <= f.lower->value) {
        report.violations.push_back({f.node->id, Bound::lower, f.lower->value, f.lower->ancestor});
      }
      if (f.upper && v >= f.upper->value) {
        report.violations.push_back({f.node->id, Bound::upper, f.upper->value, f.upper->ancestor});
      }
      // Keep the tightest bound. In an invalid tree the nearest ancestor is
      // not necessarily the tightest one.
      const Limit here{v, f.node->id};
      if (const TreeNode* l = tree.child(f.node->id, Side::left)) {
        const bool keep = f.upper && f.upper->value <= v;
        next.push_back({l, f.lower, keep ? f.upper : here});
      }
      if (const TreeNode* r = tree.child(f.node->id, Side::right)) {
        const bool keep = f.lower && f.lower->value >= v;
        next.push_back({r, keep ? f.lower : here, f.upper});
      }
    }
    level = std::move(next);
  }
  report.holds = report.violations.empty();
  return report;
}

std::string_view to_string(SearchDecision d) {
  switch (d) {
    case SearchDecision::go_left: return "go_left";
    case SearchDecision::go_right: return "go_right";
    case SearchDecision::found: return "found";
    case SearchDecision::dead_end: return "dead_end";
  }
  return "dead_end";
}

std::vector<SearchTraceStep> binary_search_trace(const BinaryTree& tree, std::int64_t target) {
  const TreeNode* cur = tree.root();
  if (cur == nullptr) throw Error(ErrorCode::EmptyTree, "tree has no nodes");
  for (const auto& n : tree.nodes) require_integer(n.id, n.value);

  std::vector<SearchTraceStep> trace;
  while (cur != nullptr) {
    const std::int64_t v = *parse_integer(cur->value);
    if (v == target) {
      trace.push_back({cur->id, cur->value, SearchDecision::found});
      break;
    }
    const Side side = target < v ? Side::left : Side::right;
    const TreeNode* next = tree.child(cur->id, side);
    if (next == nullptr) {
      trace.push_back({cur->id, cur->value, SearchDecision::dead_end});
      break;
    }
    trace.push_back(
        {cur->id, cur->value, side == Side::left ? SearchDecision::go_left : SearchDecision::go_right});
    cur = next;
  }
  return trace;
}

}  // namespace arbor
