#include "arbor/describe.hpp"

namespace arbor {
namespace {

std::string count(std::size_t n, const char* singular, const char* plural) {
  return std::to_string(n) + " " + (n == 1 ? singular : plural);
}

}  // namespace

std::string describe(const Ir& ir) {
  if (const auto& d = meta_of(ir).description; d && !d->empty()) return *d;

  if (const auto* tree = std::get_if<BinaryTree>(&ir)) {
    std::string out = "This binary tree contains " + count(tree->nodes.size(), "node", "nodes") +
                      " and " + count(tree->edges.size(), "edge", "edges") + ".";
    if (const TreeNode* root = tree->root()) out += " The root node is " + root->value + ".";
    return out;
  }
  if (const auto* array = std::get_if<Array>(&ir)) {
    return "This array contains " + count(array->elements.size(), "element", "elements") + ".";
  }
  if (const auto* list = std::get_if<LinkedList>(&ir)) {
    return "This linked list contains " + count(list->nodes.size(), "node", "nodes") + ".";
  }
  const auto& grid = std::get<Grid>(ir);
  const std::size_t cols = grid.rows.empty() ? 0 : grid.rows.front().children.size();
  return "This two-dimensional array contains " + count(grid.rows.size(), "row", "rows") +
         " and " + count(cols, "column", "columns") + ".";
}

}  // namespace arbor
