#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "arbor/ast.hpp"
#include "arbor/error.hpp"

namespace arbor::detail {

// Maps byte offsets in the source to 1-based line/column. Columns count
// code points, not bytes.
class LineMap {
 public:
  explicit LineMap(std::string_view text);

  SourcePos at(std::size_t offset) const;
  SourceSpan span(std::size_t begin, std::size_t end) const {
    return {at(begin), at(end)};
  }

 private:
  std::string_view text_;
  std::vector<std::size_t> line_starts_;
};

// Collects node declarations in first-mention order. A bare mention creates a
// provisional node whose label is its id; an explicit declaration may upgrade
// it once, and a second explicit declaration must agree with the first.
class NodeTable {
 public:
  void mention(const std::string& id, const SourceSpan& span);
  void declare_label(const std::string& id, const std::string& label,
                     const SourceSpan& span);
  void declare_shape(const std::string& id, NodeShape shape,
                     const SourceSpan& span);

  std::vector<AstNode> take() { return std::move(nodes_); }

 private:
  struct Flags {
    bool label = false;
    bool shape = false;
  };
  std::size_t slot(const std::string& id, const SourceSpan& span);

  std::vector<AstNode> nodes_;
  std::vector<Flags> explicit_;
  std::unordered_map<std::string, std::size_t> index_;
};

bool is_blank(std::string_view text);
std::string_view trim(std::string_view text);

}  // namespace arbor::detail
