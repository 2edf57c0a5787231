#include "parse_support.hpp"

#include <algorithm>

namespace arbor::detail {

LineMap::LineMap(std::string_view text) : text_(text) {
  line_starts_.push_back(0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\n') line_starts_.push_back(i + 1);
  }
}

SourcePos LineMap::at(std::size_t offset) const {
  offset = std::min(offset, text_.size());
  auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), offset);
  const auto line = static_cast<std::size_t>(it - line_starts_.begin());
  const std::size_t start = line_starts_[line - 1];
  int column = 1;
  for (std::size_t i = start; i < offset; ++i) {
    // Skip UTF-8 continuation bytes.
    if ((static_cast<unsigned char>(text_[i]) & 0xC0) != 0x80) ++column;
  }
  return {static_cast<int>(line), column};
}

std::size_t NodeTable::slot(const std::string& id, const SourceSpan& span) {
  auto [it, inserted] = index_.try_emplace(id, nodes_.size());
  if (inserted) {
    nodes_.push_back({id, id, NodeShape::unspecified, span});
    explicit_.push_back({});
  }
  return it->second;
}

void NodeTable::mention(const std::string& id, const SourceSpan& span) {
  slot(id, span);
}

void NodeTable::declare_label(const std::string& id, const std::string& label,
                              const SourceSpan& span) {
  const std::size_t i = slot(id, span);
  if (explicit_[i].label) {
    if (nodes_[i].label != label) {
      throw Error(ErrorCode::ConflictingDeclaration,
                  "node '" + id + "' redeclared with label '" + label +
                      "' (previously '" + nodes_[i].label + "')",
                  span.begin);
    }
    return;
  }
  nodes_[i].label = label;
  explicit_[i].label = true;
}

void NodeTable::declare_shape(const std::string& id, NodeShape shape,
                              const SourceSpan& span) {
  const std::size_t i = slot(id, span);
  if (explicit_[i].shape) {
    if (nodes_[i].shape != shape) {
      throw Error(ErrorCode::ConflictingDeclaration,
                  "node '" + id + "' redeclared with a different shape",
                  span.begin);
    }
    return;
  }
  nodes_[i].shape = shape;
  explicit_[i].shape = true;
}

bool is_blank(std::string_view text) {
  return std::all_of(text.begin(), text.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
           c == '\v';
  });
}

std::string_view trim(std::string_view text) {
  constexpr std::string_view ws = " \t\r\n\f\v";
  const auto b = text.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = text.find_last_not_of(ws);
  return text.substr(b, e - b + 1);
}

}  // namespace arbor::detail
