#include <array>
#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arbor/parser.hpp"
#include "parse_support.hpp"

namespace arbor {
namespace {

using detail::LineMap;
using detail::NodeTable;

constexpr std::array<std::string_view, 10> kUnsupportedKeywords = {
    "subgraph", "end",   "style",     "classDef", "class",
    "linkStyle", "click", "direction", "accTitle", "accDescr"};

bool is_id_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct Statement {
  std::size_t begin;
  std::size_t end;
};

class MermaidParser {
 public:
  explicit MermaidParser(std::string_view src) : src_(src), lines_(src) {}

  DiagramAst run() {
    const auto statements = split();
    if (statements.empty()) {
      fail(ErrorCode::SyntaxError, "missing 'flowchart' header", 0);
    }
    header(statements.front());
    for (std::size_t i = 1; i < statements.size(); ++i) body(statements[i]);
    return {nodes_.take(), std::move(edges_)};
  }

 private:
  [[noreturn]] void fail(ErrorCode code, const std::string& message,
                         std::size_t at) const {
    throw Error(code, message, lines_.at(at));
  }

  // Splits on newlines and on `;` outside of labels. `%%` lines are comments.
  std::vector<Statement> split() const {
    std::vector<Statement> out;
    std::size_t line_begin = 0;
    while (line_begin <= src_.size()) {
      std::size_t line_end = src_.find('\n', line_begin);
      if (line_end == std::string_view::npos) line_end = src_.size();
      const auto line = detail::trim(src_.substr(line_begin, line_end - line_begin));
      if (!line.starts_with("%%")) {
        std::size_t piece = line_begin;
        char closer = 0;
        for (std::size_t i = line_begin; i < line_end; ++i) {
          const char c = src_[i];
          if (closer != 0) {
            if (c == closer) closer = 0;
            continue;
          }
          if (c == '"') closer = '"';
          else if (c == '|') closer = '|';
          else if (c == ';') {
            push(out, piece, i);
            piece = i + 1;
          }
        }
        push(out, piece, line_end);
      }
      line_begin = line_end + 1;
    }
    return out;
  }

  void push(std::vector<Statement>& out, std::size_t b, std::size_t e) const {
    while (b < e && std::isspace(static_cast<unsigned char>(src_[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(src_[e - 1]))) --e;
    if (b < e) out.push_back({b, e});
  }

  void skip_spaces() {
    while (pos_ < end_ && (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\r')) ++pos_;
  }

  bool at_end() const { return pos_ >= end_; }

  bool looking_at(std::string_view token) const {
    return src_.substr(pos_, end_ - pos_).starts_with(token);
  }

  std::string_view word() {
    const std::size_t start = pos_;
    while (pos_ < end_ && is_id_char(src_[pos_])) ++pos_;
    return src_.substr(start, pos_ - start);
  }

  void header(const Statement& s) {
    pos_ = s.begin;
    end_ = s.end;
    const std::size_t kw_at = pos_;
    const auto kw = word();
    if (kw != "flowchart") {
      fail(ErrorCode::SyntaxError, "expected 'flowchart' header", kw_at);
    }
    skip_spaces();
    const std::size_t dir_at = pos_;
    const auto dir = word();
    if (dir.empty()) {
      fail(ErrorCode::SyntaxError, "flowchart header needs a direction (TD, TB or LR)", dir_at);
    }
    if (dir == "RL" || dir == "BT") {
      fail(ErrorCode::UnsupportedConstruct,
           "direction '" + std::string(dir) + "' is not supported; use TD, TB or LR", dir_at);
    }
    if (dir != "TD" && dir != "TB" && dir != "LR") {
      fail(ErrorCode::SyntaxError, "unknown direction '" + std::string(dir) + "'", dir_at);
    }
    skip_spaces();
    if (!at_end()) fail(ErrorCode::SyntaxError, "unexpected text after header", pos_);
  }

  void body(const Statement& s) {
    pos_ = s.begin;
    end_ = s.end;
    {
      const std::size_t save = pos_;
      const auto kw = word();
      for (auto unsupported : kUnsupportedKeywords) {
        if (kw == unsupported) {
          fail(ErrorCode::UnsupportedConstruct,
               "'" + std::string(kw) + "' statements are not supported", save);
        }
      }
      pos_ = save;
    }

    const std::size_t first_at = pos_;
    std::string from = node_ref();
    while (true) {
      skip_spaces();
      if (at_end()) break;
      auto link_info = link();
      skip_spaces();
      std::string to = node_ref();
      edges_.push_back({from, to, std::move(link_info.label), link_info.directed,
                        lines_.span(first_at, pos_)});
      from = std::move(to);
    }
  }

  std::string label_until(std::string_view closer, std::size_t open_at) {
    const auto rest = src_.substr(pos_, end_ - pos_);
    const auto close = rest.find(closer);
    if (close == std::string_view::npos) {
      fail(ErrorCode::SyntaxError, "unterminated node label", open_at);
    }
    auto text = detail::trim(rest.substr(0, close));
    pos_ += close + closer.size();
    if (text.size() >= 2 && text.front() == '"' && text.back() == '"') {
      text = text.substr(1, text.size() - 2);
    }
    if (text.empty()) fail(ErrorCode::SyntaxError, "empty node label", open_at);
    return std::string(text);
  }

  std::string node_ref() {
    const std::size_t start = pos_;
    const auto id_view = word();
    if (id_view.empty()) {
      if (pos_ < end_ && src_[pos_] == '&') {
        fail(ErrorCode::UnsupportedConstruct, "multi-target edges ('&') are not supported", pos_);
      }
      fail(ErrorCode::SyntaxError, "expected a node id", pos_);
    }
    std::string id(id_view);

    const std::size_t shape_at = pos_;
    NodeShape shape = NodeShape::unspecified;
    std::string label;
    bool declared = true;
    if (looking_at(":::")) {
      fail(ErrorCode::UnsupportedConstruct, "class shorthand ':::' is not supported", shape_at);
    } else if (looking_at("(((") || looking_at("([") || looking_at("[[") ||
               looking_at("[(") || looking_at("[/") || looking_at("[\\") ||
               looking_at("{") || looking_at(">")) {
      fail(ErrorCode::UnsupportedConstruct, "node shape is not supported; use ((x)) or [x]",
           shape_at);
    } else if (looking_at("((")) {
      pos_ += 2;
      label = label_until("))", shape_at);
      shape = NodeShape::circle;
    } else if (looking_at("(")) {
      pos_ += 1;
      label = label_until(")", shape_at);
    } else if (looking_at("[")) {
      pos_ += 1;
      label = label_until("]", shape_at);
      shape = NodeShape::square;
    } else {
      declared = false;
    }

    const auto span = lines_.span(start, pos_);
    if (declared) {
      nodes_.declare_label(id, label, span);
      nodes_.declare_shape(id, shape, span);
    } else {
      nodes_.mention(id, span);
    }
    return id;
  }

  struct Link {
    bool directed = true;
    std::optional<std::string> label;
  };

  Link link() {
    const std::size_t at = pos_;
    const char c = src_[pos_];
    if (c == '&') {
      fail(ErrorCode::UnsupportedConstruct, "multi-target edges ('&') are not supported", at);
    }
    if (c == '=' || c == '~' || c == '<') {
      fail(ErrorCode::UnsupportedConstruct, "link style is not supported; use --> or ---", at);
    }
    if (c != '-') fail(ErrorCode::SyntaxError, "expected a link (--> or ---)", at);

    std::size_t dashes = 0;
    while (pos_ < end_ && src_[pos_] == '-') {
      ++dashes;
      ++pos_;
    }
    const char next = pos_ < end_ ? src_[pos_] : '\0';
    Link out;
    if (next == '.') {
      fail(ErrorCode::UnsupportedConstruct, "dotted links are not supported", at);
    } else if (next == '>' && dashes >= 2) {
      ++pos_;
      out.directed = true;
    } else if (dashes >= 3) {
      out.directed = false;
    } else if (dashes == 2) {
      fail(ErrorCode::UnsupportedConstruct,
           "link text or link style is not supported here; use -->|text|", at);
    } else {
      fail(ErrorCode::SyntaxError, "malformed link", at);
    }

    skip_spaces();
    if (pos_ < end_ && src_[pos_] == '|') {
      const std::size_t open = pos_++;
      const auto rest = src_.substr(pos_, end_ - pos_);
      const auto close = rest.find('|');
      if (close == std::string_view::npos) {
        fail(ErrorCode::SyntaxError, "unterminated link text", open);
      }
      const auto text = detail::trim(rest.substr(0, close));
      if (text.empty()) fail(ErrorCode::SyntaxError, "empty link text", open);
      out.label = std::string(text);
      pos_ += close + 1;
    }
    return out;
  }

  std::string_view src_;
  LineMap lines_;
  NodeTable nodes_;
  std::vector<AstEdge> edges_;
  std::size_t pos_ = 0;
  std::size_t end_ = 0;
};

}  // namespace

DiagramAst parse_mermaid(const SourceSpec& spec) {
  if (detail::is_blank(spec.text)) {
    throw Error(ErrorCode::EmptySource, "source is empty", SourcePos{1, 1});
  }
  return MermaidParser(spec.text).run();
}

}  // namespace arbor
