#include <algorithm>
#include <cctype>
#include <optional>
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

enum class Tok { id, string, lbrace, rbrace, lbracket, rbracket, semi, comma, equals, arrow, dashdash, colon, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t begin;
  std::size_t end;
};

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

class DotLexer {
 public:
  DotLexer(std::string_view src, const LineMap& lines) : src_(src), lines_(lines) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_trivia();
      if (pos_ >= src_.size()) {
        out.push_back({Tok::end, "", pos_, pos_});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  [[noreturn]] void fail(ErrorCode code, const std::string& msg, std::size_t at) const {
    throw Error(code, msg, lines_.at(at));
  }

  bool at_line_start(std::size_t i) const {
    while (i > 0) {
      const char c = src_[i - 1];
      if (c == '\n') return true;
      if (c != ' ' && c != '\t') return false;
      --i;
    }
    return true;
  }

  void skip_trivia() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (src_.substr(pos_).starts_with("//") ||
                 (c == '#' && at_line_start(pos_))) {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else if (src_.substr(pos_).starts_with("/*")) {
        const auto close = src_.find("*/", pos_ + 2);
        if (close == std::string_view::npos) {
          fail(ErrorCode::SyntaxError, "unterminated block comment", pos_);
        }
        pos_ = close + 2;
      } else {
        return;
      }
    }
  }

  Token next() {
    const std::size_t start = pos_;
    const char c = src_[pos_];
    auto single = [&](Tok kind) {
      ++pos_;
      return Token{kind, std::string(1, c), start, pos_};
    };
    switch (c) {
      case '{': return single(Tok::lbrace);
      case '}': return single(Tok::rbrace);
      case '[': return single(Tok::lbracket);
      case ']': return single(Tok::rbracket);
      case ';': return single(Tok::semi);
      case ',': return single(Tok::comma);
      case '=': return single(Tok::equals);
      case ':': return single(Tok::colon);
      case '"': return quoted();
      case '<':
        fail(ErrorCode::UnsupportedConstruct, "HTML-like labels are not supported", start);
      default: break;
    }
    if (c == '-' && pos_ + 1 < src_.size()) {
      if (src_[pos_ + 1] == '>') {
        pos_ += 2;
        return {Tok::arrow, "->", start, pos_};
      }
      if (src_[pos_ + 1] == '-') {
        pos_ += 2;
        return {Tok::dashdash, "--", start, pos_};
      }
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-' ||
        static_cast<unsigned char>(c) >= 0x80) {
      const bool numeral = std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-';
      ++pos_;
      while (pos_ < src_.size()) {
        const char d = src_[pos_];
        const bool ok = numeral ? (std::isdigit(static_cast<unsigned char>(d)) || d == '.')
                                : (std::isalnum(static_cast<unsigned char>(d)) || d == '_' ||
                                   static_cast<unsigned char>(d) >= 0x80);
        if (!ok) break;
        ++pos_;
      }
      return {Tok::id, std::string(src_.substr(start, pos_ - start)), start, pos_};
    }
    fail(ErrorCode::SyntaxError, std::string("unexpected character '") + c + "'", start);
  }

  Token quoted() {
    const std::size_t start = pos_++;
    std::string text;
    while (pos_ < src_.size() && src_[pos_] != '"') {
      if (src_[pos_] == '\\' && pos_ + 1 < src_.size()) {
        const char esc = src_[pos_ + 1];
        if (esc == '"' || esc == '\\') {
          text.push_back(esc);
          pos_ += 2;
          continue;
        }
        if (esc == '\n') {
          pos_ += 2;
          continue;
        }
      }
      text.push_back(src_[pos_++]);
    }
    if (pos_ >= src_.size()) fail(ErrorCode::SyntaxError, "unterminated string", start);
    ++pos_;
    return {Tok::string, std::move(text), start, pos_};
  }

  std::string_view src_;
  const LineMap& lines_;
  std::size_t pos_ = 0;
};

class DotParser {
 public:
  DotParser(std::string_view src, const LineMap& lines)
      : lines_(lines), toks_(DotLexer(src, lines).run()) {}

  DiagramAst run() {
    const Token& first = peek();
    if (first.kind == Tok::id && lower(first.text) == "strict") {
      fail(ErrorCode::UnsupportedConstruct, "'strict' graphs are not supported", first);
    }
    if (first.kind == Tok::id && lower(first.text) == "graph") {
      fail(ErrorCode::UnsupportedConstruct,
           "undirected 'graph' blocks are not supported; use 'digraph'", first);
    }
    if (first.kind != Tok::id || lower(first.text) != "digraph") {
      fail(ErrorCode::SyntaxError, "expected 'digraph'", first);
    }
    advance();
    if (peek().kind == Tok::id || peek().kind == Tok::string) advance();
    expect(Tok::lbrace, "expected '{'");
    while (peek().kind != Tok::rbrace) {
      if (peek().kind == Tok::end) fail(ErrorCode::SyntaxError, "missing closing '}'", peek());
      statement();
      if (peek().kind == Tok::semi) advance();
    }
    advance();
    if (peek().kind != Tok::end) {
      fail(ErrorCode::SyntaxError, "only a single digraph block is supported", peek());
    }
    return {nodes_.take(), std::move(edges_)};
  }

 private:
  using Attrs = std::vector<std::pair<std::string, std::string>>;

  [[noreturn]] void fail(ErrorCode code, const std::string& msg, const Token& at) const {
    throw Error(code, msg, lines_.at(at.begin));
  }

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(i_ + ahead, toks_.size() - 1)];
  }
  const Token& advance() { return toks_[std::min(i_++, toks_.size() - 1)]; }

  const Token& expect(Tok kind, const char* msg) {
    if (peek().kind != kind) fail(ErrorCode::SyntaxError, msg, peek());
    return advance();
  }

  static bool is_rank_key(const std::string& key) {
    const auto k = lower(key);
    return k == "rank" || k == "rankdir";
  }

  void statement() {
    const Token& t = peek();
    if (t.kind == Tok::lbrace || (t.kind == Tok::id && lower(t.text) == "subgraph")) {
      fail(ErrorCode::UnsupportedConstruct, "subgraphs are not supported", t);
    }
    if (t.kind == Tok::id) {
      const auto kw = lower(t.text);
      if (kw == "node" || kw == "edge" || kw == "graph") {
        const Token& kw_tok = advance();
        for (const auto& [key, value] : attr_lists()) {
          if (kw == "graph" && is_rank_key(key)) {
            fail(ErrorCode::UnsupportedConstruct, "rank directives are not supported", kw_tok);
          }
        }
        return;
      }
    }
    if ((t.kind == Tok::id || t.kind == Tok::string) && peek(1).kind == Tok::equals) {
      if (is_rank_key(t.text)) {
        fail(ErrorCode::UnsupportedConstruct, "rank directives are not supported", t);
      }
      advance();
      advance();
      if (peek().kind != Tok::id && peek().kind != Tok::string) {
        fail(ErrorCode::SyntaxError, "expected attribute value", peek());
      }
      advance();
      return;
    }

    std::vector<const Token*> chain{&node_id()};
    while (peek().kind == Tok::arrow || peek().kind == Tok::dashdash) {
      if (peek().kind == Tok::dashdash) {
        fail(ErrorCode::SyntaxError, "'--' is not allowed in a digraph; use '->'", peek());
      }
      advance();
      chain.push_back(&node_id());
    }
    const Attrs attrs = attr_lists();
    const std::size_t stmt_end = toks_[i_ - 1].end;

    if (chain.size() == 1) {
      const Token& id = *chain.front();
      const auto span = lines_.span(id.begin, stmt_end);
      nodes_.mention(id.text, span);
      for (const auto& [key, value] : attrs) {
        const auto k = lower(key);
        if (k == "label") {
          if (value.empty()) fail(ErrorCode::SyntaxError, "empty node label", id);
          nodes_.declare_label(id.text, value, span);
        } else if (k == "shape") {
          nodes_.declare_shape(id.text, shape_of(value), span);
        }
      }
      return;
    }

    std::optional<std::string> pos_label;
    for (const auto& [key, value] : attrs) {
      if (lower(key) == "pos") pos_label = value;
    }
    for (const Token* id : chain) {
      nodes_.mention(id->text, lines_.span(id->begin, id->end));
    }
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      edges_.push_back({chain[k]->text, chain[k + 1]->text, pos_label, true,
                        lines_.span(chain[k]->begin, stmt_end)});
    }
  }

  static NodeShape shape_of(const std::string& value) {
    const auto v = lower(value);
    if (v == "circle" || v == "doublecircle") return NodeShape::circle;
    if (v == "box" || v == "square" || v == "rect" || v == "rectangle") return NodeShape::square;
    return NodeShape::unspecified;
  }

  const Token& node_id() {
    const Token& t = peek();
    if (t.kind == Tok::lbrace || (t.kind == Tok::id && lower(t.text) == "subgraph")) {
      fail(ErrorCode::UnsupportedConstruct, "subgraphs are not supported", t);
    }
    if (t.kind != Tok::id && t.kind != Tok::string) {
      fail(ErrorCode::SyntaxError, "expected a node id", t);
    }
    advance();
    if (peek().kind == Tok::colon) {
      fail(ErrorCode::UnsupportedConstruct, "node ports are not supported", peek());
    }
    return t;
  }

  Attrs attr_lists() {
    Attrs out;
    while (peek().kind == Tok::lbracket) {
      advance();
      while (peek().kind != Tok::rbracket) {
        const Token& key = peek();
        if (key.kind != Tok::id && key.kind != Tok::string) {
          fail(ErrorCode::SyntaxError, "expected attribute name", key);
        }
        advance();
        expect(Tok::equals, "expected '=' in attribute");
        const Token& value = peek();
        if (value.kind != Tok::id && value.kind != Tok::string) {
          fail(ErrorCode::SyntaxError, "expected attribute value", value);
        }
        advance();
        out.emplace_back(key.text, value.text);
        if (peek().kind == Tok::comma || peek().kind == Tok::semi) advance();
      }
      advance();
    }
    return out;
  }

  const LineMap& lines_;
  std::vector<Token> toks_;
  std::size_t i_ = 0;
  NodeTable nodes_;
  std::vector<AstEdge> edges_;
};

}  // namespace

DiagramAst parse_dot(const SourceSpec& spec) {
  if (detail::is_blank(spec.text)) {
    throw Error(ErrorCode::EmptySource, "source is empty", SourcePos{1, 1});
  }
  if (spec.structure == Structure::array) {
    throw Error(ErrorCode::StructureMismatch,
                "arrays can only be authored in Mermaid; DOT has no block-diagram convention",
                SourcePos{1, 1});
  }
  const LineMap lines(spec.text);
  return DotParser(spec.text, lines).run();
}

DiagramAst parse(const SourceSpec& spec) {
  return spec.language == Language::mermaid ? parse_mermaid(spec) : parse_dot(spec);
}

}  // namespace arbor
