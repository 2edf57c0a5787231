#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace arbor {

enum class Language { mermaid, dot };

// Declared by the author; the compiler never infers it from the source.
enum class Structure { array, binary_tree, linked_list, two_d_array };

std::string_view to_string(Language lang);
std::string_view to_string(Structure structure);

// Accepts "mermaid" / "dot".
std::optional<Language> parse_language(std::string_view text);
// Accepts both the IR spelling ("binary_tree", "2d_array") and the CLI
// spelling ("binary-tree", "2d-array").
std::optional<Structure> parse_structure(std::string_view text);

struct Meta {
  std::optional<std::string> title;
  std::optional<std::string> description;

  friend bool operator==(const Meta&, const Meta&) = default;
};

struct SourceSpec {
  std::string text;
  Language language = Language::mermaid;
  Structure structure = Structure::binary_tree;
  Meta meta;
};

}  // namespace arbor
