#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "arbor/navigable.hpp"
#include "arbor/source.hpp"
#include "arbor/tabular.hpp"
#include "arbor/tactile.hpp"

namespace arbor {

enum class OutputFormat { tabular, navigable, tactile, ir, description };

std::string_view to_string(OutputFormat f);
std::optional<OutputFormat> parse_format(std::string_view text);

struct CompileRequest {
  std::string source;
  Language language = Language::mermaid;
  Structure structure = Structure::binary_tree;
  std::set<OutputFormat> formats;
  Meta meta;
  std::optional<TactileConfig> tactile_config;
};

// Every output is rendered from the one IR in ir_json.
struct OutputBundle {
  std::string ir_json;
  std::string description;
  std::optional<TabularDoc> tabular;
  std::optional<NavigableDoc> navigable;
  std::optional<TactileDoc> tactile;
};

// Largest accepted source, in bytes.
inline constexpr std::size_t kMaxSourceBytes = 256 * 1024;

/// Parse, compile and emit the requested formats. ir_json and description
/// are always filled. Any failure throws arbor::Error; nothing is partial.
OutputBundle compile_request(const CompileRequest& request);

/// Wire form of the bundle:
///   {"ir_json":"..","description":"..",
///    "tabular":{"html","csv","column_names"},
///    "navigable":{"html","nav_model"},
///    "tactile":{"svg","page":{"width_mm","height_mm"},"legend":[{"braille","print"}]}}
/// Absent outputs are omitted.
std::string bundle_to_json(const OutputBundle& bundle);

/// Parses the service request body. Throws BadRequest on malformed input.
///   {"source":..,"language":"mermaid"|"dot","structure":"binary_tree"|"array",
///    "format":["tabular",..],"title"?,"description"?,"tactile_config"?}
CompileRequest request_from_json(std::string_view body);

}  // namespace arbor
