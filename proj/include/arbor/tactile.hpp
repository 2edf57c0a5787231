#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "arbor/braille.hpp"
#include "arbor/ir.hpp"

namespace arbor {

/// Physical layout parameters, all in millimetres. Defaults target US Letter
/// swell paper; node and box sizes leave room for a three-cell label.
struct TactileConfig {
  double page_width_mm = 215.9;
  double page_height_mm = 279.4;
  double margin_mm = 12.7;
  double node_radius_mm = 10.0;
  // Clear space between the outlines of two glyphs on the same row.
  double min_gap_mm = 6.0;
  // Clear space between the outlines of consecutive tree levels.
  double level_gap_mm = 22.0;
  double stroke_mm = 1.5;
  double min_stroke_mm = 1.5;
  // Side of the filled equilateral arrowhead.
  double arrowhead_mm = 4.0;
  double box_width_mm = 22.0;
  double box_height_mm = 14.0;
  // Between an array box and the index label beneath it.
  double index_gap_mm = 4.0;
  double dot_diameter_mm = 1.5;
  double dot_spacing_mm = 2.5;
  double cell_spacing_mm = 6.0;
};

// Partial objects are fine; missing keys keep their defaults. Unknown keys,
// non-numbers and configs that cannot hold a full-length label throw
// InvalidConfig.
TactileConfig tactile_config_from_json(std::string_view text);
std::string to_json(const TactileConfig& cfg);
void check_config(const TactileConfig& cfg);

struct LegendEntry {
  std::string braille;
  std::string print;

  friend bool operator==(const LegendEntry&, const LegendEntry&) = default;
};

// Geometry behind the SVG, exposed so callers can inspect the layout without
// re-parsing markup.
struct NodeGlyph {
  std::string id;
  double cx, cy, r;
};

struct EdgeGlyph {
  std::string parent, child;
  double x1, y1, x2, y2;  // the drawn line; the arrowhead sits on (x2, y2)
  double tip_x, tip_y;    // arrowhead tip, on the child's outline
};

struct BoxGlyph {
  std::string id;
  double x, y, width, height;
};

struct LabelGlyph {
  std::string id;
  BrailleLabel label;
  double cx, cy;
  double half_width, half_height;  // extent of the dots
};

struct TactileDoc {
  std::string svg;
  double width_mm = 0;
  double height_mm = 0;
  std::vector<LegendEntry> legend;

  std::vector<NodeGlyph> nodes;
  std::vector<EdgeGlyph> edges;
  std::vector<BoxGlyph> boxes;
  std::vector<LabelGlyph> labels;
};

/// Layered drawing: one row per depth, parents above children, left subtree
/// strictly left of its parent and right subtree strictly right. Each leaf
/// and each single-child parent claims a column slot; a two-child parent sits
/// on the boundary between its subtrees. Throws PageOverflow rather than
/// shrinking below the configured sizes.
TactileDoc layout_tree(const BinaryTree& tree, const TactileConfig& cfg = {});

/// A centred strip of abutting boxes with the value inside and the index
/// below each box.
TactileDoc layout_array(const Array& array, const TactileConfig& cfg = {});

/// Dispatches on the IR variant; UnsupportedStructure for the others.
TactileDoc emit_tactile(const Ir& ir, const TactileConfig& cfg = {});

}  // namespace arbor
