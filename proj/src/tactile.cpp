#include "arbor/tactile.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "arbor/describe.hpp"
#include "arbor/error.hpp"
#include "arbor/html.hpp"
#include "json.hpp"

namespace arbor {
namespace {

using Json = nlohmann::ordered_json;

struct ConfigField {
  const char* name;
  double TactileConfig::*member;
};

constexpr ConfigField kFields[] = {
    {"page_width_mm", &TactileConfig::page_width_mm},
    {"page_height_mm", &TactileConfig::page_height_mm},
    {"margin_mm", &TactileConfig::margin_mm},
    {"node_radius_mm", &TactileConfig::node_radius_mm},
    {"min_gap_mm", &TactileConfig::min_gap_mm},
    {"level_gap_mm", &TactileConfig::level_gap_mm},
    {"stroke_mm", &TactileConfig::stroke_mm},
    {"min_stroke_mm", &TactileConfig::min_stroke_mm},
    {"arrowhead_mm", &TactileConfig::arrowhead_mm},
    {"box_width_mm", &TactileConfig::box_width_mm},
    {"box_height_mm", &TactileConfig::box_height_mm},
    {"index_gap_mm", &TactileConfig::index_gap_mm},
    {"dot_diameter_mm", &TactileConfig::dot_diameter_mm},
    {"dot_spacing_mm", &TactileConfig::dot_spacing_mm},
    {"cell_spacing_mm", &TactileConfig::cell_spacing_mm},
};

[[noreturn]] void bad_config(const std::string& msg) {
  throw Error(ErrorCode::InvalidConfig, "tactile config: " + msg);
}

// Horizontal distance between the outer dot centres of an m-cell label.
double dot_span(const TactileConfig& cfg, std::size_t cells) {
  return static_cast<double>(cells - 1) * cfg.cell_spacing_mm + cfg.dot_spacing_mm;
}

double label_half_width(const TactileConfig& cfg, std::size_t cells) {
  return dot_span(cfg, cells) / 2 + cfg.dot_diameter_mm / 2;
}

double label_half_height(const TactileConfig& cfg) {
  return cfg.dot_spacing_mm + cfg.dot_diameter_mm / 2;
}

// Farthest raised point from the label centre.
double label_reach(const TactileConfig& cfg, std::size_t cells) {
  return std::hypot(dot_span(cfg, cells) / 2, cfg.dot_spacing_mm) + cfg.dot_diameter_mm / 2;
}

std::string num(double v) {
  if (std::fabs(v) < 0.005) v = 0.0;
  return fmt::format("{:.2f}", v);
}

[[noreturn]] void overflow(const char* what, double need_w, double need_h, double avail_w,
                           double avail_h) {
  throw Error(ErrorCode::PageOverflow,
              fmt::format("{} needs {:.1f} x {:.1f} mm but the printable area is {:.1f} x {:.1f} mm",
                          what, need_w, need_h, avail_w, avail_h));
}

std::string caption_of(const Meta& meta, const Ir& ir) {
  return meta.title && !meta.title->empty() ? *meta.title : describe(ir);
}

class SvgWriter {
 public:
  SvgWriter(const TactileConfig& cfg, const std::string& title,
            const std::vector<LegendEntry>& legend)
      : cfg_(cfg) {
    out_ += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
            num(cfg.page_width_mm) + "mm\" height=\"" + num(cfg.page_height_mm) +
            "mm\" viewBox=\"0 0 " + num(cfg.page_width_mm) + " " + num(cfg.page_height_mm) +
            "\" role=\"img\" aria-labelledby=\"arbor-title arbor-desc\">\n";
    out_ += "<title id=\"arbor-title\">" + html_escape(title) + "</title>\n";
    std::string desc = "Braille legend:";
    for (const auto& e : legend) desc += " " + e.braille + " = " + e.print + ";";
    out_ += "<desc id=\"arbor-desc\">" + html_escape(desc) + "</desc>\n";
  }

  void arrow_marker() {
    const double h = cfg_.arrowhead_mm * std::sqrt(3.0) / 2;
    const double s = cfg_.arrowhead_mm;
    out_ += "<defs>\n<marker id=\"arrowhead\" markerUnits=\"userSpaceOnUse\" markerWidth=\"" +
            num(h) + "\" markerHeight=\"" + num(s) + "\" viewBox=\"0 0 " + num(h) + " " + num(s) +
            "\" refX=\"0\" refY=\"" + num(s / 2) + "\" orient=\"auto\">" + "<path d=\"M0,0 L" +
            num(h) + "," + num(s / 2) + " L0," + num(s) + " Z\" fill=\"#000\"/></marker>\n</defs>\n";
  }

  void open_group(const char* cls, bool stroked) {
    out_ += std::string("<g class=\"") + cls + "\"";
    if (stroked) {
      out_ += " fill=\"none\" stroke=\"#000\" stroke-width=\"" + num(cfg_.stroke_mm) + "\"";
    } else {
      out_ += " fill=\"#000\" stroke=\"none\"";
    }
    out_ += ">\n";
  }
  void close_group() { out_ += "</g>\n"; }

  void line(const EdgeGlyph& e) {
    out_ += "<line class=\"edge\" data-parent=\"" + html_escape(e.parent) + "\" data-child=\"" +
            html_escape(e.child) + "\" x1=\"" + num(e.x1) + "\" y1=\"" + num(e.y1) + "\" x2=\"" +
            num(e.x2) + "\" y2=\"" + num(e.y2) + "\" marker-end=\"url(#arrowhead)\"/>\n";
  }

  void circle(const NodeGlyph& n) {
    out_ += "<circle class=\"node\" data-id=\"" + html_escape(n.id) + "\" cx=\"" + num(n.cx) +
            "\" cy=\"" + num(n.cy) + "\" r=\"" + num(n.r) + "\"/>\n";
  }

  void rect(const BoxGlyph& b) {
    out_ += "<rect class=\"element\" data-id=\"" + html_escape(b.id) + "\" x=\"" + num(b.x) +
            "\" y=\"" + num(b.y) + "\" width=\"" + num(b.width) + "\" height=\"" +
            num(b.height) + "\"/>\n";
  }

  // One path per label; every raised dot is a closed circular subpath.
  void braille(const LabelGlyph& g, const char* cls) {
    const double r = cfg_.dot_diameter_mm / 2;
    const double ds = cfg_.dot_spacing_mm;
    const double left = g.cx - dot_span(cfg_, g.label.cells.size()) / 2;
    std::string d;
    for (std::size_t k = 0; k < g.label.cells.size(); ++k) {
      const double col0 = left + static_cast<double>(k) * cfg_.cell_spacing_mm;
      for (int dot : braille_dots(g.label.cells[k])) {
        if (dot > 6) continue;
        const double x = col0 + (dot <= 3 ? 0.0 : ds);
        const double y = g.cy + static_cast<double>((dot - 1) % 3 - 1) * ds;
        if (!d.empty()) d += ' ';
        d += "M" + num(x - r) + "," + num(y) + " a" + num(r) + "," + num(r) + " 0 1,0 " +
             num(2 * r) + ",0 a" + num(r) + "," + num(r) + " 0 1,0 " + num(-2 * r) + ",0 Z";
      }
    }
    out_ += std::string("<path class=\"") + cls + "\" data-id=\"" + html_escape(g.id) +
            "\" data-print=\"" + html_escape(g.label.print) + "\" aria-label=\"" +
            html_escape(g.label.text()) + "\" d=\"" + d + "\"/>\n";
  }

  std::string finish() {
    out_ += "</svg>\n";
    return std::move(out_);
  }

 private:
  const TactileConfig& cfg_;
  std::string out_;
};

void add_legend(std::vector<LegendEntry>& legend, const BrailleLabel& label) {
  LegendEntry entry{label.text(), label.print};
  if (std::find(legend.begin(), legend.end(), entry) == legend.end()) legend.push_back(entry);
}

}  // namespace

void check_config(const TactileConfig& cfg) {
  for (const auto& f : kFields) {
    const double v = cfg.*(f.member);
    if (!std::isfinite(v) || v < 0) bad_config(std::string(f.name) + " must be a finite, non-negative number");
    if (v == 0 && std::string_view(f.name) != "margin_mm" && std::string_view(f.name) != "index_gap_mm") {
      bad_config(std::string(f.name) + " must be positive");
    }
  }
  if (cfg.stroke_mm < cfg.min_stroke_mm) {
    bad_config(fmt::format("stroke_mm {:.2f} is below the tactile minimum {:.2f}", cfg.stroke_mm,
                           cfg.min_stroke_mm));
  }
  if (cfg.page_width_mm <= 2 * cfg.margin_mm || cfg.page_height_mm <= 2 * cfg.margin_mm) {
    bad_config("margins leave no printable area");
  }
  if (cfg.dot_spacing_mm <= cfg.dot_diameter_mm || cfg.cell_spacing_mm <= cfg.dot_spacing_mm + cfg.dot_diameter_mm) {
    bad_config("braille dots would touch");
  }
  const double reach = label_reach(cfg, kMaxBrailleCells);
  if (reach > cfg.node_radius_mm - cfg.stroke_mm / 2) {
    bad_config(fmt::format("node_radius_mm must be at least {:.2f} to hold a {}-cell label",
                           reach + cfg.stroke_mm / 2, kMaxBrailleCells));
  }
  if (label_half_width(cfg, kMaxBrailleCells) > cfg.box_width_mm / 2 - cfg.stroke_mm / 2 ||
      label_half_height(cfg) > cfg.box_height_mm / 2 - cfg.stroke_mm / 2) {
    bad_config("array boxes are too small for a full-length label");
  }
  if (cfg.arrowhead_mm * std::sqrt(3.0) / 2 >= cfg.level_gap_mm) {
    bad_config("arrowhead does not fit between tree levels");
  }
}

TactileConfig tactile_config_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad_config(e.what());
  }
  if (!j.is_object()) bad_config("expected a JSON object");
  TactileConfig cfg;
  for (const auto& [key, value] : j.items()) {
    const ConfigField* field = nullptr;
    for (const auto& f : kFields) {
      if (key == f.name) field = &f;
    }
    if (field == nullptr) bad_config("unknown key '" + key + "'");
    if (!value.is_number()) bad_config("'" + key + "' must be a number");
    cfg.*(field->member) = value.get<double>();
  }
  check_config(cfg);
  return cfg;
}

std::string to_json(const TactileConfig& cfg) {
  Json j;
  for (const auto& f : kFields) j[f.name] = cfg.*(f.member);
  return j.dump();
}

TactileDoc layout_tree(const BinaryTree& tree, const TactileConfig& cfg) {
  check_config(cfg);
  const TreeNode* root = tree.root();
  if (root == nullptr) throw Error(ErrorCode::EmptyDiagram, "tree has no nodes");

  // Transcribe first so a bad label wins over an overflow report.
  std::map<std::string, BrailleLabel> labels;
  for (const auto& n : tree.nodes) labels.emplace(n.id, transcribe_braille(n.value));

  // Column slots: x in slot units, each subtree occupies [offset, offset + width).
  std::map<std::string, double> slot_x;
  std::function<double(const TreeNode&, double)> place = [&](const TreeNode& n, double offset) {
    const TreeNode* l = tree.child(n.id, Side::left);
    const TreeNode* r = tree.child(n.id, Side::right);
    if (l && r) {
      const double wl = place(*l, offset);
      const double wr = place(*r, offset + wl);
      slot_x[n.id] = offset + wl;
      return wl + wr;
    }
    if (l) {
      const double wl = place(*l, offset);
      slot_x[n.id] = offset + wl + 0.5;
      return wl + 1;
    }
    if (r) {
      slot_x[n.id] = offset + 0.5;
      return 1 + place(*r, offset + 1);
    }
    slot_x[n.id] = offset + 0.5;
    return 1.0;
  };
  place(*root, 0.0);

  double min_slot = slot_x.begin()->second;
  double max_slot = min_slot;
  for (const auto& [id, x] : slot_x) {
    min_slot = std::min(min_slot, x);
    max_slot = std::max(max_slot, x);
  }
  const int levels = tree.height();

  const double outer = cfg.node_radius_mm + cfg.stroke_mm / 2;
  const double pitch_x = 2 * outer + cfg.min_gap_mm;
  const double pitch_y = 2 * outer + cfg.level_gap_mm;
  const double need_w = (max_slot - min_slot) * pitch_x + 2 * outer;
  const double need_h = (levels - 1) * pitch_y + 2 * outer;
  const double avail_w = cfg.page_width_mm - 2 * cfg.margin_mm;
  const double avail_h = cfg.page_height_mm - 2 * cfg.margin_mm;
  if (need_w > avail_w || need_h > avail_h) {
    overflow("tree layout", need_w, need_h, avail_w, avail_h);
  }

  const double x0 = cfg.margin_mm + (avail_w - need_w) / 2 + outer;
  const double y0 = cfg.margin_mm + outer;

  TactileDoc doc;
  doc.width_mm = cfg.page_width_mm;
  doc.height_mm = cfg.page_height_mm;
  std::map<std::string, const NodeGlyph*> by_id;
  doc.nodes.reserve(tree.nodes.size());
  for (const TreeNode* n : tree.breadth_first()) {
    doc.nodes.push_back({n->id, x0 + (slot_x.at(n->id) - min_slot) * pitch_x,
                         y0 + n->depth * pitch_y, cfg.node_radius_mm});
  }
  for (const auto& g : doc.nodes) by_id[g.id] = &g;

  const double head = cfg.arrowhead_mm * std::sqrt(3.0) / 2;
  for (const auto& e : tree.edges) {
    const NodeGlyph& p = *by_id.at(e.parent);
    const NodeGlyph& c = *by_id.at(e.child);
    const double dx = c.cx - p.cx;
    const double dy = c.cy - p.cy;
    const double len = std::hypot(dx, dy);
    const double ux = dx / len;
    const double uy = dy / len;
    EdgeGlyph g{e.parent, e.child, 0, 0, 0, 0, 0, 0};
    g.x1 = p.cx + ux * outer;
    g.y1 = p.cy + uy * outer;
    g.tip_x = c.cx - ux * outer;
    g.tip_y = c.cy - uy * outer;
    g.x2 = g.tip_x - ux * head;
    g.y2 = g.tip_y - uy * head;
    doc.edges.push_back(std::move(g));
  }

  for (const auto& n : doc.nodes) {
    const auto& label = labels.at(n.id);
    doc.labels.push_back({n.id, label, n.cx, n.cy, label_half_width(cfg, label.cells.size()),
                          label_half_height(cfg)});
    add_legend(doc.legend, label);
  }

  const Ir ir = tree;
  SvgWriter svg(cfg, caption_of(tree.meta, ir), doc.legend);
  svg.arrow_marker();
  svg.open_group("edges", true);
  for (const auto& e : doc.edges) svg.line(e);
  svg.close_group();
  svg.open_group("nodes", true);
  for (const auto& n : doc.nodes) svg.circle(n);
  svg.close_group();
  svg.open_group("labels", false);
  for (const auto& l : doc.labels) svg.braille(l, "braille value");
  svg.close_group();
  doc.svg = svg.finish();
  return doc;
}

TactileDoc layout_array(const Array& array, const TactileConfig& cfg) {
  check_config(cfg);
  if (array.elements.empty()) throw Error(ErrorCode::EmptyDiagram, "array has no elements");

  std::vector<BrailleLabel> values;
  std::vector<BrailleLabel> indices;
  for (const auto& e : array.elements) {
    values.push_back(transcribe_braille(e.value));
    indices.push_back(transcribe_braille(std::to_string(e.index)));
  }

  const double n = static_cast<double>(array.elements.size());
  const double half_stroke = cfg.stroke_mm / 2;
  const double label_h = 2 * label_half_height(cfg);
  const double need_w = n * cfg.box_width_mm + cfg.stroke_mm;
  const double need_h = cfg.box_height_mm + cfg.stroke_mm + cfg.index_gap_mm + label_h;
  const double avail_w = cfg.page_width_mm - 2 * cfg.margin_mm;
  const double avail_h = cfg.page_height_mm - 2 * cfg.margin_mm;
  if (need_w > avail_w || need_h > avail_h) {
    overflow("array layout", need_w, need_h, avail_w, avail_h);
  }

  const double left = cfg.margin_mm + (avail_w - need_w) / 2 + half_stroke;
  const double top = cfg.margin_mm + (avail_h - need_h) / 2 + half_stroke;
  const double index_cy = top + cfg.box_height_mm + half_stroke + cfg.index_gap_mm + label_h / 2;

  TactileDoc doc;
  doc.width_mm = cfg.page_width_mm;
  doc.height_mm = cfg.page_height_mm;
  for (std::size_t i = 0; i < array.elements.size(); ++i) {
    const auto& e = array.elements[i];
    const double x = left + static_cast<double>(i) * cfg.box_width_mm;
    const double cx = x + cfg.box_width_mm / 2;
    doc.boxes.push_back({e.id, x, top, cfg.box_width_mm, cfg.box_height_mm});
    doc.labels.push_back({e.id, values[i], cx, top + cfg.box_height_mm / 2,
                          label_half_width(cfg, values[i].cells.size()), label_half_height(cfg)});
    add_legend(doc.legend, values[i]);
  }
  for (std::size_t i = 0; i < array.elements.size(); ++i) {
    const double cx = doc.boxes[i].x + cfg.box_width_mm / 2;
    doc.labels.push_back({array.elements[i].id, indices[i], cx, index_cy,
                          label_half_width(cfg, indices[i].cells.size()), label_half_height(cfg)});
    add_legend(doc.legend, indices[i]);
  }

  const Ir ir = array;
  SvgWriter svg(cfg, caption_of(array.meta, ir), doc.legend);
  svg.open_group("elements", true);
  for (const auto& b : doc.boxes) svg.rect(b);
  svg.close_group();
  svg.open_group("labels", false);
  for (std::size_t i = 0; i < doc.labels.size(); ++i) {
    svg.braille(doc.labels[i], i < array.elements.size() ? "braille value" : "braille index");
  }
  svg.close_group();
  doc.svg = svg.finish();
  return doc;
}

TactileDoc emit_tactile(const Ir& ir, const TactileConfig& cfg) {
  if (const auto* tree = std::get_if<BinaryTree>(&ir)) return layout_tree(*tree, cfg);
  if (const auto* array = std::get_if<Array>(&ir)) return layout_array(*array, cfg);
  throw Error(ErrorCode::UnsupportedStructure,
              "no tactile output for " + std::string(to_string(structure_of(ir))));
}

}  // namespace arbor
