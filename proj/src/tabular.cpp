#include "arbor/tabular.hpp"

#include "arbor/describe.hpp"
#include "arbor/error.hpp"
#include "arbor/html.hpp"

namespace arbor {
namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += csv_field(cells[i]);
  }
  return out + "\r\n";
}

void render(TabularDoc& doc, const Ir& ir) {
  const Meta& meta = meta_of(ir);
  const std::string caption = meta.title && !meta.title->empty() ? *meta.title : describe(ir);

  std::string& h = doc.html;
  h += "<table class=\"arbor-table\" data-structure=\"";
  h += to_string(structure_of(ir));
  h += "\">\n<caption>" + html_escape(caption) + "</caption>\n<thead>\n<tr>";
  for (const auto& name : doc.column_names) h += "<th scope=\"col\">" + html_escape(name) + "</th>";
  h += "</tr>\n</thead>\n<tbody>\n";
  for (std::size_t r = 0; r < doc.rows.size(); ++r) {
    const auto& row = doc.rows[r];
    h += "<tr data-id=\"" + html_escape(doc.row_ids[r]) + "\">";
    // First column identifies the row.
    h += "<th scope=\"row\">" + html_escape(row.front()) + "</th>";
    for (std::size_t c = 1; c < row.size(); ++c) h += "<td>" + html_escape(row[c]) + "</td>";
    h += "</tr>\n";
  }
  h += "</tbody>\n</table>\n";

  doc.csv = csv_line(doc.column_names);
  for (const auto& row : doc.rows) doc.csv += csv_line(row);
}

}  // namespace

TabularDoc emit_table(const Ir& ir) {
  TabularDoc doc;
  if (const auto* array = std::get_if<Array>(&ir)) {
    if (array->elements.empty()) throw Error(ErrorCode::EmptyDiagram, "array has no elements");
    doc.column_names = {"Index", "Value"};
    for (const auto& e : array->elements) {
      doc.rows.push_back({std::to_string(e.index), e.value});
      doc.row_ids.push_back(e.id);
    }
  } else if (const auto* tree = std::get_if<BinaryTree>(&ir)) {
    if (tree->nodes.empty()) throw Error(ErrorCode::EmptyDiagram, "tree has no nodes");
    doc.column_names = {"Value", "Parent", "Position", "Left Child", "Right Child"};
    auto value_or_none = [](const TreeNode* n) { return n ? n->value : std::string(kAbsentCell); };
    for (const TreeNode* n : tree->breadth_first()) {
      doc.rows.push_back({n->value, value_or_none(tree->parent(n->id)),
                          std::string(to_string(n->position)),
                          value_or_none(tree->child(n->id, Side::left)),
                          value_or_none(tree->child(n->id, Side::right))});
      doc.row_ids.push_back(n->id);
    }
  } else {
    throw Error(ErrorCode::UnsupportedStructure,
                "no table output for " + std::string(to_string(structure_of(ir))));
  }
  render(doc, ir);
  return doc;
}

}  // namespace arbor
