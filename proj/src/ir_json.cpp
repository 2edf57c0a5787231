#include "arbor/ir_json.hpp"

#include <initializer_list>

#include "arbor/error.hpp"
#include "arbor/validate.hpp"
#include "json.hpp"

namespace arbor {
namespace {

using Json = nlohmann::ordered_json;

Json meta_json(Structure type, const Meta& meta) {
  Json m;
  m["type"] = std::string(to_string(type));
  m["title"] = meta.title ? Json(*meta.title) : Json(nullptr);
  m["description"] = meta.description ? Json(*meta.description) : Json(nullptr);
  return m;
}

Json element_json(const Element& e) {
  Json j;
  j["id"] = e.id;
  j["value"] = e.value;
  j["index"] = e.index;
  return j;
}

struct ToJson {
  Json operator()(const BinaryTree& t) const {
    Json j;
    j["meta"] = meta_json(Structure::binary_tree, t.meta);
    j["nodes"] = Json::array();
    for (const auto& n : t.nodes) {
      Json node;
      node["id"] = n.id;
      node["value"] = n.value;
      node["depth"] = n.depth;
      node["position"] = std::string(to_string(n.position));
      node["is_leaf"] = n.is_leaf;
      j["nodes"].push_back(std::move(node));
    }
    j["edges"] = Json::array();
    for (const auto& e : t.edges) {
      Json edge;
      edge["parent"] = e.parent;
      edge["child"] = e.child;
      edge["position"] = std::string(to_string(e.position));
      j["edges"].push_back(std::move(edge));
    }
    return j;
  }
  Json operator()(const Array& a) const {
    Json j;
    j["meta"] = meta_json(Structure::array, a.meta);
    j["elements"] = Json::array();
    for (const auto& e : a.elements) j["elements"].push_back(element_json(e));
    return j;
  }
  Json operator()(const LinkedList& l) const {
    Json j;
    j["meta"] = meta_json(Structure::linked_list, l.meta);
    j["nodes"] = Json::array();
    for (const auto& n : l.nodes) {
      Json node;
      node["id"] = n.id;
      node["value"] = n.value;
      j["nodes"].push_back(std::move(node));
    }
    return j;
  }
  Json operator()(const Grid& g) const {
    Json j;
    j["meta"] = meta_json(Structure::two_d_array, g.meta);
    j["rows"] = Json::array();
    for (const auto& row : g.rows) {
      Json r;
      r["children"] = Json::array();
      for (const auto& e : row.children) r["children"].push_back(element_json(e));
      j["rows"].push_back(std::move(r));
    }
    return j;
  }
};

[[noreturn]] void schema(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::SchemaViolation, where + ": " + what);
}

// Rejects missing and unknown keys.
void expect_keys(const Json& obj, const std::string& where,
                 std::initializer_list<const char*> keys) {
  if (!obj.is_object()) schema(where, "expected an object");
  for (const char* k : keys) {
    if (!obj.contains(k)) schema(where, std::string("missing key '") + k + "'");
  }
  for (const auto& [k, v] : obj.items()) {
    bool known = false;
    for (const char* allowed : keys) known = known || k == allowed;
    if (!known) schema(where, "unexpected key '" + k + "'");
  }
}

std::string get_string(const Json& obj, const char* key, const std::string& where) {
  const auto& v = obj.at(key);
  if (!v.is_string()) schema(where, std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

std::optional<std::string> get_optional_string(const Json& obj, const char* key,
                                               const std::string& where) {
  const auto& v = obj.at(key);
  if (v.is_null()) return std::nullopt;
  if (!v.is_string()) schema(where, std::string("'") + key + "' must be a string or null");
  return v.get<std::string>();
}

std::int64_t get_nonnegative(const Json& obj, const char* key, const std::string& where) {
  const auto& v = obj.at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    schema(where, std::string("'") + key + "' must be a non-negative integer");
  }
  return v.get<std::int64_t>();
}

const Json& get_array(const Json& obj, const char* key, const std::string& where) {
  const auto& v = obj.at(key);
  if (!v.is_array()) schema(where, std::string("'") + key + "' must be an array");
  return v;
}

Meta read_meta(const Json& m) {
  expect_keys(m, "meta", {"type", "title", "description"});
  return {get_optional_string(m, "title", "meta"), get_optional_string(m, "description", "meta")};
}

Element read_element(const Json& e, const std::string& where) {
  expect_keys(e, where, {"id", "value", "index"});
  return {get_string(e, "id", where), get_string(e, "value", where),
          static_cast<std::size_t>(get_nonnegative(e, "index", where))};
}

BinaryTree read_tree(const Json& j) {
  expect_keys(j, "binary_tree", {"meta", "nodes", "edges"});
  BinaryTree t;
  t.meta = read_meta(j.at("meta"));
  const auto& nodes = get_array(j, "nodes", "binary_tree");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string where = "nodes[" + std::to_string(i) + "]";
    const auto& n = nodes[i];
    expect_keys(n, where, {"id", "value", "depth", "position", "is_leaf"});
    TreeNode node;
    node.id = get_string(n, "id", where);
    node.value = get_string(n, "value", where);
    node.depth = static_cast<int>(get_nonnegative(n, "depth", where));
    const auto pos = get_string(n, "position", where);
    if (pos == "root") node.position = NodePosition::root;
    else if (pos == "left") node.position = NodePosition::left;
    else if (pos == "right") node.position = NodePosition::right;
    else schema(where, "position must be root, left or right");
    if (!n.at("is_leaf").is_boolean()) schema(where, "'is_leaf' must be a boolean");
    node.is_leaf = n.at("is_leaf").get<bool>();
    t.nodes.push_back(std::move(node));
  }
  const auto& edges = get_array(j, "edges", "binary_tree");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const auto& e = edges[i];
    expect_keys(e, where, {"parent", "child", "position"});
    TreeEdge edge{get_string(e, "parent", where), get_string(e, "child", where), Side::left};
    const auto pos = get_string(e, "position", where);
    if (pos == "left") edge.position = Side::left;
    else if (pos == "right") edge.position = Side::right;
    else schema(where, "position must be left or right");
    t.edges.push_back(std::move(edge));
  }
  return t;
}

Array read_array(const Json& j) {
  expect_keys(j, "array", {"meta", "elements"});
  Array a;
  a.meta = read_meta(j.at("meta"));
  const auto& elements = get_array(j, "elements", "array");
  for (std::size_t i = 0; i < elements.size(); ++i) {
    a.elements.push_back(read_element(elements[i], "elements[" + std::to_string(i) + "]"));
  }
  return a;
}

LinkedList read_list(const Json& j) {
  expect_keys(j, "linked_list", {"meta", "nodes"});
  LinkedList l;
  l.meta = read_meta(j.at("meta"));
  const auto& nodes = get_array(j, "nodes", "linked_list");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string where = "nodes[" + std::to_string(i) + "]";
    expect_keys(nodes[i], where, {"id", "value"});
    l.nodes.push_back({get_string(nodes[i], "id", where), get_string(nodes[i], "value", where)});
  }
  return l;
}

Grid read_grid(const Json& j) {
  expect_keys(j, "2d_array", {"meta", "rows"});
  Grid g;
  g.meta = read_meta(j.at("meta"));
  const auto& rows = get_array(j, "rows", "2d_array");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string where = "rows[" + std::to_string(r) + "]";
    expect_keys(rows[r], where, {"children"});
    GridRow row;
    const auto& children = get_array(rows[r], "children", where);
    for (std::size_t c = 0; c < children.size(); ++c) {
      row.children.push_back(read_element(children[c], where + ".children[" + std::to_string(c) + "]"));
    }
    g.rows.push_back(std::move(row));
  }
  return g;
}

}  // namespace

std::string to_json(const Ir& ir) {
  return std::visit(ToJson{}, ir).dump(-1, ' ', false, Json::error_handler_t::replace);
}

Ir from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::JsonSyntax, e.what());
  }
  if (!j.is_object() || !j.contains("meta") || !j["meta"].is_object() ||
      !j["meta"].contains("type") || !j["meta"]["type"].is_string()) {
    schema("document", "expected an object with meta.type");
  }
  const auto type = j["meta"]["type"].get<std::string>();
  Ir ir;
  if (type == "binary_tree") ir = read_tree(j);
  else if (type == "array") ir = read_array(j);
  else if (type == "linked_list") ir = read_list(j);
  else if (type == "2d_array") ir = read_grid(j);
  else schema("meta.type", "unknown structure type '" + type + "'");

  auto violations = validate_ir(ir);
  if (!violations.empty()) throw IrViolationError(std::move(violations));
  return ir;
}

}  // namespace arbor
