#include "markup.hpp"

#include <sstream>
#include <stdexcept>

#include <boost/property_tree/xml_parser.hpp>

namespace arbor::testing {

namespace pt = boost::property_tree;

pt::ptree parse_xml(const std::string& text) {
  std::istringstream in(text);
  pt::ptree tree;
  pt::read_xml(in, tree);
  return tree;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"' && field.empty()) {
      quoted = true;
      field_started = true;
    } else if (c == ',') {
      row.push_back(field);
      field.clear();
      field_started = true;
    } else if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
      row.push_back(field);
      rows.push_back(row);
      row.clear();
      field.clear();
      field_started = false;
      ++i;
    } else if (c == '\n') {
      throw std::runtime_error("bare LF in CSV record");
    } else {
      field += c;
      field_started = true;
    }
  }
  if (quoted) throw std::runtime_error("unterminated quoted field");
  if (field_started || !row.empty()) {
    row.push_back(field);
    rows.push_back(row);
  }
  return rows;
}

namespace {

void collect(const pt::ptree& node, const std::string& tag,
             std::vector<const pt::ptree*>& out) {
  for (const auto& [name, child] : node) {
    if (name == tag) out.push_back(&child);
    if (name != "<xmlattr>") collect(child, tag, out);
  }
}

}  // namespace

std::vector<const pt::ptree*> find_all(const pt::ptree& root, const std::string& tag) {
  std::vector<const pt::ptree*> out;
  collect(root, tag, out);
  return out;
}

std::string attr(const pt::ptree& node, const std::string& name) {
  return node.get<std::string>("<xmlattr>." + name, "");
}

std::string text_of(const pt::ptree& node) {
  std::string out = node.data();
  for (const auto& [name, child] : node) {
    if (name != "<xmlattr>" && name != "<xmlcomment>") out += text_of(child);
  }
  return out;
}

}  // namespace arbor::testing
