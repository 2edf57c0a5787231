#include <map>
#include <random>
#include <string>

#include "arbor/compiler.hpp"
#include "arbor/error.hpp"
#include "arbor/html.hpp"
#include "arbor/tabular.hpp"
#include "doctest.h"
#include "support/fixtures.hpp"
#include "support/markup.hpp"
#include "support/trees.hpp"

using namespace arbor;
namespace t = arbor::testing;

using arbor::testing::kTeaser;

namespace {

Ir compile_text(const std::string& text, Structure s = Structure::binary_tree, Meta meta = {}) {
  return compile_source(SourceSpec{text, Language::mermaid, s, std::move(meta)});
}

using Row = std::vector<std::string>;

// Header and body rows as cell text, read back from the HTML.
std::vector<Row> html_rows(const std::string& html) {
  const auto doc = t::parse_xml(html);
  std::vector<Row> rows;
  for (const auto* tr : t::find_all(doc, "tr")) {
    Row row;
    for (const auto& [name, cell] : *tr) {
      if (name == "th" || name == "td") row.push_back(t::text_of(cell));
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_CASE("array table") {
  const auto doc = emit_table(compile_text("flowchart LR\nA[37] --- B[2] --- C[5]\n",
                                           Structure::array));
  CHECK(doc.column_names == std::vector<std::string>{"Index", "Value"});
  CHECK(doc.rows == std::vector<Row>{{"0", "37"}, {"1", "2"}, {"2", "5"}});
  CHECK(doc.csv == "Index,Value\r\n0,37\r\n1,2\r\n2,5\r\n");
}

TEST_CASE("teaser tree table") {
  const auto doc = emit_table(compile_text(kTeaser));
  CHECK(doc.column_names ==
        std::vector<std::string>{"Value", "Parent", "Position", "Left Child", "Right Child"});
  REQUIRE(doc.rows.size() == 6);
  CHECK(doc.rows[0] == Row{"3", "None", "root", "1", "6"});
  CHECK(doc.rows[1] == Row{"1", "3", "left", "0", "2"});
  CHECK(doc.rows[2] == Row{"6", "3", "right", "4", "None"});
  CHECK(doc.rows[5] == Row{"4", "6", "left", "None", "None"});
  CHECK(doc.row_ids == std::vector<std::string>{"A", "B", "E", "C", "D", "F"});

  const auto rows = html_rows(doc.html);
  REQUIRE(rows.size() == 7);
  CHECK(rows[0] == doc.column_names);
  CHECK(doc.html.find("<caption>This binary tree contains 6 nodes and 5 edges. The root node "
                      "is 3.</caption>") != std::string::npos);
  CHECK(doc.html.find("<th scope=\"col\">Value</th>") != std::string::npos);
  CHECK(doc.html.find("<th scope=\"row\">3</th>") != std::string::npos);
}

TEST_CASE("single node tree") {
  const auto doc = emit_table(compile_text("flowchart TD\nA((7))\n"));
  CHECK(doc.rows == std::vector<Row>{{"7", "None", "root", "None", "None"}});
}

TEST_CASE("caption prefers the title") {
  Meta m;
  m.title = "Week <4> & friends";
  const auto doc = emit_table(compile_text(kTeaser, Structure::binary_tree, m));
  CHECK(doc.html.find("<caption>Week &lt;4&gt; &amp; friends</caption>") != std::string::npos);
}

TEST_CASE("labels are escaped in HTML and quoted in CSV") {
  const auto doc = emit_table(compile_text(
      "flowchart LR\nA[\"a,b\"] --- B[\"<i>\"] --- C[\"say \"\"hi\"\"\"]\n", Structure::array));
  CAPTURE(doc.csv);
  CHECK(doc.html.find("&lt;i&gt;") != std::string::npos);
  CHECK(doc.html.find("<i>") == std::string::npos);
  const auto csv = t::parse_csv(doc.csv);
  REQUIRE(csv.size() == 4);
  CHECK(csv[1][1] == doc.rows[0][1]);
  CHECK(csv[2][1] == "<i>");
  CHECK(csv[3][1] == doc.rows[2][1]);
}

TEST_CASE("unsupported structures") {
  LinkedList l;
  l.nodes = {{"A", "1"}};
  try {
    emit_table(Ir{l});
    FAIL("expected UnsupportedStructure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedStructure);
  }
  try {
    emit_table(Ir{Grid{}});
    FAIL("expected UnsupportedStructure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedStructure);
  }
}

TEST_CASE("property: tree tables are self-consistent on 200 random trees") {
  std::mt19937 rng(23);
  for (int i = 0; i < 200; ++i) {
    const auto c = t::random_distinct_case(rng, 15);
    const auto doc = emit_table(Ir{t::compile_case(c)});
    REQUIRE(doc.rows.size() == c.values.size());

    // Values are distinct, so each one names exactly one row.
    std::map<std::string, Row> by_value;
    for (const auto& row : doc.rows) {
      CHECK_FALSE(row[0].empty());
      by_value[row[0]] = row;
    }
    CHECK(by_value.size() == doc.rows.size());

    std::set<std::string> ids(doc.row_ids.begin(), doc.row_ids.end());
    CHECK(ids.size() == c.values.size());

    for (const auto& row : doc.rows) {
      for (int side = 0; side < 2; ++side) {
        const std::string& kid = row[3 + side];
        if (kid == kAbsentCell) continue;
        REQUIRE(by_value.count(kid));
        CHECK(by_value[kid][1] == row[0]);
        CHECK(by_value[kid][2] == (side == 0 ? "left" : "right"));
      }
      if (row[1] != kAbsentCell) {
        REQUIRE(by_value.count(row[1]));
        const Row& parent = by_value[row[1]];
        CHECK(parent[row[2] == "left" ? 3 : 4] == row[0]);
      } else {
        CHECK(row[2] == "root");
      }
    }

    // CSV and HTML carry the same cells.
    const auto csv = t::parse_csv(doc.csv);
    const auto html = html_rows(doc.html);
    REQUIRE(csv.size() == doc.rows.size() + 1);
    CHECK(csv[0] == doc.column_names);
    CHECK(html == csv);
    for (std::size_t r = 0; r < doc.rows.size(); ++r) CHECK(csv[r + 1] == doc.rows[r]);
  }
}
