// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <deque>
#include <functional>
#include <iostream>
#include <random>
#include <regex>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "arbor/analysis.hpp"
#include "arbor/braille.hpp"
#include "arbor/compiler.hpp"
#include "arbor/describe.hpp"
#include "arbor/error.hpp"
#include "arbor/ir_json.hpp"
#include "arbor/navigable.hpp"
#include "arbor/pipeline.hpp"
#include "arbor/service.hpp"
#include "arbor/tabular.hpp"
#include "arbor/tactile.hpp"
#include "httplib.h"
#include "json.hpp"
#include "support/fixtures.hpp"
#include "support/markup.hpp"
#include "support/nav_oracle.hpp"
#include "support/process.hpp"
#include "support/tactile_checks.hpp"
#include "support/trees.hpp"

using namespace arbor;
namespace t = arbor::testing;
namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

// Collects failures for one criterion; only the first few are kept.
struct Faults {
  std::vector<std::string> items;
  std::size_t total = 0;

  void add(const std::string& what) {
    if (items.size() < 5) items.push_back(what);
    ++total;
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) add(what);
  }
};

Ir compile_text(const std::string& text, Language lang = Language::mermaid,
                Structure s = Structure::binary_tree) {
  return compile_source(SourceSpec{text, lang, s, {}});
}

BinaryTree teaser() { return std::get<BinaryTree>(compile_text(t::kTeaser)); }

std::string show(const NavState& st) {
  std::string s = st.cursor + "{";
  for (const auto& e : st.expanded) s += e + ",";
  return s + "}";
}

std::string join(const std::vector<std::string>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
  return s + "]";
}

std::size_t count_matches(const std::string& text, const std::regex& re) {
  return static_cast<std::size_t>(
      std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

// 1. Mermaid and DOT forms of the same tree give the same canonical IR.
void criterion_1(Faults& f) {
  const auto start = std::chrono::steady_clock::now();
  const std::string a = to_json(compile_text(t::kFig4a));
  const std::string b = to_json(compile_text(t::kFig4b, Language::dot));
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  f.expect(a == b, "IR JSON differs:\n  " + a + "\n  " + b);
  f.expect(seconds < 1.0, "took " + std::to_string(seconds) + " s");
}

// 2. Default description of the teaser tree.
void criterion_2(Faults& f) {
  const std::string want = "This binary tree contains 6 nodes and 5 edges. The root node is 3.";
  const std::string got = describe(Ir{teaser()});
  f.expect(got == want, "got \"" + got + "\"");
}

// 3. Tree table columns and parent/child agreement against the generator.
void criterion_3(Faults& f) {
  const std::vector<std::string> columns{"Value", "Parent", "Position", "Left Child",
                                         "Right Child"};
  f.expect(emit_table(Ir{teaser()}).column_names == columns, "teaser columns");

  std::mt19937 rng(1003);
  for (int i = 0; i < 200; ++i) {
    const auto c = t::random_distinct_case(rng, 15);
    const auto doc = emit_table(Ir{t::compile_case(c)});
    const auto parent = t::parents(c.shape);
    f.expect(doc.column_names == columns, "columns on tree " + std::to_string(i));
    if (doc.rows.size() != c.values.size()) {
      f.add("row count on tree " + std::to_string(i));
      continue;
    }
    auto index_of = [&](const std::string& v) {
      return static_cast<int>(std::find(c.values.begin(), c.values.end(), v) - c.values.begin());
    };
    auto cell = [&](int node) { return node < 0 ? std::string("None") : c.values[node]; };
    for (const auto& row : doc.rows) {
      const int v = index_of(row[0]);
      if (v >= c.shape.size()) {
        f.add("unknown value " + row[0]);
        continue;
      }
      const int p = parent[v];
      const std::string pos = p < 0 ? "root" : (c.shape.left[p] == v ? "left" : "right");
      const std::vector<std::string> want{row[0], cell(p), pos, cell(c.shape.left[v]),
                                          cell(c.shape.right[v])};
      f.expect(row == want, "tree " + std::to_string(i) + " row " + join(row) + " want " +
                                join(want));
    }
    // Duality read off the table alone.
    for (const auto& row : doc.rows) {
      for (int side = 0; side < 2; ++side) {
        if (row[3 + side] == "None") continue;
        const auto kid = std::find_if(doc.rows.begin(), doc.rows.end(),
                                      [&](const auto& r) { return r[0] == row[3 + side]; });
        f.expect(kid != doc.rows.end() && (*kid)[1] == row[0] &&
                     (*kid)[2] == (side == 0 ? "left" : "right"),
                 "child row disagrees with parent row " + row[0]);
      }
    }
  }
}

// 4. Keyboard navigation.
void criterion_4(Faults& f) {
  const auto tree = teaser();
  using C = NavCommand;
  struct Step {
    NavCommand cmd;
    NavState want;
  };
  const Step script[] = {
      {C::up, {"A", {"A"}}},
      {C::right_right, {"B", {"A"}}},
      {C::down, {"E", {"A"}}},
      {C::down, {"E", {"A"}}},
      {C::right_right, {"F", {"A", "E"}}},
      {C::up, {"D", {"A", "B", "E"}}},
      {C::up, {"C", {"A", "B", "E"}}},
      {C::up, {"C", {"A", "B", "E"}}},
      {C::right_right, {"C", {"A", "B", "E"}}},
      {C::left_left, {"B", {"A", "B", "E"}}},
      {C::left_left, {"A", {"A"}}},
      {C::left_left, {"A", {"A"}}},
      {C::right_right, {"B", {"A"}}},
      {C::right_right, {"C", {"A", "B"}}},
      {C::down, {"D", {"A", "B"}}},
      {C::down, {"F", {"A", "B", "E"}}},
  };
  NavState st = initial_state(tree);
  f.expect(st == NavState{"A", {"A"}}, "initial state " + show(st));
  int n = 0;
  for (const auto& step : script) {
    ++n;
    st = nav_step(tree, st, step.cmd);
    f.expect(st == step.want, "script step " + std::to_string(n) + ": " + show(st) + " want " +
                                  show(step.want));
  }

  constexpr NavCommand all[] = {C::right_right, C::left_left, C::up, C::down};
  std::mt19937 rng(1004);
  for (int i = 0; i < 200; ++i) {
    const auto c = t::random_case(rng, 15);
    const auto tree_i = t::compile_case(c);
    const t::NavOracle oracle(c.shape);
    const std::string tag = "tree " + std::to_string(i);

    // Random walk: state stays valid, matches the model, and a drill-down
    // followed by a climb returns to where it started.
    NavState s = initial_state(tree_i);
    f.expect(oracle.valid(s), tag + " initial state");
    for (int k = 0; k < 60; ++k) {
      const NavCommand cmd = all[std::uniform_int_distribution<int>(0, 3)(rng)];
      const NavState next = nav_step(tree_i, s, cmd);
      f.expect(oracle.valid(next), tag + " invalid state " + show(next));
      f.expect(next == oracle.step(s, cmd), tag + " model mismatch at " + show(s));
      if (oracle.internal(oracle.id(s.cursor))) {
        const NavState back =
            nav_step(tree_i, nav_step(tree_i, s, C::right_right), C::left_left);
        f.expect(back.cursor == s.cursor, tag + " right_right/left_left from " + s.cursor);
      }
      s = next;
    }

    // Every node can be reached from the initial state.
    std::set<std::pair<std::string, std::set<std::string>>> seen;
    std::set<std::string> cursors;
    std::deque<NavState> queue{initial_state(tree_i)};
    while (!queue.empty() && cursors.size() < tree_i.nodes.size()) {
      const NavState cur = queue.front();
      queue.pop_front();
      if (!seen.insert({cur.cursor, cur.expanded}).second) continue;
      cursors.insert(cur.cursor);
      for (auto cmd : all) queue.push_back(nav_step(tree_i, cur, cmd));
    }
    f.expect(cursors.size() == tree_i.nodes.size(), tag + " unreachable nodes");
  }
}

// 5. check_bst against the all-descendant brute force.
void criterion_5(Faults& f) {
  std::size_t cases = 0;
  auto check = [&](const t::Shape& shape, const std::vector<std::int64_t>& values) {
    t::TreeCase c{shape, {}};
    for (auto v : values) c.values.push_back(std::to_string(v));
    const auto report = check_bst(t::compile_case(c));
    std::set<int> got;
    for (const auto& v : report.violations) got.insert(std::stoi(v.node_id.substr(1)));
    const auto want = t::bst_violators(shape, values);
    ++cases;
    if (got != want || report.holds != want.empty()) {
      std::string vals;
      for (const auto& v : c.values) vals += v + " ";
      f.add("disagreement on values (preorder) " + vals);
    }
  };

  std::mt19937 rng(1005);
  std::uniform_int_distribution<int> value(1, 7);
  for (int n = 1; n <= 7; ++n) {
    for (const auto& shape : t::all_shapes(n)) {
      if (n <= 4) {
        // Every labeling.
        std::vector<std::int64_t> v(n, 1);
        while (true) {
          check(shape, v);
          int k = 0;
          while (k < n && v[k] == 7) v[k++] = 1;
          if (k == n) break;
          ++v[k];
        }
      } else {
        for (int r = 0; r < 24; ++r) {
          std::vector<std::int64_t> v(n);
          for (auto& x : v) x = value(rng);
          check(shape, v);
        }
      }
    }
  }
  f.expect(cases >= 10000, "only " + std::to_string(cases) + " cases");

  // 5 with left child 3 whose right child is 7: locally fine, globally not.
  const auto tree =
      std::get<BinaryTree>(compile_text("flowchart TD\nA((5)) -->|L| B((3))\nB -->|R| C((7))\n"));
  const auto report = check_bst(tree);
  f.expect(!report.holds, "5 / 3 \\ 7 accepted");
  f.expect(report.violations ==
               std::vector<BstViolation>{{"C", Bound::upper, 5, "A"}},
           "5 / 3 \\ 7 violation record");
  std::cout << "  (" << cases << " cases)\n";
}

// 6. Binary-search walkthrough.
void criterion_6(Faults& f) {
  const auto tree = teaser();
  auto values = [](const std::vector<SearchTraceStep>& tr) {
    std::vector<std::string> v;
    for (const auto& s : tr) v.push_back(s.value);
    return v;
  };
  const auto t5 = binary_search_trace(tree, 5);
  f.expect(values(t5) == std::vector<std::string>{"3", "6", "4"}, "target 5 path " +
                                                                       join(values(t5)));
  f.expect(!t5.empty() && t5.back().decision == SearchDecision::dead_end, "target 5 ending");
  f.expect(t5.size() == 3 && t5[0].decision == SearchDecision::go_right &&
               t5[1].decision == SearchDecision::go_left,
           "target 5 decisions");
  const auto t3 = binary_search_trace(tree, 3);
  f.expect(t3.size() == 1 && t3[0].node_id == "A" && t3[0].decision == SearchDecision::found,
           "target 3");
  const auto t0 = binary_search_trace(tree, 0);
  f.expect(values(t0) == std::vector<std::string>{"3", "1", "0"}, "target 0 path " +
                                                                       join(values(t0)));
  f.expect(!t0.empty() && t0.back().decision == SearchDecision::found, "target 0 ending");

  std::mt19937 rng(1006);
  for (int i = 0; i < 200; ++i) {
    const auto c = t::random_case(rng, 15, 0, 20);
    const auto tree_i = t::compile_case(c);
    std::vector<std::int64_t> vals;
    for (const auto& v : c.values) vals.push_back(std::stoll(v));
    const int height = t::levels(c.shape) - 1;
    for (std::int64_t target = -1; target <= 21; ++target) {
      const auto trace = binary_search_trace(tree_i, target);
      const auto want = t::search_path(c.shape, vals, target);
      std::vector<int> got;
      for (const auto& s : trace) got.push_back(std::stoi(s.node_id.substr(1)));
      f.expect(static_cast<int>(trace.size()) <= height + 1, "trace longer than height + 1");
      f.expect(got == want.path, "trace path differs from the oracle");
      f.expect(!trace.empty() && (trace.back().decision == SearchDecision::found) == want.found,
               "trace ending differs from the oracle");
    }
  }
}

// 7. Tactile layout and braille.
void criterion_7(Faults& f) {
  const auto b37 = transcribe_braille("37");
  f.expect(b37.cells == std::vector<char32_t>{U'⠼', U'⠉', U'⠛'}, "\"37\" -> " + b37.text());
  try {
    transcribe_braille("1234");
    f.add("\"1234\" transcribed");
  } catch (const Error& e) {
    f.expect(e.code() == ErrorCode::LabelTooLong, "\"1234\" raised " + std::string(e.what()));
  }

  const TactileConfig cfg;
  auto check_doc = [&](const BinaryTree& tree, const TactileDoc& doc, const std::string& tag) {
    for (const auto& x : t::tree_layout_faults(tree, doc, cfg)) f.add(tag + ": " + x);
    for (const auto& x : t::svg_faults(doc, tree.nodes.size(), tree.edges.size(), cfg)) {
      f.add(tag + ": " + x);
    }
    f.expect(emit_tactile(Ir{tree}, cfg).svg == doc.svg, tag + ": second run differs");
    f.expect(emit_tactile(from_json(to_json(Ir{tree})), cfg).svg == doc.svg,
             tag + ": JSON round trip differs");
  };

  // Unrestricted random trees: each either lays out cleanly or is too big
  // for the page by the slot arithmetic.
  std::mt19937 rng(1007);
  int fitted = 0, overflowed = 0;
  for (int i = 0; i < 200; ++i) {
    const auto c = t::random_case(rng, 15);
    const auto tree = t::compile_case(c);
    const bool too_big = t::oracle_overflows(c.shape, cfg);
    const std::string tag = "random tree " + std::to_string(i);
    try {
      const auto doc = layout_tree(tree, cfg);
      f.expect(!too_big, tag + ": laid out although it cannot fit");
      check_doc(tree, doc, tag);
      ++fitted;
    } catch (const Error& e) {
      f.expect(e.code() == ErrorCode::PageOverflow && too_big,
               tag + ": unexpected " + std::string(e.what()));
      ++overflowed;
    }
  }
  // Trees that fit the page.
  for (int i = 0; i < 200; ++i) {
    const auto c = t::random_fitting_case(rng, 15);
    const auto tree = t::compile_case(c);
    const std::string tag = "fitting tree " + std::to_string(i);
    try {
      check_doc(tree, layout_tree(tree, cfg), tag);
    } catch (const Error& e) {
      f.add(tag + ": " + e.what());
    }
  }
  std::cout << "  (unrestricted: " << fitted << " laid out, " << overflowed
            << " page overflows; plus 200 fitting trees)\n";

  // Byte-identical across separate processes.
  t::TempDir dir;
  for (const char* name : {"one.svg", "two.svg"}) {
    const auto r = t::run_process({ARBORC_PATH, "compile", "--lang", "mermaid", "--structure",
                                   "binary-tree", "--format", "tactile", "-o", name},
                                  t::kTeaser, dir.path());
    f.expect(r.status == 0, std::string("arborc for ") + name + ": " + r.err);
  }
  if (fs::exists(dir.path() / "one.svg") && fs::exists(dir.path() / "two.svg")) {
    f.expect(t::slurp(dir.path() / "one.svg") == t::slurp(dir.path() / "two.svg"),
             "SVG differs between processes");
  }
}

// 8. Every output of one request describes the same number of nodes.
void criterion_8(Faults& f) {
  std::mt19937 rng(1008);
  const std::regex item("role=\"(treeitem|listitem)\"");
  for (int i = 0; i < 50; ++i) {
    CompileRequest req;
    req.formats = {OutputFormat::tabular, OutputFormat::navigable, OutputFormat::tactile,
                   OutputFormat::ir, OutputFormat::description};
    std::size_t n = 0;
    if (i % 5 == 4) {
      n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
      req.structure = Structure::array;
      req.source = "flowchart LR\n";
      for (std::size_t k = 0; k < n; ++k) {
        const std::string node =
            "E" + std::to_string(k) + "[" + std::to_string(rng() % 100) + "]";
        req.source += k == 0 ? node : " --- " + node;
      }
      req.source += "\n";
    } else {
      const auto c = t::random_fitting_case(rng, 15);
      n = c.values.size();
      req.language = i % 2 ? Language::dot : Language::mermaid;
      req.source = i % 2 ? t::to_dot(c) : t::to_mermaid(c, &rng);
    }
    const std::string tag = "input " + std::to_string(i) + " (" + std::to_string(n) + " nodes)";
    try {
      const auto b = compile_request(req);
      const auto ir = Json::parse(b.ir_json);
      const std::size_t ir_count =
          (ir.contains("nodes") ? ir["nodes"] : ir["elements"]).size();

      const auto table = t::parse_xml(b.tabular->html);
      const std::size_t rows = t::find_all(table, "tr").size() - 1;

      const std::size_t items = count_matches(b.navigable->html, item);
      const auto model = Json::parse(b.navigable->nav_model);
      const std::size_t model_items =
          (model.contains("nodes") ? model["nodes"] : model["elements"]).size();

      const auto svg = t::parse_xml(b.tactile->svg);
      const std::size_t glyphs = t::find_all(svg, "circle").size() + t::find_all(svg, "rect").size();

      const std::vector<std::size_t> counts{ir_count, rows, items, model_items, glyphs};
      f.expect(std::all_of(counts.begin(), counts.end(), [&](auto k) { return k == n; }),
               tag + ": ir/table/nav/model/glyphs = " + std::to_string(ir_count) + "/" +
                   std::to_string(rows) + "/" + std::to_string(items) + "/" +
                   std::to_string(model_items) + "/" + std::to_string(glyphs));
    } catch (const std::exception& e) {
      f.add(tag + ": " + e.what());
    }
  }
}

// 9. Command line and HTTP service.
void criterion_9(Faults& f) {
  t::TempDir dir;
  auto run = [&](std::vector<std::string> args, const std::string& input) {
    args.insert(args.begin(), ARBORC_PATH);
    return t::run_process(args, input, dir.path());
  };
  const auto ok = run({"compile", "--lang", "mermaid", "--structure", "binary-tree", "--format",
                       "all", "--out-dir", "out"},
                      t::kFig4a);
  f.expect(ok.status == 0, "valid input exited " + std::to_string(ok.status) + ": " + ok.err);
  const auto bad = run({"compile", "--lang", "mermaid", "--structure", "binary-tree", "--format",
                        "all"},
                       "flowchart TD\nA((1)) -->\n");
  f.expect(bad.status == 1, "malformed input exited " + std::to_string(bad.status));
  f.expect(bad.err.find("\"line\":2") != std::string::npos, "no line in " + bad.err);
  const auto usage = run({"compile", "--lang", "plantuml", "--structure", "binary-tree",
                          "--format", "all"},
                         t::kFig4a);
  f.expect(usage.status == 2, "bad flag exited " + std::to_string(usage.status));

  // The service with no editor assets at all.
  Service service;
  const int port = service.bind(0);
  if (port <= 0) {
    f.add("service did not bind");
    return;
  }
  std::thread runner([&] { service.run(); });
  for (int i = 0; i < 200 && !service.is_running(); ++i) {
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
  }
  httplib::Client client("127.0.0.1", port);
  client.set_read_timeout(10, 0);
  const Json request{{"source", t::kFig4a},
                     {"language", "mermaid"},
                     {"structure", "binary_tree"},
                     {"format", {"tabular", "navigable", "tactile", "ir", "description"}}};
  if (auto res = client.Post("/api/compile", request.dump(), "application/json")) {
    f.expect(res->status == 200, "compile returned " + std::to_string(res->status));
    const auto j = Json::parse(res->body, nullptr, false);
    for (const char* key : {"ir_json", "description", "tabular", "navigable", "tactile"}) {
      f.expect(j.is_object() && j.contains(key), std::string("response lacks ") + key);
    }
  } else {
    f.add("no response from /api/compile");
  }
  Json malformed = request;
  malformed["source"] = "flowchart TD\nA((1))\nA --> B((2)\n";
  if (auto res = client.Post("/api/compile", malformed.dump(), "application/json")) {
    f.expect(res->status == 422, "malformed source returned " + std::to_string(res->status));
    const auto j = Json::parse(res->body, nullptr, false);
    f.expect(j.is_object() && j["line"].is_number_integer() && j["column"].is_number_integer(),
             "422 body lacks line/column: " + res->body);
  } else {
    f.add("no response for malformed source");
  }
  if (auto res = client.Get("/")) {
    f.expect(res->status == 200, "index returned " + std::to_string(res->status));
  } else {
    f.add("no response for /");
  }
  service.stop();
  runner.join();
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Faults&)>> criteria[] = {
      {"Mermaid and DOT give byte-identical IR JSON in under 1 s", criterion_1},
      {"teaser description", criterion_2},
      {"tree table columns and parent/child duality on 200 random trees", criterion_3},
      {"scripted navigation and navigation invariants on 200 random trees", criterion_4},
      {"check_bst matches the brute-force oracle on all shapes up to 7 nodes", criterion_5},
      {"binary-search traces", criterion_6},
      {"tactile layout invariants, braille, deterministic SVG", criterion_7},
      {"node counts agree across all outputs for 50 random inputs", criterion_8},
      {"CLI exit codes and HTTP compile service", criterion_9},
  };
  int failed = 0;
  int n = 0;
  for (const auto& [name, run] : criteria) {
    ++n;
    Faults f;
    try {
      run(f);
    } catch (const std::exception& e) {
      f.add(std::string("exception: ") + e.what());
    }
    const bool pass = f.total == 0;
    std::cout << (pass ? "PASS" : "FAIL") << " " << n << " " << name << "\n";
    for (const auto& item : f.items) std::cout << "  " << item << "\n";
    if (f.total > f.items.size()) {
      std::cout << "  ... " << f.total - f.items.size() << " more\n";
    }
    if (!pass) ++failed;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << (9 - failed) << "/9\n";
  return failed ? 1 : 0;
}
