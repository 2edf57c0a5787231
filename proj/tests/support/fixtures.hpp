#pragma once

// Diagram sources shared by several test binaries.

namespace arbor::testing {

// The same six-node tree written in Mermaid and in DOT.
inline constexpr const char* kFig4a =
    "flowchart TD\nA((1))\nA -->B((2))\nB --> C((3))\nB --> D((4))\nA -->E((5))\nE --> F((6))\n";
inline constexpr const char* kFig4b =
    "digraph G {\n  A [label=\"1\"];\n  B [label=\"2\"];\n  C [label=\"3\"];\n"
    "  D [label=\"4\"];\n  E [label=\"5\"];\n  F [label=\"6\"];\n"
    "  A -> B;\n  B -> C;\n  B -> D;\n  A -> E;\n  E -> F;\n}\n";

// Root 3; 1 (children 0, 2) on its left, 6 (left child 4) on its right.
inline constexpr const char* kTeaser =
    "flowchart TD; A((3)); A -->B((1)); B --> C((0)); B --> D((2)); A -->E((6)); E --> F((4))";

}  // namespace arbor::testing
