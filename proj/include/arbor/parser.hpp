#pragma once

#include "arbor/ast.hpp"
#include "arbor/source.hpp"

namespace arbor {

// Mermaid flowchart subset:
//   flowchart TD|TB|LR
//   A((3))            circle node
//   A[37]             square node
//   A --> B((1))      directed edge, operand may declare the node inline
//   A -->|L| B        positional edge label (L / R)
//   A[37] --- B[2]    undirected link, chains allowed
// Statements are separated by newlines or `;`; `%%` starts a comment.
DiagramAst parse_mermaid(const SourceSpec& spec);

// Graphviz DOT subset: a single `digraph` with node statements
// (`A[label="1"]`), edge chains (`A->B->C`) and the `pos="L"|"R"` edge
// attribute. Comments `//`, `/* */` and `#` lines are skipped.
DiagramAst parse_dot(const SourceSpec& spec);

// Dispatches on spec.language.
DiagramAst parse(const SourceSpec& spec);

}  // namespace arbor
