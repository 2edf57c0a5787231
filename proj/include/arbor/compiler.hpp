#pragma once

#include "arbor/ast.hpp"
#include "arbor/ir.hpp"
#include "arbor/source.hpp"

namespace arbor {

// Child positions come from an explicit L/R edge label when present,
// otherwise from declaration order: first child left, second right. A sole
// unlabeled child is a left child.
BinaryTree compile_tree(const DiagramAst& ast, const Meta& meta);

// Elements follow the chain from its unique head. Edges are read in the
// direction they were written, `---` included.
Array compile_array(const DiagramAst& ast, const Meta& meta);

// Dispatches on the declared structure. Linked lists and 2D arrays have no
// source syntax and raise UnsupportedStructure.
Ir compile(const DiagramAst& ast, Structure structure, const Meta& meta);

// parse + compile.
Ir compile_source(const SourceSpec& spec);

}  // namespace arbor
