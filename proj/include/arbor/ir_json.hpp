#pragma once

#include <string>
#include <string_view>

#include "arbor/ir.hpp"

namespace arbor {

// Canonical IR JSON: compact, `meta` first (type, title, description), then
// nodes / elements / rows, then edges. Object keys appear in the order the IR
// structs declare their fields; absent title/description are null.
//
//   {"meta":{"type":"binary_tree","title":null,"description":null},
//    "nodes":[{"id":"A","value":"1","depth":0,"position":"root","is_leaf":false},...],
//    "edges":[{"parent":"A","child":"B","position":"left"},...]}
std::string to_json(const Ir& ir);

// Parses and validates. Throws JsonSyntax for malformed text, SchemaViolation
// for wrong shapes/types/enum values, IrViolation when validate_ir objects.
Ir from_json(std::string_view text);

}  // namespace arbor
