#pragma once

#include <string>
#include <vector>

#include "arbor/ir.hpp"
#include "arbor/tactile.hpp"
#include "support/trees.hpp"

namespace arbor::testing {

// Each returns human-readable faults; empty means the invariant holds.

// Layered tree invariants on the geometry: monotone depth, in-order
// x-separation, same-row clearance, page containment, labels inside their
// circles, arrow tips on the child outline.
std::vector<std::string> tree_layout_faults(const BinaryTree& tree, const TactileDoc& doc,
                                            const TactileConfig& cfg);

// Strip invariants: abutting boxes, value centred inside, index beneath,
// containment.
std::vector<std::string> array_layout_faults(const Array& array, const TactileDoc& doc,
                                             const TactileConfig& cfg);

// The markup itself: well-formed XML, one circle per node (or rect per
// element), one marked line per edge, every braille label in the legend,
// every coordinate inside the margins.
std::vector<std::string> svg_faults(const TactileDoc& doc, std::size_t glyphs, std::size_t edges,
                                    const TactileConfig& cfg);

// True when the tree cannot fit the page at the configured sizes, worked
// out from the slot rule alone.
bool oracle_overflows(const Shape& s, const TactileConfig& cfg);

}  // namespace arbor::testing
