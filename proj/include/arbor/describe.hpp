#pragma once

#include <string>

#include "arbor/ir.hpp"

namespace arbor {

/// The author's description when one is set, otherwise a one-sentence summary
/// such as "This binary tree contains 6 nodes and 5 edges. The root node is 3."
std::string describe(const Ir& ir);

}  // namespace arbor
