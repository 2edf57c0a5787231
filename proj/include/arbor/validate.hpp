#pragma once

#include <string>
#include <vector>

#include "arbor/error.hpp"
#include "arbor/ir.hpp"

namespace arbor {

enum class ViolationKind {
  DuplicateId,
  UnknownEndpoint,
  SelfLoop,
  MultipleParents,
  ArityExceeded,
  DuplicatePosition,
  Cycle,
  MultipleRoots,
  DepthMismatch,
  PositionMismatch,
  LeafFlagMismatch,
  IndexMismatch,
  RaggedRows,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<std::string> ids;  // offending element ids, sorted
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Checks every structural invariant of the IR variant. An empty result means
/// the IR is well formed. Derived-property checks (depth, position, leaf
/// flags) only run once the edge relation is known to be a single tree, so a
/// cycle is reported once rather than as a cascade.
std::vector<Violation> validate_ir(const Ir& ir);

/// ErrorCode::IrViolation, carrying the individual violations.
class IrViolationError : public Error {
 public:
  explicit IrViolationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

}  // namespace arbor
