#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace arbor {

// 1-based line/column into the source text.
struct SourcePos {
  int line = 1;
  int column = 1;

  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

struct SourceSpan {
  SourcePos begin;
  SourcePos end;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class ErrorCode {
  EmptySource,
  SyntaxError,
  UnsupportedConstruct,
  StructureMismatch,
  ConflictingDeclaration,
  EmptyDiagram,
  NotATree,
  ArityExceeded,
  PositionConflict,
  NotAChain,
  UnsupportedStructure,
  UnknownNode,
  NonNumericValue,
  EmptyTree,
  JsonSyntax,
  SchemaViolation,
  IrViolation,
  EmptyLabel,
  LabelTooLong,
  UntranscribableCharacter,
  PageOverflow,
  InvalidConfig,
  BadRequest,
  SourceTooLarge,
};

std::string_view to_string(ErrorCode code);

/// Every failure surfaced by the compiler. Carries a stable code and, when the
/// failure can be traced to source text, the position where it starts.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message,
        std::optional<SourcePos> pos = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  const std::optional<SourcePos>& position() const noexcept { return pos_; }

  /// `{"code":..,"message":..,"line":..,"column":..}` on a single line.
  /// line/column are null when the error has no source position.
  std::string to_json() const;

 private:
  ErrorCode code_;
  std::optional<SourcePos> pos_;
};

}  // namespace arbor
