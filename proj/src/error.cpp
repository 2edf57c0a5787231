#include "arbor/error.hpp"

#include "json.hpp"

namespace arbor {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptySource: return "EmptySource";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnsupportedConstruct: return "UnsupportedConstruct";
    case ErrorCode::StructureMismatch: return "StructureMismatch";
    case ErrorCode::ConflictingDeclaration: return "ConflictingDeclaration";
    case ErrorCode::EmptyDiagram: return "EmptyDiagram";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::ArityExceeded: return "ArityExceeded";
    case ErrorCode::PositionConflict: return "PositionConflict";
    case ErrorCode::NotAChain: return "NotAChain";
    case ErrorCode::UnsupportedStructure: return "UnsupportedStructure";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::NonNumericValue: return "NonNumericValue";
    case ErrorCode::EmptyTree: return "EmptyTree";
    case ErrorCode::JsonSyntax: return "JsonSyntax";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::IrViolation: return "IrViolation";
    case ErrorCode::EmptyLabel: return "EmptyLabel";
    case ErrorCode::LabelTooLong: return "LabelTooLong";
    case ErrorCode::UntranscribableCharacter: return "UntranscribableCharacter";
    case ErrorCode::PageOverflow: return "PageOverflow";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::BadRequest: return "BadRequest";
    case ErrorCode::SourceTooLarge: return "SourceTooLarge";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string message, std::optional<SourcePos> pos)
    : std::runtime_error(std::move(message)), code_(code), pos_(pos) {}

std::string Error::to_json() const {
  nlohmann::ordered_json j;
  j["code"] = std::string(to_string(code_));
  j["message"] = what();
  if (pos_) {
    j["line"] = pos_->line;
    j["column"] = pos_->column;
  } else {
    j["line"] = nullptr;
    j["column"] = nullptr;
  }
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

}  // namespace arbor
