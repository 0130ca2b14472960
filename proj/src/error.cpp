#include "twsep/error.hpp"

namespace twsep {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kInvalidSeparation: return "InvalidSeparation";
    case ErrorCode::kNotSeparated: return "NotSeparated";
    case ErrorCode::kSizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::kEmptyW: return "EmptyW";
    case ErrorCode::kWidthOutOfRange: return "WidthOutOfRange";
    case ErrorCode::kEmptyTree: return "EmptyTree";
    case ErrorCode::kInvalidInput: return "InvalidInput";
    case ErrorCode::kOracleFailure: return "OracleFailure";
    case ErrorCode::kRecursionGuard: return "RecursionGuard";
    case ErrorCode::kWBalancedUnavailable: return "WBalancedUnavailable";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvalidDecomposition: return "InvalidDecomposition";
    case ErrorCode::kPreconditionFailed: return "PreconditionFailed";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

OracleFailure::OracleFailure(VertexSet witness, std::size_t bound, bool certified)
    : Error(ErrorCode::kOracleFailure,
            "no balanced separation of order <= " + std::to_string(bound) +
                (certified ? " exists" : " was found (heuristic, not certified)") +
                " for the subgraph induced by " + witness.to_string()),
      witness_(std::move(witness)),
      bound_(bound),
      certified_(certified) {}

WBalancedUnavailable::WBalancedUnavailable(VertexSet w, std::size_t bound)
    : Error(ErrorCode::kWBalancedUnavailable,
            "no W-balanced separation of order <= " + std::to_string(bound) +
                " for W = " + w.to_string()),
      w_(std::move(w)) {}

}  // namespace twsep
