#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "twsep/vertex_set.hpp"

namespace twsep {

enum class ErrorCode {
  kSelfLoop,
  kDuplicateEdge,
  kVertexOutOfRange,
  kInvalidSeparation,
  kNotSeparated,
  kSizeLimitExceeded,
  kEmptyW,
  kWidthOutOfRange,
  kEmptyTree,
  kInvalidInput,
  kOracleFailure,
  kRecursionGuard,
  kWBalancedUnavailable,
  kParseError,
  kInvalidDecomposition,
  kPreconditionFailed,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this type (or a subclass that
// carries a certificate).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised when a balanced-separation oracle cannot deliver a separation of the
// requested order. With an exact oracle the witness is a vertex set whose
// induced subgraph has no balanced separation of that order, which certifies
// sep(G) > a.
class OracleFailure : public Error {
 public:
  OracleFailure(VertexSet witness, std::size_t bound, bool certified);

  const VertexSet& witness() const noexcept { return witness_; }
  std::size_t bound() const noexcept { return bound_; }
  bool certified() const noexcept { return certified_; }

 private:
  VertexSet witness_;
  std::size_t bound_;
  bool certified_;
};

// The W-balanced construction could not find a W-balanced separation of order <= a.
class WBalancedUnavailable : public Error {
 public:
  WBalancedUnavailable(VertexSet w, std::size_t bound);

  const VertexSet& w() const noexcept { return w_; }

 private:
  VertexSet w_;
};

}  // namespace twsep
