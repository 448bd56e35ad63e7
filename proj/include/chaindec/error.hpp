#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chaindec {

using VertexId = std::uint32_t;

enum class ErrorCode {
  InvalidArgument,
  SameSideEdge,
  UnknownVertex,
  SelfLoop,
  OverlappingSets,
  CompleteInput,
  NotQuasiThreshold,
  DisconnectedInput,
  BadInstance,
  InducedP7Found,
  InvalidDecomposition,
  MalformedComponents,
  NotDecomposable,
  MalformedTree,
  LabelOverflow,
  BadMagic,
  TruncatedStream,
  InvalidTag,
  ParseError,
  CapExceeded,
  RejectionBudgetExceeded,
};

std::string_view to_string(ErrorCode code);

// Every failure in the library surfaces as this exception. Structural
// failures that have a certificate (an induced P7, a P4/C4 in a
// neighbourhood graph) carry its vertices in witness().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<VertexId> witness = {},
        std::size_t line = 0);

  ErrorCode code() const noexcept { return code_; }
  const std::vector<VertexId>& witness() const noexcept { return witness_; }
  // 1-based line number for ParseError, 0 otherwise.
  std::size_t line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::vector<VertexId> witness_;
  std::size_t line_;
};

}  // namespace chaindec
