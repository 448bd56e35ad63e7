#include "chaindec/error.hpp"

#include <utility>

namespace chaindec {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SameSideEdge: return "SameSideEdge";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::OverlappingSets: return "OverlappingSets";
    case ErrorCode::CompleteInput: return "CompleteInput";
    case ErrorCode::NotQuasiThreshold: return "NotQuasiThreshold";
    case ErrorCode::DisconnectedInput: return "DisconnectedInput";
    case ErrorCode::BadInstance: return "BadInstance";
    case ErrorCode::InducedP7Found: return "InducedP7Found";
    case ErrorCode::InvalidDecomposition: return "InvalidDecomposition";
    case ErrorCode::MalformedComponents: return "MalformedComponents";
    case ErrorCode::NotDecomposable: return "NotDecomposable";
    case ErrorCode::MalformedTree: return "MalformedTree";
    case ErrorCode::LabelOverflow: return "LabelOverflow";
    case ErrorCode::BadMagic: return "BadMagic";
    case ErrorCode::TruncatedStream: return "TruncatedStream";
    case ErrorCode::InvalidTag: return "InvalidTag";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::RejectionBudgetExceeded: return "RejectionBudgetExceeded";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::vector<VertexId> witness,
             std::size_t line)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      witness_(std::move(witness)),
      line_(line) {}

}  // namespace chaindec
