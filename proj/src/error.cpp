#include "paradox/error.hpp"

namespace paradox {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::IsolatePresent: return "IsolatePresent";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::AttributeLengthMismatch: return "AttributeLengthMismatch";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::RetryLimitExceeded: return "RetryLimitExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownNodeInMetadata: return "UnknownNodeInMetadata";
    case ErrorCode::MissingColumn: return "MissingColumn";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

}  // namespace paradox
