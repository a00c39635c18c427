#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace paradox {

enum class ErrorCode {
  DuplicateEdge,
  SelfLoop,
  NonPositiveWeight,
  IndexOutOfRange,
  IsolatePresent,
  EmptyGraph,
  AttributeLengthMismatch,
  LengthMismatch,
  SizeLimitExceeded,
  RetryLimitExceeded,
  ParseError,
  UnknownNodeInMetadata,
  MissingColumn,
  InvalidArgument,
  IoError,
  InternalInconsistency,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` identifies the failure and
/// `what()` names the offending entry.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace paradox
