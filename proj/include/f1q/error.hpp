#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace f1q {

enum class ErrorCode {
  kInvalidArgument,
  kParse,
  kUnknownVertex,
  kUnknownArrow,
  kDuplicateId,
  kNotQuiverMap,
  kNotWinding,
  kDisconnectedQuiver,
  kNotPseudotree,
  kBaseMismatch,
  kNotClosed,
  kBudgetExceeded,
  kWrongShape,
  kNoBracket,
  kNotEquioriented,
  kNonIndecomposableInput,
  kNotTreeRep,
  kGraphMismatch,
  kNotNice,
  kInvalidSequence,
  kPartialGrading,
  kLoopPresent,
  kNoCertificate,
  kDisconnectedT,
  kNoSink,
  kPreconditionFailed,
};

std::string_view to_string(ErrorCode code);

// All recoverable failures of the library surface as this exception; the code
// lets callers (the CLI in particular) map failures onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace f1q
