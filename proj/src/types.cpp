#include "dgstat/types.hpp"

namespace dgstat {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kDuplicateElement: return "duplicate element";
    case ErrorKind::kMissingElement: return "missing element";
    case ErrorKind::kNonzeroValue: return "nonzero value";
    case ErrorKind::kUnderflow: return "underflow";
    case ErrorKind::kDuplicateVertex: return "duplicate vertex";
    case ErrorKind::kMissingVertex: return "missing vertex";
    case ErrorKind::kNonzeroDegree: return "nonzero degree";
    case ErrorKind::kSelfLoop: return "self-loop";
    case ErrorKind::kDuplicateEdge: return "duplicate edge";
    case ErrorKind::kMissingEdge: return "missing edge";
    case ErrorKind::kColorOutOfRange: return "color out of range";
    case ErrorKind::kColorDisabled: return "colors disabled";
    case ErrorKind::kFeatureDisabled: return "feature disabled";
    case ErrorKind::kOutOfRange: return "out of range";
    case ErrorKind::kInvalidArgument: return "invalid argument";
    case ErrorKind::kInternalInconsistency: return "internal inconsistency";
  }
  return "unknown error";
}

}  // namespace dgstat
