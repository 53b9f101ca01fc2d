#include "hfp/error.hpp"

namespace hfp {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::IntegerOverflow: return "IntegerOverflow";
    case ErrorCode::InfiniteGroup: return "InfiniteGroup";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::MixedParents: return "MixedParents";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NonCanonicalIndex: return "NonCanonicalIndex";
    case ErrorCode::InvalidLensParameters: return "InvalidLensParameters";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DependentSpan: return "DependentSpan";
    case ErrorCode::NonPrimitiveSpan: return "NonPrimitiveSpan";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace hfp
