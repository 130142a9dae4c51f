#include "robustsub/error.hpp"

namespace robustsub {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::ExponentUnsupported: return "ExponentUnsupported";
    case ErrorCode::ExponentOutOfRange: return "ExponentOutOfRange";
    case ErrorCode::GridInfeasible: return "GridInfeasible";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::RegimeViolation: return "RegimeViolation";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::PatternTooLarge: return "PatternTooLarge";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace robustsub
