#include "pvg/error.hpp"

namespace pvg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kUnreachableSite: return "UnreachableSite";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kPeriodProductTooLarge: return "PeriodProductTooLarge";
    case ErrorCode::kInconsistentWalk: return "InconsistentWalk";
    case ErrorCode::kIllegalAction: return "IllegalAction";
    case ErrorCode::kNotIdMode: return "NotIdMode";
    case ErrorCode::kParameterViolation: return "ParameterViolation";
    case ErrorCode::kNoSuitablePrime: return "NoSuitablePrime";
    case ErrorCode::kNoCoprimePair: return "NoCoprimePair";
    case ErrorCode::kStrategyDidNotHalt: return "StrategyDidNotHalt";
    case ErrorCode::kStateSpaceTooLarge: return "StateSpaceTooLarge";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error(ErrorCode::kParseError,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace pvg
