#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pvg {

enum class ErrorCode {
  kInvalidArgument,
  kUnreachableSite,
  kParseError,
  kPeriodProductTooLarge,
  kInconsistentWalk,
  kIllegalAction,
  kNotIdMode,
  kParameterViolation,
  kNoSuitablePrime,
  kNoCoprimePair,
  kStrategyDidNotHalt,
  kStateSpaceTooLarge,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so that
// front-ends can map it to an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse failures additionally carry a 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace pvg
