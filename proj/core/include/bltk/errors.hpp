#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bltk {

enum class ErrorCode {
  OutOfRange,
  InvalidGrid,
  DrasticNotResiduated,
  InvalidRadius,
  InadmissibleRadius,
  ParseError,
  NotAPartialOrder,
  NotALattice,
  TableOutOfRange,
  SignatureMismatch,
  CarrierTooLarge,
  UnboundAtom,
  SyntaxError,
  UnbalancedParens,
  UnknownToken,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Formula text errors, positioned at a 1-based line and column.
class SyntaxError : public Error {
 public:
  SyntaxError(ErrorCode code, std::size_t line, std::size_t column, const std::string& message)
      : Error(code, std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace bltk
