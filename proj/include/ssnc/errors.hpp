#ifndef SSNC_ERRORS_HPP
#define SSNC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ssnc {

enum class ErrorKind {
  SelfLoop,
  TwoCycle,
  OutOfRange,
  EmptyGraph,
  BadParam,
  HypothesisViolated,
  ParseError,
  Unsupported,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Every recoverable failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failures carry the 1-based input line (0 when not line oriented).
/// Graph constructor errors met while parsing keep their own kind.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what, ErrorKind kind = ErrorKind::ParseError)
      : Error(kind,
              line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace ssnc

#endif  // SSNC_ERRORS_HPP
