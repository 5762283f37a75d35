#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace invtqft {

enum class ErrorKind {
  ParseError,
  MalformedExpression,
  InvalidArgument,
  EnumerationLimit,
  UnsupportedDegree,
  BudgetExceeded,
  NotInCatalog,
  ObstructionUndetermined,
  UndeterminedCohomology,
  HypothesisViolated,
  UnsupportedK,
  InvalidModularData,
  ParityViolation,
};

std::string_view to_string(ErrorKind kind);

// Every failure in the library is reported through this type; `kind()` is the
// machine-readable reason and what() the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  // Undetermined/unsupported results are mathematically open rather than
  // usage mistakes; the CLI maps them to a distinct exit code.
  bool is_undetermined() const noexcept;

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(ErrorKind::ParseError,
              message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace invtqft
