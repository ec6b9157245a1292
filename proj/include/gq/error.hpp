#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gq {

enum class ErrorKind {
  DuplicateSort,
  DuplicateElement,
  DuplicateSymbol,
  UnknownSort,
  UnknownSymbol,
  UnboundVariable,
  SortMismatch,
  ArityMismatch,
  WFCViolation,
  RecursiveDeclaration,
  NoValue,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Raised by the builder, the sort checker and the parser. Evaluation
/// reports its failures as values instead (see EvalOutcome).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct SourcePos {
  int line = 1;
  int column = 1;

  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

class ParseError : public Error {
 public:
  ParseError(SourcePos pos, std::string expected, std::string found);

  SourcePos pos() const noexcept { return pos_; }
  const std::string& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  SourcePos pos_;
  std::string expected_;
  std::string found_;
};

}  // namespace gq
