#pragma once

#include "gq/evaluator.hpp"
#include "gq/structure.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace gq {

enum class OutputFormat { Text, JsonLines };

enum class QueryStatus { Ok, NoValue, Error, ParseError };

struct QueryResult {
  std::string query;
  QueryStatus status;
  /// Rendered value, or the message for NoValue and errors.
  std::string text;
};

/// Exit status contribution of one result: 0 ok, 1 evaluation failure,
/// 2 parse error.
int exit_code(QueryStatus status);

/// A query-processing session over a frozen structure.
class Session {
 public:
  explicit Session(OutputFormat format = OutputFormat::Text) : format_(format) {}

  /// Loads another model file on top of everything loaded so far and
  /// refreezes. Throws gq::Error (with file and line) on failure; the session
  /// keeps its previous structure then.
  void load(const std::filesystem::path& path);
  void load_source(std::string_view source);

  const Structure& structure() const { return structure_; }

  /// parse, closedness, sort/WFC check, evaluate, render. Never throws for
  /// bad input.
  QueryResult run_query(const std::string& source);

  /// One line per result in the session's format (no trailing newline).
  std::string format(const QueryResult& r) const;

  const std::vector<QueryResult>& history() const { return history_; }

  std::string list_sorts() const;
  std::string list_functions() const;

  /// Interactive loop until `:quit` or EOF. Returns the exit status (0).
  int repl(std::istream& in, std::ostream& out, bool prompt);

 private:
  StructureBuilder builder_;
  Structure structure_;
  OutputFormat format_;
  std::vector<QueryResult> history_;
};

}  // namespace gq
