#pragma once

#include "gq/lexer.hpp"
#include "gq/term.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gq {

TermPtr parse_term(std::string_view source);
Declaration parse_declaration(std::string_view source);
Query parse_query(std::string_view source);
/// All `? term ?` queries in a script, in order.
std::vector<Query> parse_queries(std::string_view source);

/// Statements of the model file format.
struct SortStmt {
  SortName name;
  std::vector<std::string> elements;
};
struct DeclareStmt {
  std::string name;
  Signature signature;
};
struct FactStmt {
  std::string name;
  std::vector<TermPtr> args;
  TermPtr value;
};
struct DefaultStmt {
  std::string name;
  TermPtr value;
};

using ModelStmt = std::variant<SortStmt, DeclareStmt, FactStmt, DefaultStmt, Declaration>;

struct LocatedStmt {
  ModelStmt stmt;
  SourcePos pos;
};

std::vector<LocatedStmt> parse_model(std::string_view source);

/// Canonical ASCII rendering; parse_term(print_term(t)) == t.
std::string print_term(const Term& term);
std::string print_signature(const Signature& sig);
std::string print_declaration(const Declaration& decl);

}  // namespace gq
