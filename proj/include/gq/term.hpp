#pragma once

#include "gq/value.hpp"

#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace gq {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

enum class CompareOp { Eq, Leq };
enum class QuantKind { Forall, Exists };

struct Const {
  Value value;
};

struct Var {
  std::string name;
};

struct Apply {
  std::string fn;
  std::vector<TermPtr> args;
};

struct Compare {
  CompareOp op;
  TermPtr lhs;
  TermPtr rhs;
};

/// Parameterized quantifier `Q(param) var:sort body`. The parameter is
/// evaluated in the enclosing scope; `var` is bound only in `body`.
struct Quant {
  QuantKind kind;
  TermPtr param;
  std::string var;
  SortName sort;
  TermPtr body;
};

struct Count {
  std::string var;
  SortName sort;
  TermPtr body;
};

struct Sum {
  std::string var;
  SortName sort;
  TermPtr body;
};

struct Term {
  std::variant<Const, Var, Apply, Compare, Quant, Count, Sum> node;
};

/// Deep structural equality.
bool operator==(const Term& a, const Term& b);
bool same_term(const TermPtr& a, const TermPtr& b);

TermPtr make_const(Value v);
TermPtr make_var(std::string name);
TermPtr make_apply(std::string fn, std::vector<TermPtr> args);
TermPtr make_compare(CompareOp op, TermPtr lhs, TermPtr rhs);
TermPtr make_quant(QuantKind kind, TermPtr param, std::string var, SortName sort,
                   TermPtr body);
TermPtr make_count(std::string var, SortName sort, TermPtr body);
TermPtr make_sum(std::string var, SortName sort, TermPtr body);

struct Signature {
  std::vector<SortName> arg_sorts;
  SortName result_sort;

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// A term-defined function `(sig)(params) def body`.
struct FunctionDef {
  Signature signature;
  std::vector<std::string> params;
  TermPtr body;
};

bool operator==(const FunctionDef& a, const FunctionDef& b);

struct Declaration {
  std::string name;
  FunctionDef def;
};

struct Query {
  TermPtr term;
};

std::set<std::string> free_vars(const Term& term);

}  // namespace gq
