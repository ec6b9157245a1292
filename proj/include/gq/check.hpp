#pragma once

#include "gq/structure.hpp"
#include "gq/term.hpp"

#include <map>
#include <string>
#include <variant>

namespace gq {

using VarSorts = std::map<std::string, SortName, std::less<>>;

/// Infers the value sort of `term`. Quantifier terms are TV-sorted; counts
/// and sums are Number-sorted. Nested quantifiers are WFC-checked on the way.
/// Throws UnknownSymbol, UnknownSort, UnboundVariable, ArityMismatch,
/// SortMismatch or WFCViolation.
SortName sort_of(const Term& term, const VarSorts& var_sorts, const Structure& structure);

struct WfcViolation {
  SortName param_sort;
  SortName body_sort;
};

/// `std::monostate` when the quantifier's parameter and body share a sort.
/// Throws for errors unrelated to WFC (unknown symbols etc.).
std::variant<std::monostate, WfcViolation> check_wfc(const Quant& q, const VarSorts& var_sorts,
                                                     const Structure& structure);

/// Classical `Q x:s t`, i.e. `Q(_True) x:s t`. Throws SortMismatch unless
/// `body` is TV-sorted.
TermPtr desugar_classical(QuantKind kind, std::string var, SortName sort, TermPtr body,
                          const VarSorts& var_sorts, const Structure& structure);

/// Returns a copy of `term` whose element literals carry their sort. Throws
/// UnknownSymbol for an id no sort declares.
TermPtr resolve_elements(const TermPtr& term, const Structure& structure);

/// Throws UnboundVariable if the term has free variables.
void check_closed(const Term& term);

}  // namespace gq
