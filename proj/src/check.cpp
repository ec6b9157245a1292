#include "gq/check.hpp"

#include "gq/error.hpp"

namespace gq {

namespace {

SortName checked_sort(const Term& term, VarSorts& scope, const Structure& s);

// Binds `var` for the duration of `fn`, restoring any shadowed binding.
template <class Fn>
SortName with_binding(VarSorts& scope, const std::string& var, const SortName& sort, Fn&& fn) {
  auto prev = scope.find(var);
  std::optional<SortName> saved;
  if (prev != scope.end()) saved = prev->second;
  scope[var] = sort;
  SortName result = fn();
  if (saved) {
    scope[var] = *saved;
  } else {
    scope.erase(var);
  }
  return result;
}

void require_finite_sort(const SortName& sort, const Structure& s) {
  if (!s.has_sort(sort)) throw Error(ErrorKind::UnknownSort, "unknown sort " + sort);
  if (sort == kNumberSort) {
    throw Error(ErrorKind::SortMismatch, "cannot quantify over the infinite sort Number");
  }
}

SortName quant_body_sort(const std::string& var, const SortName& sort, const Term& body,
                         VarSorts& scope, const Structure& s) {
  require_finite_sort(sort, s);
  return with_binding(scope, var, sort, [&] { return checked_sort(body, scope, s); });
}

SortName checked_sort(const Term& term, VarSorts& scope, const Structure& s) {
  return std::visit(
      [&](const auto& n) -> SortName {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Const>) {
          if (n.value.is_element() && n.value.as_element().sort.empty()) {
            auto sort = s.sort_of_element(n.value.as_element().id);
            if (!sort) {
              throw Error(ErrorKind::UnknownSymbol, "unknown element " + n.value.as_element().id);
            }
            return *sort;
          }
          return n.value.sort();
        } else if constexpr (std::is_same_v<T, Var>) {
          auto it = scope.find(n.name);
          if (it == scope.end()) {
            throw Error(ErrorKind::UnboundVariable, "unbound variable " + n.name);
          }
          return it->second;
        } else if constexpr (std::is_same_v<T, Apply>) {
          const Signature& sig = s.signature_of(n.fn);
          if (sig.arg_sorts.size() != n.args.size()) {
            throw Error(ErrorKind::ArityMismatch,
                        n.fn + " expects " + std::to_string(sig.arg_sorts.size()) +
                            " argument(s), got " + std::to_string(n.args.size()));
          }
          for (std::size_t i = 0; i < n.args.size(); ++i) {
            SortName got = checked_sort(*n.args[i], scope, s);
            if (got != sig.arg_sorts[i]) {
              throw Error(ErrorKind::SortMismatch, "argument " + std::to_string(i + 1) + " of " +
                                                       n.fn + " expects sort " + sig.arg_sorts[i] +
                                                       ", got sort " + got);
            }
          }
          return sig.result_sort;
        } else if constexpr (std::is_same_v<T, Compare>) {
          SortName l = checked_sort(*n.lhs, scope, s);
          SortName r = checked_sort(*n.rhs, scope, s);
          if (n.op == CompareOp::Leq) {
            if (l != kNumberSort || r != kNumberSort) {
              throw Error(ErrorKind::SortMismatch,
                          "<= compares Number with Number, got " + l + " and " + r);
            }
          } else if (l != r) {
            throw Error(ErrorKind::SortMismatch, "= compares values of one sort, got " + l +
                                                     " and " + r);
          }
          return SortName(kTruthSort);
        } else if constexpr (std::is_same_v<T, Quant>) {
          SortName param = checked_sort(*n.param, scope, s);
          SortName body = quant_body_sort(n.var, n.sort, *n.body, scope, s);
          if (param != body) {
            throw Error(ErrorKind::WFCViolation, "quantifier parameter has sort " + param +
                                                     " but its body has sort " + body);
          }
          return SortName(kTruthSort);
        } else if constexpr (std::is_same_v<T, Count>) {
          SortName body = quant_body_sort(n.var, n.sort, *n.body, scope, s);
          if (body != kTruthSort) {
            throw Error(ErrorKind::SortMismatch, "# needs a TV-sorted body, got " + body);
          }
          return SortName(kNumberSort);
        } else {
          SortName body = quant_body_sort(n.var, n.sort, *n.body, scope, s);
          if (body != kNumberSort) {
            throw Error(ErrorKind::SortMismatch, "sum needs a Number-sorted body, got " + body);
          }
          return SortName(kNumberSort);
        }
      },
      term.node);
}

}  // namespace

SortName sort_of(const Term& term, const VarSorts& var_sorts, const Structure& structure) {
  VarSorts scope = var_sorts;
  return checked_sort(term, scope, structure);
}

std::variant<std::monostate, WfcViolation> check_wfc(const Quant& q, const VarSorts& var_sorts,
                                                     const Structure& structure) {
  VarSorts scope = var_sorts;
  SortName param = checked_sort(*q.param, scope, structure);
  SortName body = quant_body_sort(q.var, q.sort, *q.body, scope, structure);
  if (param != body) return WfcViolation{param, body};
  return std::monostate{};
}

TermPtr desugar_classical(QuantKind kind, std::string var, SortName sort, TermPtr body,
                          const VarSorts& var_sorts, const Structure& structure) {
  VarSorts scope = var_sorts;
  SortName got = quant_body_sort(var, sort, *body, scope, structure);
  if (got != kTruthSort) {
    throw Error(ErrorKind::SortMismatch,
                "a quantifier without parameter needs a TV-sorted body, got " + got);
  }
  return make_quant(kind, make_const(Value::truth(true)), std::move(var), std::move(sort),
                    std::move(body));
}

TermPtr resolve_elements(const TermPtr& term, const Structure& structure) {
  auto rec = [&](const TermPtr& t) { return resolve_elements(t, structure); };
  return std::visit(
      [&](const auto& n) -> TermPtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Const>) {
          if (!n.value.is_element() || !n.value.as_element().sort.empty()) return term;
          const std::string& id = n.value.as_element().id;
          auto sort = structure.sort_of_element(id);
          if (!sort) throw Error(ErrorKind::UnknownSymbol, "unknown element " + id);
          return make_const(Value::element(*sort, id));
        } else if constexpr (std::is_same_v<T, Var>) {
          return term;
        } else if constexpr (std::is_same_v<T, Apply>) {
          std::vector<TermPtr> args;
          for (const auto& a : n.args) args.push_back(rec(a));
          return make_apply(n.fn, std::move(args));
        } else if constexpr (std::is_same_v<T, Compare>) {
          return make_compare(n.op, rec(n.lhs), rec(n.rhs));
        } else if constexpr (std::is_same_v<T, Quant>) {
          return make_quant(n.kind, rec(n.param), n.var, n.sort, rec(n.body));
        } else if constexpr (std::is_same_v<T, Count>) {
          return make_count(n.var, n.sort, rec(n.body));
        } else {
          return make_sum(n.var, n.sort, rec(n.body));
        }
      },
      term->node);
}

void check_closed(const Term& term) {
  auto fv = free_vars(term);
  if (!fv.empty()) {
    std::string names;
    for (const auto& v : fv) names += (names.empty() ? "" : ", ") + v;
    throw Error(ErrorKind::UnboundVariable, "unbound variable(s) " + names);
  }
}

}  // namespace gq
