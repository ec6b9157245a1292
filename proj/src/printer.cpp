#include "gq/parser.hpp"

namespace gq {

namespace {

std::string literal(const Value& v) {
  if (v.is_number()) return render_decimal(v.as_number());
  return render(v);
}

bool needs_parens_as_operand(const Term& t) {
  return std::holds_alternative<Compare>(t.node) || std::holds_alternative<Quant>(t.node) ||
         std::holds_alternative<Sum>(t.node);
}

std::string operand(const Term& t) {
  return needs_parens_as_operand(t) ? "(" + print_term(t) + ")" : print_term(t);
}

}  // namespace

std::string print_term(const Term& term) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Const>) {
          return literal(n.value);
        } else if constexpr (std::is_same_v<T, Var>) {
          return n.name;
        } else if constexpr (std::is_same_v<T, Apply>) {
          std::string out = n.fn + "(";
          for (std::size_t i = 0; i < n.args.size(); ++i) {
            if (i) out += ", ";
            out += print_term(*n.args[i]);
          }
          return out + ")";
        } else if constexpr (std::is_same_v<T, Compare>) {
          return operand(*n.lhs) + (n.op == CompareOp::Eq ? " = " : " <= ") + operand(*n.rhs);
        } else if constexpr (std::is_same_v<T, Quant>) {
          return std::string(n.kind == QuantKind::Forall ? "forall(" : "exists(") +
                 print_term(*n.param) + ") " + n.var + ":" + n.sort + " " + print_term(*n.body);
        } else if constexpr (std::is_same_v<T, Count>) {
          return "(#" + n.var + ":" + n.sort + " " + print_term(*n.body) + ")";
        } else {
          return "sum " + n.var + ":" + n.sort + " " + print_term(*n.body);
        }
      },
      term.node);
}

std::string print_signature(const Signature& sig) {
  std::string out = "(";
  for (std::size_t i = 0; i < sig.arg_sorts.size(); ++i) {
    if (i) out += " ";
    out += sig.arg_sorts[i];
  }
  return out + ":" + sig.result_sort + ")";
}

std::string print_declaration(const Declaration& decl) {
  std::string params;
  for (std::size_t i = 0; i < decl.def.params.size(); ++i) {
    if (i) params += ", ";
    params += decl.def.params[i];
  }
  return "Declaration " + decl.name + " " + print_signature(decl.def.signature) +
         " definition (" + params + "): " + print_term(*decl.def.body) + ".";
}

}  // namespace gq
