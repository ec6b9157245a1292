#include "gq/term.hpp"

namespace gq {

namespace {

bool same_args(const std::vector<TermPtr>& a, const std::vector<TermPtr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!same_term(a[i], b[i])) return false;
  }
  return true;
}

struct EqualVisitor {
  const Term& other;

  bool operator()(const Const& x) const {
    const auto& y = std::get<Const>(other.node);
    return x.value == y.value;
  }
  bool operator()(const Var& x) const { return x.name == std::get<Var>(other.node).name; }
  bool operator()(const Apply& x) const {
    const auto& y = std::get<Apply>(other.node);
    return x.fn == y.fn && same_args(x.args, y.args);
  }
  bool operator()(const Compare& x) const {
    const auto& y = std::get<Compare>(other.node);
    return x.op == y.op && same_term(x.lhs, y.lhs) && same_term(x.rhs, y.rhs);
  }
  bool operator()(const Quant& x) const {
    const auto& y = std::get<Quant>(other.node);
    return x.kind == y.kind && x.var == y.var && x.sort == y.sort &&
           same_term(x.param, y.param) && same_term(x.body, y.body);
  }
  bool operator()(const Count& x) const {
    const auto& y = std::get<Count>(other.node);
    return x.var == y.var && x.sort == y.sort && same_term(x.body, y.body);
  }
  bool operator()(const Sum& x) const {
    const auto& y = std::get<Sum>(other.node);
    return x.var == y.var && x.sort == y.sort && same_term(x.body, y.body);
  }
};

void collect_free(const Term& t, std::set<std::string>& out);

void collect_bound(const std::string& var, const Term& body, std::set<std::string>& out) {
  std::set<std::string> inner;
  collect_free(body, inner);
  inner.erase(var);
  out.insert(inner.begin(), inner.end());
}

void collect_free(const Term& t, std::set<std::string>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Var>) {
          out.insert(n.name);
        } else if constexpr (std::is_same_v<T, Apply>) {
          for (const auto& a : n.args) collect_free(*a, out);
        } else if constexpr (std::is_same_v<T, Compare>) {
          collect_free(*n.lhs, out);
          collect_free(*n.rhs, out);
        } else if constexpr (std::is_same_v<T, Quant>) {
          collect_free(*n.param, out);
          collect_bound(n.var, *n.body, out);
        } else if constexpr (std::is_same_v<T, Count> || std::is_same_v<T, Sum>) {
          collect_bound(n.var, *n.body, out);
        }
      },
      t.node);
}

}  // namespace

bool operator==(const Term& a, const Term& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(EqualVisitor{b}, a.node);
}

bool same_term(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

bool operator==(const FunctionDef& a, const FunctionDef& b) {
  return a.signature == b.signature && a.params == b.params && same_term(a.body, b.body);
}

TermPtr make_const(Value v) { return std::make_shared<const Term>(Term{Const{std::move(v)}}); }

TermPtr make_var(std::string name) {
  return std::make_shared<const Term>(Term{Var{std::move(name)}});
}

TermPtr make_apply(std::string fn, std::vector<TermPtr> args) {
  return std::make_shared<const Term>(Term{Apply{std::move(fn), std::move(args)}});
}

TermPtr make_compare(CompareOp op, TermPtr lhs, TermPtr rhs) {
  return std::make_shared<const Term>(Term{Compare{op, std::move(lhs), std::move(rhs)}});
}

TermPtr make_quant(QuantKind kind, TermPtr param, std::string var, SortName sort, TermPtr body) {
  return std::make_shared<const Term>(
      Term{Quant{kind, std::move(param), std::move(var), std::move(sort), std::move(body)}});
}

TermPtr make_count(std::string var, SortName sort, TermPtr body) {
  return std::make_shared<const Term>(
      Term{Count{std::move(var), std::move(sort), std::move(body)}});
}

TermPtr make_sum(std::string var, SortName sort, TermPtr body) {
  return std::make_shared<const Term>(Term{Sum{std::move(var), std::move(sort), std::move(body)}});
}

std::set<std::string> free_vars(const Term& term) {
  std::set<std::string> out;
  collect_free(term, out);
  return out;
}

}  // namespace gq
