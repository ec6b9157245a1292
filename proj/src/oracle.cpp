// Reference semantics by set comprehension over fully materialized sorts.
// Shares no evaluation code with evaluator.cpp.

#include "gq/oracle.hpp"

#include "gq/error.hpp"

#include <algorithm>
#include <optional>

namespace gq::oracle {

namespace {

// Outcome of the body at every element of the sort, in enumeration order.
struct Materialized {
  std::vector<Value> elements;
  std::vector<EvalOutcome> outcomes;
  std::optional<std::size_t> first_failure;
};

std::variant<Materialized, Failure> materialize(const std::string& var, const SortName& sort,
                                                const Term& body, const Bindings& env,
                                                const Structure& s) {
  Materialized m;
  try {
    m.elements = s.enumerate_sort(sort);
  } catch (const Error& e) {
    return Failure{e.kind(), e.what()};
  }
  for (std::size_t i = 0; i < m.elements.size(); ++i) {
    Bindings inner = env;
    inner[var] = m.elements[i];
    m.outcomes.push_back(oracle_term(body, inner, s));
    if (m.outcomes.back().is_failure() && !m.first_failure) m.first_failure = i;
  }
  return m;
}

// Indices whose outcome is Defined with the given value.
std::vector<std::size_t> matching(const Materialized& m, const Value& param) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m.outcomes.size(); ++i) {
    if (m.outcomes[i].is_defined() && m.outcomes[i].value() == param) out.push_back(i);
  }
  return out;
}

std::optional<Failure> sort_clash(const Materialized& m, const Value& param) {
  for (const auto& o : m.outcomes) {
    if (o.is_defined() && o.value().sort() != param.sort()) {
      return Failure{ErrorKind::SortMismatch, "body and parameter sorts differ"};
    }
  }
  return std::nullopt;
}

EvalOutcome lookup_table(const FunctionTable& t, const std::vector<Value>& args) {
  for (const auto& [key, value] : t.entries) {
    if (key == args) return value;
  }
  if (t.fallback) return *t.fallback;
  return Undefined{};
}

}  // namespace

EvalOutcome oracle_term(const Term& term, const Bindings& env, const Structure& s) {
  if (const auto* c = std::get_if<Const>(&term.node)) return c->value;
  if (const auto* v = std::get_if<Var>(&term.node)) {
    auto it = env.find(v->name);
    if (it == env.end()) return Failure{ErrorKind::UnboundVariable, v->name};
    return it->second;
  }

  // Operands: all evaluated; failures dominate undefinedness.
  auto operands = [&](const std::vector<TermPtr>& ts) -> std::variant<std::vector<Value>, EvalOutcome> {
    std::vector<EvalOutcome> os;
    for (const auto& t : ts) os.push_back(oracle_term(*t, env, s));
    for (const auto& o : os) {
      if (o.is_failure()) return o;
    }
    if (std::any_of(os.begin(), os.end(), [](const auto& o) { return o.is_undefined(); })) {
      return EvalOutcome(Undefined{});
    }
    std::vector<Value> vs;
    for (const auto& o : os) vs.push_back(o.value());
    return vs;
  };

  if (const auto* a = std::get_if<Apply>(&term.node)) {
    auto ops = operands(a->args);
    if (auto* o = std::get_if<EvalOutcome>(&ops)) return *o;
    const auto& args = std::get<std::vector<Value>>(ops);
    if (s.has_table(a->fn)) return lookup_table(s.table(a->fn), args);
    if (!s.has_definition(a->fn)) return Failure{ErrorKind::UnknownSymbol, a->fn};
    const FunctionDef& def = s.definition(a->fn);
    Bindings params;
    for (std::size_t i = 0; i < def.params.size() && i < args.size(); ++i) {
      params[def.params[i]] = args[i];
    }
    return oracle_term(*def.body, params, s);
  }
  if (const auto* c = std::get_if<Compare>(&term.node)) {
    auto ops = operands({c->lhs, c->rhs});
    if (auto* o = std::get_if<EvalOutcome>(&ops)) return *o;
    const auto& v = std::get<std::vector<Value>>(ops);
    if (v[0].sort() != v[1].sort()) return Failure{ErrorKind::SortMismatch, "compare"};
    if (c->op == CompareOp::Eq) return Value::truth(v[0] == v[1]);
    if (!v[0].is_number()) return Failure{ErrorKind::SortMismatch, "<="};
    return Value::truth(!(v[1].as_number() < v[0].as_number()));
  }
  if (const auto* q = std::get_if<Quant>(&term.node)) {
    EvalOutcome param = oracle_term(*q->param, env, s);
    if (!param.is_defined()) return param;
    return q->kind == QuantKind::Forall
               ? oracle_forall(param.value(), q->var, q->sort, *q->body, env, s)
               : oracle_exists(param.value(), q->var, q->sort, *q->body, env, s);
  }
  if (const auto* c = std::get_if<Count>(&term.node)) {
    return oracle_count(c->var, c->sort, *c->body, env, s);
  }
  const auto& sum = std::get<Sum>(term.node);
  return oracle_sum(sum.var, sum.sort, *sum.body, env, s);
}

EvalOutcome oracle_forall(const Value& param, const std::string& var, const SortName& sort,
                          const Term& body, const Bindings& env, const Structure& s) {
  auto mm = materialize(var, sort, body, env, s);
  if (auto* f = std::get_if<Failure>(&mm)) return *f;
  const auto& m = std::get<Materialized>(mm);

  const auto matched = matching(m, param);
  if (!m.first_failure) {
    if (auto clash = sort_clash(m, param)) return *clash;
    // D = s, and s is inhabited.
    return Value::truth(!m.elements.empty() && matched.size() == m.elements.size());
  }
  // The first element outside D decides before the first failure is reached.
  for (std::size_t i = 0; i < *m.first_failure; ++i) {
    if (std::find(matched.begin(), matched.end(), i) == matched.end()) return Value::truth(false);
  }
  return m.outcomes[*m.first_failure];
}

EvalOutcome oracle_exists(const Value& param, const std::string& var, const SortName& sort,
                          const Term& body, const Bindings& env, const Structure& s) {
  auto mm = materialize(var, sort, body, env, s);
  if (auto* f = std::get_if<Failure>(&mm)) return *f;
  const auto& m = std::get<Materialized>(mm);

  const auto matched = matching(m, param);
  if (!m.first_failure) {
    if (auto clash = sort_clash(m, param)) return *clash;
    return Value::truth(!matched.empty());
  }
  if (!matched.empty() && matched.front() < *m.first_failure) return Value::truth(true);
  return m.outcomes[*m.first_failure];
}

EvalOutcome oracle_count(const std::string& var, const SortName& sort, const Term& body,
                         const Bindings& env, const Structure& s) {
  auto mm = materialize(var, sort, body, env, s);
  if (auto* f = std::get_if<Failure>(&mm)) return *f;
  const auto& m = std::get<Materialized>(mm);
  if (m.first_failure) return m.outcomes[*m.first_failure];

  const auto satisfied = matching(m, Value::truth(true));
  return Value::number(Rational(static_cast<long long>(satisfied.size())));
}

EvalOutcome oracle_sum(const std::string& var, const SortName& sort, const Term& body,
                       const Bindings& env, const Structure& s) {
  auto mm = materialize(var, sort, body, env, s);
  if (auto* f = std::get_if<Failure>(&mm)) return *f;
  const auto& m = std::get<Materialized>(mm);

  if (m.elements.empty()) return Failure{ErrorKind::NoValue, "empty sort"};
  for (const auto& o : m.outcomes) {
    if (o.is_failure()) return o;
    if (o.is_undefined()) return Failure{ErrorKind::NoValue, "undefined summand"};
  }
  std::vector<Rational> values;
  for (const auto& o : m.outcomes) {
    if (!o.value().is_number()) return Failure{ErrorKind::SortMismatch, "non-numeric summand"};
    values.push_back(o.value().as_number());
  }
  std::sort(values.begin(), values.end());
  Rational total = 0;
  for (const auto& v : values) total += v;
  return Value::number(total);
}

}  // namespace gq::oracle
