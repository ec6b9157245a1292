#include "gq/evaluator.hpp"

#include "gq/error.hpp"

namespace gq {

Environment Environment::extend(std::string name, Value value) const {
  return Environment(std::make_shared<const Frame>(Frame{std::move(name), std::move(value), frame_}));
}

const Value* Environment::find(std::string_view name) const {
  for (const Frame* f = frame_.get(); f; f = f->parent.get()) {
    if (f->name == name) return &f->value;
  }
  return nullptr;
}

bool same_outcome(const EvalOutcome& a, const EvalOutcome& b) {
  if (a.is_defined() && b.is_defined()) return a.value() == b.value();
  if (a.is_undefined() && b.is_undefined()) return true;
  if (a.is_failure() && b.is_failure()) return a.failure().kind == b.failure().kind;
  return false;
}

std::string describe(const EvalOutcome& o) {
  if (o.is_defined()) return render(o.value());
  if (o.is_undefined()) return "Undefined";
  return "Failure(" + std::string(to_string(o.failure().kind)) + ": " + o.failure().detail + ")";
}

namespace {

Failure failure_from(const Error& e) { return Failure{e.kind(), e.what()}; }

// Evaluates operands left to right. A Failure aborts; otherwise any
// Undefined operand makes the whole result Undefined.
std::variant<std::vector<Value>, EvalOutcome> eval_operands(const std::vector<const Term*>& terms,
                                                            const Environment& env,
                                                            const Structure& s) {
  std::vector<Value> values;
  bool undefined = false;
  for (const Term* t : terms) {
    EvalOutcome o = eval_term(*t, env, s);
    if (o.is_failure()) return o;
    if (o.is_undefined()) {
      undefined = true;
    } else {
      values.push_back(o.value());
    }
  }
  if (undefined) return EvalOutcome(Undefined{});
  return values;
}

std::variant<std::vector<Value>, Failure> elements_of(const SortName& sort, const Structure& s) {
  try {
    return s.enumerate_sort(sort);
  } catch (const Error& e) {
    return failure_from(e);
  }
}

EvalOutcome eval_quant(const Quant& q, const Environment& env, const Structure& s) {
  EvalOutcome param = eval_term(*q.param, env, s);
  if (!param.is_defined()) return param;
  return q.kind == QuantKind::Forall ? eval_forall(param.value(), q.var, q.sort, *q.body, env, s)
                                     : eval_exists(param.value(), q.var, q.sort, *q.body, env, s);
}

}  // namespace

EvalOutcome eval_term(const Term& term, const Environment& env, const Structure& structure) {
  return std::visit(
      [&](const auto& n) -> EvalOutcome {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Const>) {
          if (n.value.is_element() && n.value.as_element().sort.empty()) {
            return Failure{ErrorKind::UnknownSymbol,
                           "unresolved element " + n.value.as_element().id};
          }
          return n.value;
        } else if constexpr (std::is_same_v<T, Var>) {
          if (const Value* v = env.find(n.name)) return *v;
          return Failure{ErrorKind::UnboundVariable, "unbound variable " + n.name};
        } else if constexpr (std::is_same_v<T, Apply>) {
          std::vector<const Term*> terms;
          for (const auto& a : n.args) terms.push_back(a.get());
          auto ops = eval_operands(terms, env, structure);
          if (auto* o = std::get_if<EvalOutcome>(&ops)) return *o;
          return call_function(n.fn, std::get<std::vector<Value>>(ops), structure);
        } else if constexpr (std::is_same_v<T, Compare>) {
          auto ops = eval_operands({n.lhs.get(), n.rhs.get()}, env, structure);
          if (auto* o = std::get_if<EvalOutcome>(&ops)) return *o;
          const auto& v = std::get<std::vector<Value>>(ops);
          try {
            if (n.op == CompareOp::Eq) return Value::truth(values_equal(v[0], v[1]));
          } catch (const Error& e) {
            return failure_from(e);
          }
          if (!v[0].is_number() || !v[1].is_number()) {
            return Failure{ErrorKind::SortMismatch, "<= compares Number with Number"};
          }
          return Value::truth(v[0].as_number() <= v[1].as_number());
        } else if constexpr (std::is_same_v<T, Quant>) {
          return eval_quant(n, env, structure);
        } else if constexpr (std::is_same_v<T, Count>) {
          return eval_count(n.var, n.sort, *n.body, env, structure);
        } else {
          return eval_sum(n.var, n.sort, *n.body, env, structure);
        }
      },
      term.node);
}

EvalOutcome eval_forall(const Value& param, const std::string& var, const SortName& sort,
                        const Term& body, const Environment& env, const Structure& structure) {
  auto elems = elements_of(sort, structure);
  if (auto* f = std::get_if<Failure>(&elems)) return *f;
  const auto& s = std::get<std::vector<Value>>(elems);

  if (s.empty()) return Value::truth(false);
  for (const Value& x : s) {
    EvalOutcome fx = eval_term(body, env.extend(var, x), structure);
    if (fx.is_failure()) return fx;
    if (fx.is_undefined()) return Value::truth(false);
    try {
      if (!values_equal(fx.value(), param)) return Value::truth(false);
    } catch (const Error& e) {
      return failure_from(e);
    }
  }
  return Value::truth(true);
}

EvalOutcome eval_exists(const Value& param, const std::string& var, const SortName& sort,
                        const Term& body, const Environment& env, const Structure& structure) {
  auto elems = elements_of(sort, structure);
  if (auto* f = std::get_if<Failure>(&elems)) return *f;
  const auto& s = std::get<std::vector<Value>>(elems);

  if (s.empty()) return Value::truth(false);
  for (const Value& x : s) {
    EvalOutcome fx = eval_term(body, env.extend(var, x), structure);
    if (fx.is_failure()) return fx;
    if (fx.is_undefined()) continue;
    try {
      if (values_equal(fx.value(), param)) return Value::truth(true);
    } catch (const Error& e) {
      return failure_from(e);
    }
  }
  return Value::truth(false);
}

EvalOutcome eval_count(const std::string& var, const SortName& sort, const Term& body,
                       const Environment& env, const Structure& structure) {
  auto elems = elements_of(sort, structure);
  if (auto* f = std::get_if<Failure>(&elems)) return *f;

  long long n = 0;
  for (const Value& x : std::get<std::vector<Value>>(elems)) {
    EvalOutcome px = eval_term(body, env.extend(var, x), structure);
    if (px.is_failure()) return px;
    if (px.is_undefined()) continue;
    if (!px.value().is_truth()) {
      return Failure{ErrorKind::SortMismatch, "# body produced " + render(px.value())};
    }
    if (px.value().as_truth()) ++n;
  }
  return Value::number(Rational(n));
}

EvalOutcome eval_sum(const std::string& var, const SortName& sort, const Term& body,
                     const Environment& env, const Structure& structure) {
  auto elems = elements_of(sort, structure);
  if (auto* f = std::get_if<Failure>(&elems)) return *f;
  const auto& s = std::get<std::vector<Value>>(elems);

  if (s.empty()) return Failure{ErrorKind::NoValue, "sum over empty sort " + sort};
  Rational total = 0;
  for (const Value& x : s) {
    EvalOutcome fx = eval_term(body, env.extend(var, x), structure);
    if (fx.is_failure()) return fx;
    if (fx.is_undefined()) {
      return Failure{ErrorKind::NoValue, "summand undefined at " + render(x)};
    }
    if (!fx.value().is_number()) {
      return Failure{ErrorKind::SortMismatch, "sum body produced " + render(fx.value())};
    }
    total += fx.value().as_number();
  }
  return Value::number(std::move(total));
}

EvalOutcome call_closure(const Closure& closure, const std::vector<Value>& args,
                         const Structure& structure) {
  const FunctionDef& def = *closure.def;
  if (args.size() != def.params.size()) {
    return Failure{ErrorKind::ArityMismatch, "expected " + std::to_string(def.params.size()) +
                                                 " argument(s), got " +
                                                 std::to_string(args.size())};
  }
  Environment env = closure.captured;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i].sort() != def.signature.arg_sorts[i]) {
      return Failure{ErrorKind::SortMismatch,
                     "argument " + std::to_string(i + 1) + " expects sort " +
                         def.signature.arg_sorts[i] + ", got " + render(args[i]) + " of sort " +
                         args[i].sort()};
    }
    env = env.extend(def.params[i], args[i]);
  }
  return eval_term(*def.body, env, structure);
}

EvalOutcome call_function(std::string_view name, const std::vector<Value>& args,
                          const Structure& structure) {
  try {
    if (structure.has_definition(name)) {
      const FunctionDef& def = structure.definition(name);
      if (args.size() != def.params.size()) {
        return Failure{ErrorKind::ArityMismatch,
                       std::string(name) + " expects " + std::to_string(def.params.size()) +
                           " argument(s), got " + std::to_string(args.size())};
      }
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i].sort() != def.signature.arg_sorts[i]) {
          return Failure{ErrorKind::SortMismatch,
                         "argument " + std::to_string(i + 1) + " of " + std::string(name) +
                             " expects sort " + def.signature.arg_sorts[i] + ", got " +
                             render(args[i]) + " of sort " + args[i].sort()};
        }
      }
      return call_closure(Closure{&def, Environment{}}, args, structure);
    }
    auto v = structure.lookup(name, args);
    if (!v) return Undefined{};
    return *v;
  } catch (const Error& e) {
    return failure_from(e);
  }
}

EvalOutcome eval_query(const Query& q, const Structure& structure) {
  EvalOutcome o = eval_term(*q.term, Environment{}, structure);
  if (o.is_undefined()) return Failure{ErrorKind::NoValue, "the query has no value"};
  return o;
}

}  // namespace gq
