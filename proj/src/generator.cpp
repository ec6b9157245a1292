#include "gq/oracle.hpp"

#include "gq/error.hpp"

#include <algorithm>
#include <random>

namespace gq::oracle {

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Plain modulo keeps sequences identical across standard libraries.
  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(eng_() % n); }
  bool chance(double p) { return static_cast<double>(eng_() >> 11) * 0x1.0p-53 < p; }

  template <class T>
  const T& pick(const std::vector<T>& xs) { return xs[below(xs.size())]; }

  template <class T>
  void shuffle(std::vector<T>& xs) {
    for (std::size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[below(i)]);
  }

 private:
  std::mt19937_64 eng_;
};

const std::vector<Rational>& number_pool() {
  static const std::vector<Rational> pool = {0, 1, 2, 3, Rational(1, 2), Rational(5, 2), 10};
  return pool;
}

std::optional<Value> random_value(Rng& rng, const SortName& sort, const Structure& s) {
  if (sort == kTruthSort) return Value::truth(rng.chance(0.5));
  if (sort == kNumberSort) return Value::number(rng.pick(number_pool()));
  auto elems = s.enumerate_sort(sort);
  if (elems.empty()) return std::nullopt;
  return rng.pick(elems);
}

void all_tuples(const std::vector<std::vector<Value>>& domains, std::vector<Value>& prefix,
                std::vector<std::vector<Value>>& out) {
  if (prefix.size() == domains.size()) {
    out.push_back(prefix);
    return;
  }
  for (const auto& v : domains[prefix.size()]) {
    prefix.push_back(v);
    all_tuples(domains, prefix, out);
    prefix.pop_back();
  }
}

class TermGen {
 public:
  TermGen(Rng& rng, const Structure& s) : rng_(rng), s_(s) {}

  void bind(std::string var, SortName sort) { scope_.emplace_back(std::move(var), std::move(sort)); }

  TermPtr gen(const SortName& target, int depth) {
    enum class Kind { Const, Var, Apply, Quant, Eq, Leq, Count, Sum };
    std::vector<Kind> kinds = {Kind::Const, Kind::Var, Kind::Apply};
    if (depth > 0) {
      if (target == kTruthSort) kinds.insert(kinds.end(), {Kind::Quant, Kind::Quant, Kind::Eq, Kind::Leq});
      if (target == kNumberSort) kinds.insert(kinds.end(), {Kind::Count, Kind::Sum, Kind::Sum});
    }
    rng_.shuffle(kinds);
    for (Kind k : kinds) {
      TermPtr t;
      switch (k) {
        case Kind::Const: t = constant(target); break;
        case Kind::Var: t = variable(target); break;
        case Kind::Apply: t = apply(target, depth); break;
        case Kind::Quant: t = quant(depth); break;
        case Kind::Eq: t = equality(depth); break;
        case Kind::Leq:
          t = both(CompareOp::Leq, SortName(kNumberSort), depth);
          break;
        case Kind::Count: t = count(depth); break;
        case Kind::Sum: t = sum(depth); break;
      }
      if (t) return t;
    }
    return nullptr;
  }

  const std::vector<SortName>& finite_sorts() {
    if (finite_.empty()) {
      finite_ = s_.sort_names();
      finite_.push_back(SortName(kTruthSort));
    }
    return finite_;
  }

 private:
  TermPtr constant(const SortName& target) {
    auto v = random_value(rng_, target, s_);
    return v ? make_const(*v) : nullptr;
  }

  TermPtr variable(const SortName& target) {
    // Innermost binding of each name decides its sort.
    std::vector<std::string> visible;
    std::vector<std::string> seen;
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (std::find(seen.begin(), seen.end(), it->first) != seen.end()) continue;
      seen.push_back(it->first);
      if (it->second == target) visible.push_back(it->first);
    }
    if (visible.empty()) return nullptr;
    return make_var(rng_.pick(visible));
  }

  TermPtr apply(const SortName& target, int depth) {
    std::vector<std::string> fns;
    for (const auto& name : s_.symbol_names()) {
      if (s_.signature_of(name).result_sort == target) fns.push_back(name);
    }
    if (fns.empty()) return nullptr;
    const std::string& fn = rng_.pick(fns);
    std::vector<TermPtr> args;
    for (const auto& sort : s_.signature_of(fn).arg_sorts) {
      TermPtr a = depth > 0 ? gen(sort, depth - 1) : leaf(sort);
      if (!a) return nullptr;
      args.push_back(std::move(a));
    }
    return make_apply(fn, std::move(args));
  }

  TermPtr leaf(const SortName& target) {
    if (rng_.chance(0.5)) {
      if (auto v = variable(target)) return v;
    }
    if (auto c = constant(target)) return c;
    return variable(target);
  }

  std::string binder_name() {
    if (!scope_.empty() && rng_.chance(0.2)) return rng_.pick(scope_).first;
    return "x" + std::to_string(fresh_++);
  }

  template <class Fn>
  TermPtr under_binder(int depth, Fn&& make) {
    const SortName sort = rng_.pick(finite_sorts());
    const std::string var = binder_name();
    scope_.emplace_back(var, sort);
    TermPtr t = make(var, sort, depth - 1);
    scope_.pop_back();
    return t;
  }

  SortName value_sort() {
    if (rng_.chance(0.5)) return SortName(kTruthSort);
    if (rng_.chance(0.5)) return SortName(kNumberSort);
    return rng_.pick(finite_sorts());
  }

  TermPtr quant(int depth) {
    const SortName param_sort = value_sort();
    TermPtr param = rng_.chance(0.8) ? constant(param_sort) : gen(param_sort, depth - 1);
    if (!param) return nullptr;
    const QuantKind kind = rng_.chance(0.5) ? QuantKind::Forall : QuantKind::Exists;
    return under_binder(depth, [&](const std::string& var, const SortName& sort, int d) -> TermPtr {
      TermPtr body = gen(param_sort, d);
      return body ? make_quant(kind, param, var, sort, body) : nullptr;
    });
  }

  TermPtr both(CompareOp op, const SortName& sort, int depth) {
    TermPtr lhs = gen(sort, depth - 1);
    TermPtr rhs = lhs ? gen(sort, depth - 1) : nullptr;
    return rhs ? make_compare(op, lhs, rhs) : nullptr;
  }

  TermPtr equality(int depth) { return both(CompareOp::Eq, value_sort(), depth); }

  TermPtr count(int depth) {
    return under_binder(depth, [&](const std::string& var, const SortName& sort, int d) -> TermPtr {
      TermPtr body = gen(SortName(kTruthSort), d);
      return body ? make_count(var, sort, body) : nullptr;
    });
  }

  TermPtr sum(int depth) {
    return under_binder(depth, [&](const std::string& var, const SortName& sort, int d) -> TermPtr {
      TermPtr body = gen(SortName(kNumberSort), d);
      return body ? make_sum(var, sort, body) : nullptr;
    });
  }

  Rng& rng_;
  const Structure& s_;
  std::vector<std::pair<std::string, SortName>> scope_;
  std::vector<SortName> finite_;
  int fresh_ = 0;
};

constexpr std::uint64_t kTermStream = 0x9e3779b97f4a7c15ULL;

}  // namespace

Structure generate_structure(const GeneratorConfig& cfg) {
  Rng rng(cfg.seed);
  StructureBuilder b;

  const std::size_t nsorts = cfg.max_sorts > 0 ? 1 + rng.below(cfg.max_sorts) : 0;
  for (std::size_t i = 0; i < nsorts; ++i) {
    std::size_t size = rng.chance(0.25) ? 0 : rng.below(cfg.max_elements_per_sort + 1);
    std::vector<std::string> ids;
    for (std::size_t j = 0; j < size; ++j) {
      ids.push_back("_s" + std::to_string(i) + "e" + std::to_string(j));
    }
    b.add_sort("S" + std::to_string(i), ids);
  }

  std::vector<SortName> arg_sorts = b.view().sort_names();
  arg_sorts.push_back(SortName(kTruthSort));
  std::vector<SortName> result_sorts = arg_sorts;
  result_sorts.push_back(SortName(kNumberSort));
  result_sorts.push_back(SortName(kNumberSort));

  const std::size_t nfns = rng.below(cfg.max_functions + 1);
  for (std::size_t i = 0; i < nfns; ++i) {
    const std::string name = "f" + std::to_string(i);
    Signature sig;
    const std::size_t arity = rng.chance(0.6) ? 1 : 2;
    for (std::size_t k = 0; k < arity; ++k) sig.arg_sorts.push_back(rng.pick(arg_sorts));
    sig.result_sort = rng.pick(result_sorts);
    b.declare_function(name, sig);

    std::vector<std::vector<Value>> domains;
    for (const auto& s : sig.arg_sorts) domains.push_back(b.view().enumerate_sort(s));
    std::vector<std::vector<Value>> tuples;
    std::vector<Value> prefix;
    all_tuples(domains, prefix, tuples);

    const bool empty_function = rng.chance(0.1);
    for (auto& args : tuples) {
      if (empty_function || rng.chance(cfg.partiality_rate)) continue;
      if (auto v = random_value(rng, sig.result_sort, b.view())) b.set_value(name, args, *v);
    }
    if (cfg.partiality_rate < 1.0 && rng.chance(0.1)) {
      if (auto v = random_value(rng, sig.result_sort, b.view())) b.set_default(name, *v);
    }
  }

  if (rng.chance(0.5)) {
    TermGen tg(rng, b.view());
    const SortName arg = rng.pick(tg.finite_sorts());
    const SortName result = rng.chance(0.6) ? SortName(kTruthSort) : SortName(kNumberSort);
    tg.bind("p", arg);
    TermPtr body = tg.gen(result, std::max(0, cfg.max_term_depth - 1));
    if (body) b.register_declaration(Declaration{"d0", FunctionDef{{{arg}, result}, {"p"}, body}});
  }
  return b.freeze();
}

TermPtr generate_term(const GeneratorConfig& cfg, const Structure& structure) {
  Rng rng(cfg.seed ^ kTermStream);
  TermGen tg(rng, structure);
  int depth = 0;
  if (cfg.max_term_depth > 0 && !rng.chance(0.1)) {
    depth = 1 + static_cast<int>(rng.below(cfg.max_term_depth));
  }
  SortName target = SortName(kTruthSort);
  if (rng.chance(0.3)) {
    target = SortName(kNumberSort);
  } else if (rng.chance(0.15)) {
    target = rng.pick(tg.finite_sorts());
  }
  if (TermPtr t = tg.gen(target, depth)) return t;
  return make_const(Value::truth(rng.chance(0.5)));
}

TermPtr generate_open_term(const GeneratorConfig& cfg, const Structure& structure,
                           const std::string& var, const SortName& sort,
                           const SortName& result_sort) {
  Rng rng(cfg.seed ^ kTermStream);
  TermGen tg(rng, structure);
  tg.bind(var, sort);
  return tg.gen(result_sort, static_cast<int>(rng.below(cfg.max_term_depth + 1)));
}

}  // namespace gq::oracle
