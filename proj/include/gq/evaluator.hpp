#pragma once

#include "gq/error.hpp"
#include "gq/structure.hpp"
#include "gq/term.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gq {

/// Persistent lexical scope. `extend` returns a child scope and never
/// touches the parent, so environments can be captured freely.
class Environment {
 public:
  Environment() = default;

  Environment extend(std::string name, Value value) const;
  /// Innermost binding first.
  const Value* find(std::string_view name) const;
  bool empty() const { return frame_ == nullptr; }

 private:
  struct Frame {
    std::string name;
    Value value;
    std::shared_ptr<const Frame> parent;
  };
  explicit Environment(std::shared_ptr<const Frame> f) : frame_(std::move(f)) {}

  std::shared_ptr<const Frame> frame_;
};

/// A term-defined function together with the scope its external parameters
/// are resolved in.
struct Closure {
  const FunctionDef* def;
  Environment captured;
};

struct Undefined {
  friend bool operator==(Undefined, Undefined) { return true; }
};

struct Failure {
  ErrorKind kind;
  std::string detail;
};

/// Defined value, Undefined (a partial function has no value here), or a
/// Failure that aborts evaluation.
class EvalOutcome {
 public:
  EvalOutcome(Value v) : o_(std::move(v)) {}
  EvalOutcome(Undefined u) : o_(u) {}
  EvalOutcome(Failure f) : o_(std::move(f)) {}

  bool is_defined() const { return std::holds_alternative<Value>(o_); }
  bool is_undefined() const { return std::holds_alternative<Undefined>(o_); }
  bool is_failure() const { return std::holds_alternative<Failure>(o_); }

  const Value& value() const { return std::get<Value>(o_); }
  const Failure& failure() const { return std::get<Failure>(o_); }

 private:
  std::variant<Value, Undefined, Failure> o_;
};

/// Same kind, same value (for Defined) and same failure kind (for Failure).
bool same_outcome(const EvalOutcome& a, const EvalOutcome& b);
std::string describe(const EvalOutcome& o);

EvalOutcome eval_term(const Term& term, const Environment& env, const Structure& structure);

EvalOutcome eval_forall(const Value& param, const std::string& var, const SortName& sort,
                        const Term& body, const Environment& env, const Structure& structure);
EvalOutcome eval_exists(const Value& param, const std::string& var, const SortName& sort,
                        const Term& body, const Environment& env, const Structure& structure);
EvalOutcome eval_count(const std::string& var, const SortName& sort, const Term& body,
                       const Environment& env, const Structure& structure);
EvalOutcome eval_sum(const std::string& var, const SortName& sort, const Term& body,
                     const Environment& env, const Structure& structure);

/// Table-backed symbols read the table; term-defined ones evaluate their body
/// with parameters bound over an empty captured scope.
EvalOutcome call_function(std::string_view name, const std::vector<Value>& args,
                          const Structure& structure);
EvalOutcome call_closure(const Closure& closure, const std::vector<Value>& args,
                         const Structure& structure);

/// Evaluates a closed query; a top-level Undefined becomes Failure(NoValue).
EvalOutcome eval_query(const Query& q, const Structure& structure);

}  // namespace gq
