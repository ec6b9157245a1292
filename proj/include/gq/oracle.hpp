#pragma once

#include "gq/evaluator.hpp"
#include "gq/structure.hpp"
#include "gq/term.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace gq::oracle {

/// Variable bindings for the reference semantics. Deliberately a flat map
/// copied on extension rather than the evaluator's scope chain.
using Bindings = std::map<std::string, Value>;

// Brute-force reference semantics. Every element of the sort is evaluated
// and the answer is read off the materialized outcome set.
EvalOutcome oracle_term(const Term& term, const Bindings& env, const Structure& structure);
EvalOutcome oracle_forall(const Value& param, const std::string& var, const SortName& sort,
                          const Term& body, const Bindings& env, const Structure& structure);
EvalOutcome oracle_exists(const Value& param, const std::string& var, const SortName& sort,
                          const Term& body, const Bindings& env, const Structure& structure);
EvalOutcome oracle_count(const std::string& var, const SortName& sort, const Term& body,
                         const Bindings& env, const Structure& structure);
EvalOutcome oracle_sum(const std::string& var, const SortName& sort, const Term& body,
                       const Bindings& env, const Structure& structure);

struct GeneratorConfig {
  int max_sorts = 3;
  int max_elements_per_sort = 4;
  int max_functions = 4;
  int max_term_depth = 3;
  double partiality_rate = 0.3;
  std::uint64_t seed = 1;
};

/// Random structure, biased toward empty sorts and empty or partial tables.
/// May contain one term-defined function. Fully determined by `cfg`.
Structure generate_structure(const GeneratorConfig& cfg);

/// Random closed, well-sorted term over the structure's symbols.
TermPtr generate_term(const GeneratorConfig& cfg, const Structure& structure);

/// Random well-sorted term with `var` free (bound to `sort`) and value sort
/// `result_sort`. Returns nullptr if no such term could be built.
TermPtr generate_open_term(const GeneratorConfig& cfg, const Structure& structure,
                           const std::string& var, const SortName& sort,
                           const SortName& result_sort);

struct Discrepancy {
  Structure structure;
  TermPtr term;
  EvalOutcome evaluator;
  EvalOutcome reference;
  std::uint64_t seed;
};

using EvaluatorFn = std::function<EvalOutcome(const Term&, const Structure&)>;

/// The evaluator under test: eval_term in the empty environment.
EvalOutcome default_evaluator(const Term& term, const Structure& structure);

/// Iteration i uses seed `cfg.seed + i` for both structure and term.
std::vector<Discrepancy> differential_check(const GeneratorConfig& cfg, int iterations,
                                            const EvaluatorFn& evaluator = default_evaluator);

/// Line-oriented report: model dump, term, both outcomes.
std::string format_report(const std::vector<Discrepancy>& ds);

}  // namespace gq::oracle
