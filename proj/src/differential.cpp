#include "gq/model_file.hpp"
#include "gq/oracle.hpp"
#include "gq/parser.hpp"

#include <sstream>

namespace gq::oracle {

EvalOutcome default_evaluator(const Term& term, const Structure& structure) {
  return eval_term(term, Environment{}, structure);
}

std::vector<Discrepancy> differential_check(const GeneratorConfig& cfg, int iterations,
                                            const EvaluatorFn& evaluator) {
  std::vector<Discrepancy> found;
  for (int i = 0; i < iterations; ++i) {
    GeneratorConfig c = cfg;
    c.seed = cfg.seed + static_cast<std::uint64_t>(i);
    Structure s = generate_structure(c);
    TermPtr t = generate_term(c, s);
    EvalOutcome got = evaluator(*t, s);
    EvalOutcome want = oracle_term(*t, {}, s);
    if (!same_outcome(got, want)) {
      found.push_back(Discrepancy{std::move(s), t, std::move(got), std::move(want), c.seed});
    }
  }
  return found;
}

std::string format_report(const std::vector<Discrepancy>& ds) {
  std::ostringstream os;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const auto& d = ds[i];
    os << "# discrepancy " << i + 1 << " (seed " << d.seed << ")\n"
       << write_model(d.structure) << "term: " << print_term(*d.term) << "\n"
       << "evaluator: " << describe(d.evaluator) << "\n"
       << "oracle: " << describe(d.reference) << "\n\n";
  }
  return os.str();
}

}  // namespace gq::oracle
