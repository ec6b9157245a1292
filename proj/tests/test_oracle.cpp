#include "gq/check.hpp"
#include "gq/model_file.hpp"
#include "gq/oracle.hpp"
#include "gq/parser.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

namespace gq::oracle {
namespace {

const Value kTrue = Value::truth(true);
const Value kFalse = Value::truth(false);
Value num(Rational r) { return Value::number(std::move(r)); }
const TermPtr kFnX = make_apply("fn", {make_var("x")});

Structure fn_structure(std::vector<std::pair<const char*, Rational>> entries,
                       std::vector<std::string> elems = {"_a", "_b", "_c"}) {
  StructureBuilder b;
  b.add_sort("s", elems).add_sort("empty", {});
  b.declare_function("fn", {{"s"}, "Number"});
  for (auto& [id, v] : entries) b.set_value("fn", {Value::element("s", id)}, num(v));
  return b.freeze();
}

TEST(OracleForall, Cases) {
  auto s = fn_structure({});
  EXPECT_EQ(oracle_forall(num(1), "x", "empty", *make_const(num(1)), {}, s).value(), kFalse);
  s = fn_structure({{"_a", 4}, {"_b", 4}, {"_c", 4}});
  EXPECT_EQ(oracle_forall(num(4), "x", "s", *kFnX, {}, s).value(), kTrue);
  s = fn_structure({{"_a", 4}, {"_b", 5}, {"_c", 4}});
  EXPECT_EQ(oracle_forall(num(4), "x", "s", *kFnX, {}, s).value(), kFalse);
}

TEST(OracleExists, Cases) {
  auto s = fn_structure({});
  EXPECT_EQ(oracle_exists(num(1), "x", "empty", *make_const(num(1)), {}, s).value(), kFalse);
  s = fn_structure({{"_c", 7}});
  EXPECT_EQ(oracle_exists(num(7), "x", "s", *kFnX, {}, s).value(), kTrue);
  EXPECT_EQ(oracle_exists(num(8), "x", "s", *kFnX, {}, s).value(), kFalse);
}

TEST(OracleCount, Cases) {
  auto s = fn_structure({});
  EXPECT_EQ(oracle_count("x", "empty", *make_const(kTrue), {}, s).value(), num(0));
  EXPECT_EQ(oracle_count("x", "s", *make_const(kTrue), {}, s).value(), num(3));
  const auto g = test::graph_fixture();
  auto body = make_apply("enp", {make_var("v"), make_const(Value::element("E", "_e1"))});
  EXPECT_EQ(oracle_count("v", "V", *body, {}, g).value(), num(1));
}

TEST(OracleSum, Cases) {
  auto s = fn_structure({});
  EXPECT_EQ(oracle_sum("x", "empty", *make_const(num(1)), {}, s).failure().kind, ErrorKind::NoValue);
  s = fn_structure({{"_a", 1}, {"_b", Rational(5, 2)}}, {"_a", "_b"});
  EXPECT_EQ(oracle_sum("x", "s", *kFnX, {}, s).value(), num(Rational(7, 2)));
  s = fn_structure({{"_a", 0}}, {"_a"});
  EXPECT_EQ(oracle_sum("x", "s", *kFnX, {}, s).value(), num(0));
}

TEST(GenerateStructure, Bounds) {
  GeneratorConfig cfg;
  cfg.max_elements_per_sort = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    cfg.seed = seed;
    const auto s = generate_structure(cfg);
    for (const auto& sort : s.sort_names()) EXPECT_TRUE(s.enumerate_sort(sort).empty());
  }
  cfg = GeneratorConfig{};
  cfg.partiality_rate = 1.0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    cfg.seed = seed;
    const auto s = generate_structure(cfg);
    for (const auto& name : s.symbol_names()) {
      if (!s.has_table(name)) continue;
      EXPECT_TRUE(s.table(name).entries.empty());
      EXPECT_FALSE(s.table(name).fallback.has_value());
    }
  }
}

TEST(GenerateStructure, DeterministicBySeed) {
  GeneratorConfig cfg;
  cfg.seed = 77;
  EXPECT_EQ(write_model(generate_structure(cfg)), write_model(generate_structure(cfg)));
  const auto s = generate_structure(cfg);
  EXPECT_EQ(*generate_term(cfg, s), *generate_term(cfg, s));
}

TEST(GenerateStructure, CoversDegenerateCases) {
  int empty_sorts = 0, empty_tables = 0, partial_tables = 0, definitions = 0;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    GeneratorConfig cfg;
    cfg.seed = seed;
    const auto s = generate_structure(cfg);
    for (const auto& sort : s.sort_names()) empty_sorts += s.enumerate_sort(sort).empty();
    for (const auto& name : s.symbol_names()) {
      if (s.has_definition(name)) {
        ++definitions;
        continue;
      }
      const auto& t = s.table(name);
      if (t.fallback) continue;
      std::size_t space = 1;
      for (const auto& a : t.signature.arg_sorts) space *= s.enumerate_sort(a).size();
      if (t.entries.empty() && space > 0) ++empty_tables;
      if (!t.entries.empty() && t.entries.size() < space) ++partial_tables;
    }
  }
  EXPECT_GT(empty_sorts, 20);
  EXPECT_GT(empty_tables, 20);
  EXPECT_GT(partial_tables, 20);
  EXPECT_GT(definitions, 20);
}

TEST(GenerateTerm, ClosedWellSortedAndNested) {
  int nested = 0;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    GeneratorConfig cfg;
    cfg.seed = seed;
    const auto s = generate_structure(cfg);
    const auto t = generate_term(cfg, s);
    EXPECT_TRUE(free_vars(*t).empty());
    EXPECT_NO_THROW(sort_of(*t, {}, s)) << print_term(*t);
    const auto text = print_term(*t);
    if (text.find("forall") != text.rfind("forall") || text.find("exists") != text.rfind("exists") ||
        (text.find("forall") != std::string::npos && text.find("exists") != std::string::npos)) {
      ++nested;
    }
  }
  EXPECT_GT(nested, 10);
}

TEST(GenerateTerm, DepthZeroHasNoBinders) {
  GeneratorConfig cfg;
  cfg.max_term_depth = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    cfg.seed = seed;
    const auto s = generate_structure(cfg);
    const auto t = generate_term(cfg, s);
    EXPECT_FALSE(std::holds_alternative<Quant>(t->node));
    EXPECT_FALSE(std::holds_alternative<Count>(t->node));
    EXPECT_FALSE(std::holds_alternative<Sum>(t->node));
  }
}

TEST(DifferentialCheck, ZeroIterations) {
  EXPECT_TRUE(differential_check(GeneratorConfig{}, 0).empty());
}

TEST(DifferentialCheck, AgreesOnSmallRun) {
  const auto ds = differential_check(GeneratorConfig{}, 500);
  EXPECT_TRUE(ds.empty()) << format_report(ds);
}

// An evaluator whose ∀ over an empty sort answers _True must be caught.
TEST(DifferentialCheck, DetectsFlippedEmptySortRule) {
  auto mutant = [](const Term& t, const Structure& s) -> EvalOutcome {
    if (const auto* q = std::get_if<Quant>(&t.node);
        q && q->kind == QuantKind::Forall && s.enumerate_sort(q->sort).empty()) {
      return Value::truth(true);
    }
    return default_evaluator(t, s);
  };
  const auto ds = differential_check(GeneratorConfig{}, 1000, mutant);
  ASSERT_FALSE(ds.empty());
  const auto report = format_report(ds);
  EXPECT_NE(report.find("# discrepancy 1"), std::string::npos);
  EXPECT_NE(report.find("term: forall("), std::string::npos);
  EXPECT_NE(report.find("evaluator: _True"), std::string::npos);
  EXPECT_NE(report.find("oracle: _False"), std::string::npos);
}

TEST(Report, ModelDumpReloads) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    GeneratorConfig cfg;
    cfg.seed = seed;
    const auto s = generate_structure(cfg);
    StructureBuilder b;
    load_model_source(b, write_model(s));
    const auto back = b.freeze();
    EXPECT_EQ(write_model(back), write_model(s));
    const auto t = generate_term(cfg, s);
    EXPECT_TRUE(same_outcome(eval_term(*t, {}, s), eval_term(*t, {}, back)));
  }
}

}  // namespace
}  // namespace gq::oracle
