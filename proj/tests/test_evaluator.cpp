#include "gq/check.hpp"
#include "gq/error.hpp"
#include "gq/evaluator.hpp"
#include "gq/oracle.hpp"
#include "gq/parser.hpp"

#include "invariants.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

namespace gq {
namespace {

const Value kTrue = Value::truth(true);
const Value kFalse = Value::truth(false);
Value num(Rational r) { return Value::number(std::move(r)); }

// s = {_a, _b}, fn : s -> Number, p : s -> TV. Tables filled per test.
struct Fixture {
  StructureBuilder b;
  Fixture() {
    b.add_sort("s", {"_a", "_b"}).add_sort("empty", {});
    b.declare_function("fn", {{"s"}, "Number"});
    b.declare_function("p", {{"s"}, "TV"});
    b.declare_function("g", {{"empty"}, "Number"});
  }
  Fixture& fn(const char* id, Rational v) {
    b.set_value("fn", {Value::element("s", id)}, num(std::move(v)));
    return *this;
  }
  Structure done() const { return b.freeze(); }
};

EvalOutcome run(std::string_view src, const Structure& s) {
  TermPtr t = resolve_elements(parse_term(src), s);
  sort_of(*t, {}, s);
  return eval_term(*t, Environment{}, s);
}

// Each evaluator answer is cross-checked against the brute-force oracle.
EvalOutcome run_checked(std::string_view src, const Structure& s) {
  TermPtr t = resolve_elements(parse_term(src), s);
  auto got = eval_term(*t, Environment{}, s);
  auto want = oracle::oracle_term(*t, {}, s);
  EXPECT_TRUE(same_outcome(got, want)) << src << ": " << describe(got) << " vs " << describe(want);
  return got;
}

const TermPtr kFnX = make_apply("fn", {make_var("x")});

TEST(EvalTerm, Basics) {
  const auto s = Fixture().fn("_a", 10).done();
  EXPECT_EQ(eval_term(*make_const(num(10)), Environment{}, s).value(), num(10));
  EXPECT_EQ(run("fn(_a)", s).value(), num(10));
  EXPECT_TRUE(run("fn(_b)", s).is_undefined());
  EXPECT_TRUE(run_checked("fn(_b) = 10", s).is_undefined());
  EXPECT_TRUE(run_checked("10 = fn(_b)", s).is_undefined());
  EXPECT_EQ(run_checked("fn(_a) <= 10", s).value(), kTrue);
}

TEST(EvalTerm, PartialTableFixture) {
  const auto s = test::graph_fixture();
  StructureBuilder b;
  b.add_sort("V", {"_v1", "_v2"}).add_sort("E", {"_e1"});
  b.declare_function("enp", {{"V", "E"}, "TV"});
  b.set_value("enp", {Value::element("V", "_v1"), Value::element("E", "_e1")}, kTrue);
  EXPECT_TRUE(run_checked("enp(_v2, _e1)", b.freeze()).is_undefined());
}

TEST(EvalTerm, FailuresAreNotUndefined) {
  const auto s = Fixture().done();
  auto t = make_var("nobody");
  EXPECT_EQ(eval_term(*t, Environment{}, s).failure().kind, ErrorKind::UnboundVariable);
  auto bad = make_compare(CompareOp::Eq, make_const(kTrue), make_const(num(1)));
  EXPECT_EQ(eval_term(*bad, Environment{}, s).failure().kind, ErrorKind::SortMismatch);
  auto ghost = make_apply("ghost", {make_const(kTrue)});
  EXPECT_EQ(eval_term(*ghost, Environment{}, s).failure().kind, ErrorKind::UnknownSymbol);
}

TEST(EvalForall, EmptySortIsFalse) {
  const auto s = Fixture().done();
  EXPECT_EQ(eval_forall(num(10), "x", "empty", *make_apply("g", {make_var("x")}), {}, s).value(),
            kFalse);
}

TEST(EvalForall, PartialFunctionIsFalse) {
  const auto s = Fixture().fn("_a", 10).done();
  EXPECT_EQ(eval_forall(num(10), "x", "s", *kFnX, {}, s).value(), kFalse);
}

TEST(EvalForall, ConstantFunction) {
  const auto s = Fixture().fn("_a", 10).fn("_b", 10).done();
  // Oracle: {x : fn(x) = 10} = s.
  EXPECT_EQ(oracle::oracle_forall(num(10), "x", "s", *kFnX, {}, s).value(), kTrue);
  EXPECT_EQ(eval_forall(num(10), "x", "s", *kFnX, {}, s).value(), kTrue);
  EXPECT_EQ(eval_forall(num(3), "x", "s", *kFnX, {}, s).value(), kFalse);
}

TEST(EvalExists, EmptySortIsFalse) {
  const auto s = Fixture().done();
  EXPECT_EQ(eval_exists(num(10), "x", "empty", *make_apply("g", {make_var("x")}), {}, s).value(),
            kFalse);
}

TEST(EvalExists, SkipsUndefinedThenMatches) {
  const auto s = Fixture().fn("_b", 10).done();
  EXPECT_EQ(eval_exists(num(10), "x", "s", *kFnX, {}, s).value(), kTrue);
}

TEST(EvalExists, EmptyFunctionIsFalse) {
  const auto s = Fixture().done();
  EXPECT_EQ(eval_exists(num(10), "x", "s", *kFnX, {}, s).value(), kFalse);
}

TEST(EvalCount, DegenerateCases) {
  const auto s = Fixture().done();
  auto g = make_compare(CompareOp::Eq, make_apply("g", {make_var("x")}), make_const(num(0)));
  EXPECT_EQ(eval_count("x", "empty", *g, {}, s).value(), num(0));
  EXPECT_EQ(eval_count("x", "s", *make_apply("p", {make_var("x")}), {}, s).value(), num(0));
}

TEST(EvalCount, GraphFixture) {
  const auto s = test::graph_fixture();
  auto body = make_apply("enp", {make_var("v"), make_const(Value::element("E", "_e1"))});
  // Brute force over V: only _v1 is incident to _e1.
  EXPECT_EQ(oracle::oracle_count("v", "V", *body, {}, s).value(), num(1));
  EXPECT_EQ(eval_count("v", "V", *body, {}, s).value(), num(1));
}

TEST(EvalSum, Cases) {
  auto s = Fixture().done();
  EXPECT_EQ(eval_sum("x", "empty", *make_apply("g", {make_var("x")}), {}, s).failure().kind,
            ErrorKind::NoValue);
  EXPECT_EQ(eval_sum("x", "s", *kFnX, {}, s).failure().kind, ErrorKind::NoValue);

  StructureBuilder one;
  one.add_sort("s", {"_a"}).declare_function("fn", {{"s"}, "Number"});
  one.set_value("fn", {Value::element("s", "_a")}, num(0));
  EXPECT_EQ(eval_sum("x", "s", *kFnX, {}, one.freeze()).value(), num(0));

  s = Fixture().fn("_a", 1).fn("_b", Rational(5, 2)).done();
  EXPECT_EQ(eval_sum("x", "s", *kFnX, {}, s).value(), num(Rational(1) + Rational(5, 2)));
  EXPECT_EQ(eval_sum("x", "s", *kFnX, {}, s).value(), num(Rational(7, 2)));

  // Partial but non-empty: strict reading, no value.
  s = Fixture().fn("_a", 1).done();
  EXPECT_EQ(eval_sum("x", "s", *kFnX, {}, s).failure().kind, ErrorKind::NoValue);
}

TEST(EvalQuant, ShortCircuitStopsBeforeLaterFailure) {
  // The inner sum is 1 at _a and has no value at _b (k undefined there).
  StructureBuilder b;
  b.add_sort("s", {"_a", "_b"}).add_sort("t", {"_c"});
  b.declare_function("k", {{"s", "t"}, "Number"});
  b.set_value("k", {Value::element("s", "_a"), Value::element("t", "_c")}, num(1));
  const auto s = b.freeze();
  const auto rev = s.with_reversed_enumeration();

  // _a decides before _b is reached.
  EXPECT_EQ(run_checked("forall x:s (sum y:t k(x, y)) = 5", s).value(), kFalse);
  EXPECT_EQ(run_checked("exists x:s (sum y:t k(x, y)) = 1", s).value(), kTrue);
  // Enumerating _b first reaches the failure first.
  EXPECT_EQ(run_checked("forall x:s (sum y:t k(x, y)) = 5", rev).failure().kind, ErrorKind::NoValue);
  EXPECT_EQ(run_checked("exists x:s (sum y:t k(x, y)) = 1", rev).failure().kind, ErrorKind::NoValue);
  // # has no early exit, so the failure always surfaces.
  EXPECT_EQ(run_checked("(#x:s (sum y:t k(x, y)) = 1)", s).failure().kind, ErrorKind::NoValue);
}

TEST(EvalQuant, UndefinedParameterMakesQuantifierUndefined) {
  const auto s = Fixture().fn("_a", 10).done();
  EXPECT_TRUE(run_checked("forall(fn(_b)) x:s fn(x)", s).is_undefined());
  EXPECT_EQ(run_checked("exists(fn(_a)) x:s fn(x)", s).value(), kTrue);
}

TEST(EvalQuant, ExternalParametersAndShadowing) {
  const auto s = Fixture().fn("_a", 10).fn("_b", 2).done();
  // The inner y refers to the outer binder.
  EXPECT_EQ(run_checked("exists y:s forall x:s fn(x) <= fn(y)", s).value(), kTrue);
  EXPECT_EQ(run_checked("forall y:s forall x:s fn(x) <= fn(y)", s).value(), kFalse);
  // Inner x shadows outer x.
  EXPECT_EQ(run_checked("forall x:TV exists x:s fn(x) = 10", s).value(), kTrue);
}

TEST(Environment, InnermostFirstAndPersistent) {
  Environment root;
  auto a = root.extend("x", num(1));
  auto b = a.extend("x", num(2));
  EXPECT_EQ(*a.find("x"), num(1));
  EXPECT_EQ(*b.find("x"), num(2));
  EXPECT_EQ(root.find("x"), nullptr);
}

TEST(CallFunction, GraphDefinitions) {
  const auto s = test::graph_fixture();
  auto e = [](const char* id) { return std::vector<Value>{Value::element("E", id)}; };
  EXPECT_EQ(call_function("loop", e("_e1"), s).value(), kTrue);
  EXPECT_EQ(call_function("loop", e("_e2"), s).value(), kFalse);
  EXPECT_EQ(call_function("E2", e("_e2"), s).value(), kTrue);
  EXPECT_EQ(call_function("loop", {Value::element("V", "_v1")}, s).failure().kind,
            ErrorKind::SortMismatch);
  EXPECT_EQ(call_function("loop", {}, s).failure().kind, ErrorKind::ArityMismatch);
  EXPECT_EQ(call_function("ghost", e("_e1"), s).failure().kind, ErrorKind::UnknownSymbol);
}

TEST(CallClosure, CapturedExternalParameter) {
  const auto s = Fixture().fn("_a", 10).fn("_b", 2).done();
  // (s:TV)(x) def fn(x) = limit, with limit captured from the enclosing scope.
  FunctionDef def{{{"s"}, "TV"}, {"x"},
                  make_compare(CompareOp::Eq, kFnX, make_var("limit"))};
  Closure c{&def, Environment{}.extend("limit", num(2))};
  EXPECT_EQ(call_closure(c, {Value::element("s", "_b")}, s).value(), kTrue);
  EXPECT_EQ(call_closure(c, {Value::element("s", "_a")}, s).value(), kFalse);
}

TEST(RegisterDeclaration, Cases) {
  StructureBuilder b;
  b.add_sort("V", {"_v1"}).add_sort("E", {"_e1"});
  b.declare_function("enp", {{"V", "E"}, "TV"});
  b.declare_function("inc", {{"E", "V"}, "TV"});
  auto loop = parse_declaration("Declaration loop (E:TV) definition (e): (#v: V (v enp e)) = 1.");
  b.register_declaration(loop);
  EXPECT_EQ(b.view().signature_of("loop"), (Signature{{"E"}, "TV"}));
  b.register_declaration(
      parse_declaration("Declaration E2 (E:TV) definition (e): (#y: V (e inc y)) ≤ 2."));
  EXPECT_TRUE(b.view().has_definition("E2"));

  auto kind = [&](const std::string& src) {
    try {
      b.register_declaration(parse_declaration(src));
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Parse;
  };
  EXPECT_EQ(kind("Declaration loop (E:TV) definition (e): _True."), ErrorKind::DuplicateSymbol);
  EXPECT_EQ(kind("Declaration r (E:TV) definition (e): r(e)."), ErrorKind::RecursiveDeclaration);
  EXPECT_EQ(kind("Declaration later (E:TV) definition (e): future(e)."), ErrorKind::UnknownSymbol);
  EXPECT_EQ(kind("Declaration n (E:Number) definition (e): loop(e)."), ErrorKind::SortMismatch);
  EXPECT_EQ(kind("Declaration w (E:TV) definition (e): enp(w, e)."), ErrorKind::UnboundVariable);
  EXPECT_EQ(kind("Declaration a (E V:TV) definition (e): _True."), ErrorKind::ArityMismatch);
}

TEST(EvalQuery, Cases) {
  const auto g = test::graph_fixture();
  auto q = parse_query("? loop (_e1)?");
  q.term = resolve_elements(q.term, g);
  EXPECT_EQ(eval_query(q, g).value(), kTrue);

  StructureBuilder b;
  std::vector<std::string> planets = {"_Mercury", "_Venus", "_Earth", "_Mars",
                                      "_Jupiter", "_Saturn", "_Uranus", "_Neptune"};
  b.add_sort("Planet", planets);
  auto count = parse_query("? (#p: Planet _True)?");
  // A constant-true body counts every element.
  EXPECT_EQ(eval_query(count, b.freeze()).value(), num(static_cast<long long>(planets.size())));

  const auto s = Fixture().done();
  auto undefined = parse_query("? fn(_a)?");
  undefined.term = resolve_elements(undefined.term, s);
  EXPECT_EQ(eval_query(undefined, s).failure().kind, ErrorKind::NoValue);
}

TEST(Properties, InvariantsOnGeneratedInstances) {
  const auto r = test::check_invariants(5000, 200);
  for (const auto& v : r.violations) ADD_FAILURE() << v;
  EXPECT_GT(r.quantifier_checks, 200);
  EXPECT_GT(r.order_checks, 150);
}

// Short-circuiting evaluation agrees with full materialization.
TEST(Properties, AgreesWithOracle) {
  oracle::GeneratorConfig cfg;
  cfg.seed = 9000;
  const auto ds = oracle::differential_check(cfg, 300);
  EXPECT_TRUE(ds.empty()) << oracle::format_report(ds);
}

}  // namespace
}  // namespace gq
