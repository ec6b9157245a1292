#include "gq/check.hpp"
#include "gq/error.hpp"
#include "gq/oracle.hpp"
#include "gq/parser.hpp"

#include <gtest/gtest.h>

namespace gq {
namespace {

TermPtr var(const char* n) { return make_var(n); }
TermPtr num(int n) { return make_const(Value::number(n)); }
TermPtr tv(bool b) { return make_const(Value::truth(b)); }

SourcePos error_pos(auto&& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e.pos();
  }
  ADD_FAILURE() << "no parse error";
  return {};
}

TEST(Tokenize, LoopBody) {
  auto toks = tokenize("(#v: V (v enp e)) = 1.");
  ASSERT_EQ(toks.size(), 15u);
  EXPECT_EQ(toks[1].kind, TokenKind::QuantSymbol);
  EXPECT_EQ(toks[1].text, "#");
  EXPECT_EQ(toks[2].kind, TokenKind::Identifier);
  EXPECT_EQ(toks[2].text, "v");
  EXPECT_EQ(toks[7].text, "enp");
  EXPECT_EQ(toks[12].kind, TokenKind::Number);
  EXPECT_EQ(toks[12].text, "1");
  EXPECT_EQ(toks[13].kind, TokenKind::Punct);
  EXPECT_EQ(toks[13].text, ".");
  EXPECT_EQ(toks[14].kind, TokenKind::End);
}

TEST(Tokenize, Numbers) {
  auto toks = tokenize("2.5");
  ASSERT_EQ(toks.size(), 2u);
  EXPECT_EQ(toks[0].kind, TokenKind::Number);
  EXPECT_EQ(toks[0].text, "2.5");
  EXPECT_EQ(error_pos([] { tokenize("1e5"); }), (SourcePos{1, 2}));
  EXPECT_EQ(error_pos([] { tokenize("x = 12E3"); }), (SourcePos{1, 7}));
}

TEST(Tokenize, KeywordsElementsAndComments) {
  auto toks = tokenize("forall _edge1 // ignored\n  sum");
  EXPECT_EQ(toks[0].kind, TokenKind::Keyword);
  EXPECT_EQ(toks[1].kind, TokenKind::ElementId);
  EXPECT_EQ(toks[2].kind, TokenKind::Keyword);
  EXPECT_EQ(toks[2].pos, (SourcePos{2, 3}));
}

TEST(Tokenize, ErrorPositionsPointAtOffendingCharacter) {
  EXPECT_EQ(error_pos([] { tokenize("p(x) $"); }), (SourcePos{1, 6}));
  EXPECT_EQ(error_pos([] { tokenize("∀x:s\n  p(x) & q"); }), (SourcePos{2, 8}));
  EXPECT_EQ(error_pos([] { tokenize("_ x"); }), (SourcePos{1, 2}));
}

TEST(ParseTerm, SurfaceForms) {
  EXPECT_EQ(*parse_term("forall(10) x:s fn(x)"),
            *make_quant(QuantKind::Forall, num(10), "x", "s", make_apply("fn", {var("x")})));
  EXPECT_EQ(*parse_term("(#v: V (v enp e)) = 1"),
            *make_compare(CompareOp::Eq,
                          make_count("v", "V", make_apply("enp", {var("v"), var("e")})), num(1)));
  EXPECT_EQ(*parse_term("exists(_True) x:s p(x)"),
            *make_quant(QuantKind::Exists, tv(true), "x", "s", make_apply("p", {var("x")})));
}

TEST(ParseTerm, UnicodeAndAsciiAgree) {
  EXPECT_EQ(*parse_term("∀(10)x:s fn(x)"), *parse_term("forall(10) x:s fn(x)"));
  EXPECT_EQ(*parse_term("∃x:s p(x)"), *parse_term("exists(_True) x:s p(x)"));
  EXPECT_EQ(*parse_term("Σ x:s f(x)"), *parse_term("sum x:s f(x)"));
  EXPECT_EQ(*parse_term("a ≤ 2"), *parse_term("a <= 2"));
}

TEST(ParseTerm, QuantifierBodyIsGreedy) {
  auto t = parse_term("forall x:s f(x) = 1");
  const auto& q = std::get<Quant>(t->node);
  EXPECT_TRUE(std::holds_alternative<Compare>(q.body->node));
}

TEST(ParseTerm, ComparisonDoesNotChain) {
  EXPECT_EQ(error_pos([] { parse_term("a = b = c"); }), (SourcePos{1, 7}));
}

TEST(ParseTerm, Errors) {
  EXPECT_EQ(error_pos([] { parse_term("forall(10) x fn(x)"); }), (SourcePos{1, 14}));
  EXPECT_EQ(error_pos([] { parse_term("(a b"); }), (SourcePos{1, 5}));
  EXPECT_EQ(error_pos([] { parse_term("f(x))"); }), (SourcePos{1, 5}));
  EXPECT_EQ(error_pos([] { parse_term(""); }), (SourcePos{1, 1}));
}

TEST(ParseDeclaration, Loop) {
  auto d = parse_declaration("Declaration loop (E:TV) definition (e): (#v: V (v enp e)) = 1.");
  EXPECT_EQ(d.name, "loop");
  EXPECT_EQ(d.def.signature, (Signature{{"E"}, "TV"}));
  EXPECT_EQ(d.def.params, std::vector<std::string>{"e"});
  EXPECT_EQ(*d.def.body, *parse_term("(#v: V (v enp e)) = 1"));
}

TEST(ParseDeclaration, E2) {
  auto d = parse_declaration("Declaration E2 (E:TV) definition (e): (#y: V (e inc y)) ≤ 2.");
  EXPECT_EQ(d.name, "E2");
  EXPECT_EQ(*d.def.body,
            *make_compare(CompareOp::Leq,
                          make_count("y", "V", make_apply("inc", {var("e"), var("y")})), num(2)));
}

TEST(ParseDeclaration, DefForm) {
  auto a = parse_declaration("Declaration f1 (s:TV) definition (x): p(x).");
  auto b = parse_declaration("Declaration f1 (s:TV) (x) def p(x).");
  EXPECT_EQ(a.def, b.def);
}

TEST(ParseDeclaration, MissingDot) {
  EXPECT_EQ(error_pos([] { parse_declaration("Declaration loop (E:TV) definition (e): p(e)"); }),
            (SourcePos{1, 45}));
}

TEST(ParseQuery, Forms) {
  auto q = parse_query("? loop (_edge1)?");
  EXPECT_EQ(*q.term, *make_apply("loop", {make_const(Value::element("", "_edge1"))}));
  auto planets = parse_query("? (#p: Planet _True)?");
  EXPECT_EQ(*planets.term, *make_count("p", "Planet", tv(true)));
  auto open = parse_query("? x ?");
  EXPECT_EQ(*open.term, *var("x"));
  EXPECT_THROW(parse_query("? x"), ParseError);
  EXPECT_THROW(parse_query("x ?"), ParseError);
}

TEST(ParseQueries, Script) {
  auto qs = parse_queries("? a ? // c\n? b?");
  ASSERT_EQ(qs.size(), 2u);
  EXPECT_EQ(*qs[1].term, *var("b"));
}

TEST(PrintTerm, CanonicalForms) {
  EXPECT_EQ(print_term(*parse_term("∀x:s p(x)")), "forall(_True) x:s p(x)");
  EXPECT_EQ(print_term(*parse_term("(#v: V (v enp e))")), "(#v:V enp(v, e))");
  EXPECT_EQ(print_term(*parse_term("a ≤ 2.50")), "a <= 2.5");
  EXPECT_EQ(print_term(*parse_term("(forall x:s p(x)) = _False")),
            "(forall(_True) x:s p(x)) = _False");
}

TEST(ParseModel, Statements) {
  auto stmts = parse_model(
      "sort V = {_v1, _v2}.\n"
      "sort Empty = {}.\n"
      "declare enp (V V : TV).\n"
      "enp(_v1, _v2) = _True.\n"
      "default enp = _False.\n"
      "Declaration d (V:TV) definition (x): enp(x, x).\n");
  ASSERT_EQ(stmts.size(), 6u);
  EXPECT_EQ(std::get<SortStmt>(stmts[0].stmt).elements.size(), 2u);
  EXPECT_TRUE(std::get<SortStmt>(stmts[1].stmt).elements.empty());
  EXPECT_EQ(std::get<DeclareStmt>(stmts[2].stmt).signature, (Signature{{"V", "V"}, "TV"}));
  EXPECT_EQ(std::get<FactStmt>(stmts[3].stmt).args.size(), 2u);
  EXPECT_TRUE(std::holds_alternative<DefaultStmt>(stmts[4].stmt));
  EXPECT_EQ(std::get<Declaration>(stmts[5].stmt).name, "d");
  EXPECT_EQ(stmts[5].pos.line, 6);
}

// parse(print(t)) == t for generated terms, after resolving element literals.
TEST(RoundTrip, GeneratedTerms) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    oracle::GeneratorConfig cfg;
    cfg.seed = seed;
    const auto s = oracle::generate_structure(cfg);
    const auto t = oracle::generate_term(cfg, s);
    const auto text = print_term(*t);
    const auto back = resolve_elements(parse_term(text), s);
    ASSERT_EQ(*back, *t) << text;
  }
}

}  // namespace
}  // namespace gq
