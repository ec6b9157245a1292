#include "gq/parser.hpp"

#include "gq/error.hpp"

namespace gq {

namespace {

bool is_forall(const Token& t) {
  return (t.kind == TokenKind::Keyword && t.text == "forall") ||
         (t.kind == TokenKind::QuantSymbol && t.text == "∀");
}
bool is_exists(const Token& t) {
  return (t.kind == TokenKind::Keyword && t.text == "exists") ||
         (t.kind == TokenKind::QuantSymbol && t.text == "∃");
}
bool is_sum(const Token& t) {
  return (t.kind == TokenKind::Keyword && t.text == "sum") ||
         (t.kind == TokenKind::QuantSymbol && (t.text == "Σ" || t.text == "∑"));
}
bool is_comparator(const Token& t) {
  return t.kind == TokenKind::Punct && (t.text == "=" || t.text == "<=" || t.text == "≤");
}

class Parser {
 public:
  explicit Parser(std::string_view source) : toks_(tokenize(source)) {}

  TermPtr term() {
    if (is_forall(peek()) || is_exists(peek())) return quant();
    if (is_sum(peek())) return sum();
    TermPtr lhs = primary();
    if (!is_comparator(peek())) return lhs;
    const CompareOp op = take().text == "=" ? CompareOp::Eq : CompareOp::Leq;
    TermPtr rhs = operand();
    if (is_comparator(peek())) {
      throw ParseError(peek().pos, "end of comparison (comparisons do not chain)", describe(peek()));
    }
    return make_compare(op, std::move(lhs), std::move(rhs));
  }

  Declaration declaration() {
    expect_keyword("Declaration");
    Declaration d;
    d.name = identifier("function name");
    d.def.signature = signature();
    if (peek_keyword("definition")) {
      take();
      d.def.params = params();
      expect_punct(":");
    } else {
      d.def.params = params();
      if (!(peek().kind == TokenKind::Identifier && peek().text == "def")) {
        throw ParseError(peek().pos, "'def'", describe(peek()));
      }
      take();
    }
    d.def.body = term();
    expect_punct(".");
    return d;
  }

  Query query() {
    expect_punct("?");
    Query q{term()};
    expect_punct("?");
    return q;
  }

  LocatedStmt statement() {
    const SourcePos at = peek().pos;
    if (peek_keyword("Declaration")) return {declaration(), at};
    if (peek_keyword("sort")) {
      take();
      SortStmt s{identifier("sort name"), {}};
      expect_punct("=");
      expect_punct("{");
      if (!peek_punct("}")) {
        s.elements.push_back(element());
        while (peek_punct(",")) {
          take();
          s.elements.push_back(element());
        }
      }
      expect_punct("}");
      expect_punct(".");
      return {s, at};
    }
    if (peek_keyword("declare")) {
      take();
      DeclareStmt d{identifier("function name"), {}};
      d.signature = signature();
      expect_punct(".");
      return {d, at};
    }
    if (peek_keyword("default")) {
      take();
      DefaultStmt d{identifier("function name"), nullptr};
      expect_punct("=");
      d.value = primary();
      expect_punct(".");
      return {d, at};
    }
    FactStmt f{identifier("a statement"), {}, nullptr};
    expect_punct("(");
    f.args.push_back(primary());
    while (peek_punct(",")) {
      take();
      f.args.push_back(primary());
    }
    expect_punct(")");
    expect_punct("=");
    f.value = primary();
    expect_punct(".");
    return {f, at};
  }

  bool at_end() const { return peek().kind == TokenKind::End; }

  void expect_end() {
    if (!at_end()) throw ParseError(peek().pos, "end of input", describe(peek()));
  }

 private:
  const Token& peek(std::size_t k = 0) const {
    return toks_[std::min(i_ + k, toks_.size() - 1)];
  }
  const Token& take() {
    const Token& t = toks_[i_];
    if (i_ + 1 < toks_.size()) ++i_;
    return t;
  }
  bool peek_punct(std::string_view p) const {
    return peek().kind == TokenKind::Punct && peek().text == p;
  }
  bool peek_keyword(std::string_view k) const {
    return peek().kind == TokenKind::Keyword && peek().text == k;
  }
  void expect_punct(std::string_view p) {
    if (!peek_punct(p)) throw ParseError(peek().pos, "'" + std::string(p) + "'", describe(peek()));
    take();
  }
  void expect_keyword(std::string_view k) {
    if (!peek_keyword(k)) throw ParseError(peek().pos, "'" + std::string(k) + "'", describe(peek()));
    take();
  }
  std::string identifier(std::string_view what) {
    if (peek().kind != TokenKind::Identifier) {
      throw ParseError(peek().pos, std::string(what), describe(peek()));
    }
    return take().text;
  }
  std::string element() {
    if (peek().kind != TokenKind::ElementId) {
      throw ParseError(peek().pos, "element identifier", describe(peek()));
    }
    return take().text;
  }

  // var ':' sort
  std::pair<std::string, SortName> binder() {
    std::string var = identifier("quantifier variable");
    expect_punct(":");
    SortName sort = identifier("sort name");
    return {std::move(var), std::move(sort)};
  }

  TermPtr quant() {
    const QuantKind kind = is_forall(take()) ? QuantKind::Forall : QuantKind::Exists;
    TermPtr param;
    if (peek_punct("(")) {
      take();
      param = term();
      expect_punct(")");
    } else {
      param = make_const(Value::truth(true));
    }
    auto [var, sort] = binder();
    return make_quant(kind, std::move(param), std::move(var), std::move(sort), term());
  }

  TermPtr sum() {
    take();
    auto [var, sort] = binder();
    return make_sum(std::move(var), std::move(sort), term());
  }

  TermPtr operand() {
    if (is_forall(peek()) || is_exists(peek())) return quant();
    if (is_sum(peek())) return sum();
    return primary();
  }

  TermPtr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::ElementId: {
        take();
        if (t.text == kTrueId) return make_const(Value::truth(true));
        if (t.text == kFalseId) return make_const(Value::truth(false));
        return make_const(Value::element("", t.text));
      }
      case TokenKind::Number:
        take();
        return make_const(Value::number(parse_decimal(t.text)));
      case TokenKind::Identifier: {
        std::string name = take().text;
        if (!peek_punct("(")) return make_var(std::move(name));
        take();
        std::vector<TermPtr> args{term()};
        while (peek_punct(",")) {
          take();
          args.push_back(term());
        }
        expect_punct(")");
        return make_apply(std::move(name), std::move(args));
      }
      case TokenKind::Punct:
        if (t.text == "(") return parenthesized();
        break;
      default:
        break;
    }
    throw ParseError(t.pos, "a term", describe(t));
  }

  // '(' '#' binder term ')' | '(' term ')' | '(' term ident term ')'
  TermPtr parenthesized() {
    take();
    if (peek().kind == TokenKind::QuantSymbol && peek().text == "#") {
      take();
      auto [var, sort] = binder();
      TermPtr body = term();
      expect_punct(")");
      return make_count(std::move(var), std::move(sort), std::move(body));
    }
    TermPtr first = term();
    if (peek_punct(")")) {
      take();
      return first;
    }
    if (peek().kind != TokenKind::Identifier) {
      throw ParseError(peek().pos, "')' or an infix function name", describe(peek()));
    }
    std::string fn = take().text;
    TermPtr second = term();
    expect_punct(")");
    return make_apply(std::move(fn), {std::move(first), std::move(second)});
  }

  Signature signature() {
    expect_punct("(");
    Signature sig;
    sig.arg_sorts.push_back(identifier("argument sort"));
    while (!peek_punct(":")) {
      if (peek_punct(",")) take();
      sig.arg_sorts.push_back(identifier("argument sort or ':'"));
    }
    take();
    sig.result_sort = identifier("result sort");
    expect_punct(")");
    return sig;
  }

  std::vector<std::string> params() {
    expect_punct("(");
    std::vector<std::string> ps{identifier("parameter name")};
    while (peek_punct(",")) {
      take();
      ps.push_back(identifier("parameter name"));
    }
    expect_punct(")");
    return ps;
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace

TermPtr parse_term(std::string_view source) {
  Parser p(source);
  TermPtr t = p.term();
  p.expect_end();
  return t;
}

Declaration parse_declaration(std::string_view source) {
  Parser p(source);
  Declaration d = p.declaration();
  p.expect_end();
  return d;
}

Query parse_query(std::string_view source) {
  Parser p(source);
  Query q = p.query();
  p.expect_end();
  return q;
}

std::vector<Query> parse_queries(std::string_view source) {
  Parser p(source);
  std::vector<Query> out;
  while (!p.at_end()) out.push_back(p.query());
  return out;
}

std::vector<LocatedStmt> parse_model(std::string_view source) {
  Parser p(source);
  std::vector<LocatedStmt> out;
  while (!p.at_end()) out.push_back(p.statement());
  return out;
}

}  // namespace gq
