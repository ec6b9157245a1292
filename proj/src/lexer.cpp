#include "gq/lexer.hpp"

#include <array>
#include <cctype>

namespace gq {

namespace {

constexpr std::array<std::string_view, 8> kKeywords = {
    "Declaration", "definition", "forall", "exists", "sum", "sort", "declare", "default"};

struct Glyph {
  std::string_view bytes;
  TokenKind kind;
};

constexpr std::array<Glyph, 5> kGlyphs = {{
    {"∀", TokenKind::QuantSymbol},  // ∀
    {"∃", TokenKind::QuantSymbol},  // ∃
    {"Σ", TokenKind::QuantSymbol},  // Σ
    {"∑", TokenKind::QuantSymbol},  // ∑
    {"≤", TokenKind::Punct},        // ≤
}};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      if (at_end()) {
        out.push_back({TokenKind::End, "", pos_});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  bool at_end() const { return i_ >= src_.size(); }
  char peek(std::size_t k = 0) const { return i_ + k < src_.size() ? src_[i_ + k] : '\0'; }

  // Advances one code point, keeping line/column in code points.
  void advance() {
    const char c = src_[i_];
    if (c == '\n') {
      ++pos_.line;
      pos_.column = 1;
      ++i_;
      return;
    }
    ++i_;
    while (i_ < src_.size() && (static_cast<unsigned char>(src_[i_]) & 0xC0) == 0x80) ++i_;
    ++pos_.column;
  }

  void skip_space() {
    while (!at_end()) {
      if (std::isspace(static_cast<unsigned char>(peek()))) {
        advance();
      } else if (peek() == '/' && peek(1) == '/') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        return;
      }
    }
  }

  Token take(TokenKind kind, std::size_t start, SourcePos at) {
    return {kind, std::string(src_.substr(start, i_ - start)), at};
  }

  Token next() {
    const SourcePos at = pos_;
    const std::size_t start = i_;
    const char c = peek();

    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (!at_end() && ident_char(peek())) advance();
      Token t = take(TokenKind::Identifier, start, at);
      if (is_keyword(t.text)) t.kind = TokenKind::Keyword;
      return t;
    }
    if (c == '_') {
      advance();
      if (!ident_char(peek())) {
        throw ParseError(pos_, "element identifier after '_'", describe_char());
      }
      while (!at_end() && ident_char(peek())) advance();
      return take(TokenKind::ElementId, start, at);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number(start, at);

    for (const auto& g : kGlyphs) {
      if (src_.substr(i_).starts_with(g.bytes)) {
        advance();
        return take(g.kind, start, at);
      }
    }
    if (c == '<' && peek(1) == '=') {
      advance();
      advance();
      return take(TokenKind::Punct, start, at);
    }
    if (c == '#') {
      advance();
      return take(TokenKind::QuantSymbol, start, at);
    }
    if (std::string_view("(),:.=?{}").find(c) != std::string_view::npos) {
      advance();
      return take(TokenKind::Punct, start, at);
    }
    throw ParseError(at, "a token", describe_char());
  }

  Token number(std::size_t start, SourcePos at) {
    auto digits = [&] {
      while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
    };
    digits();
    // A dot not followed by a digit terminates the statement instead.
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      advance();
      digits();
      if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
        throw ParseError(pos_, "end of number", "second decimal point");
      }
    }
    if (ident_char(peek())) {
      const bool exponent = peek() == 'e' || peek() == 'E';
      throw ParseError(pos_, exponent ? "decimal number without exponent" : "end of number",
                       describe_char());
    }
    return take(TokenKind::Number, start, at);
  }

  std::string describe_char() const {
    if (at_end()) return "end of input";
    const auto b = static_cast<unsigned char>(peek());
    if (b < 0x80) return std::string("'") + peek() + "'";
    std::size_t n = 1;
    while (i_ + n < src_.size() && (static_cast<unsigned char>(src_[i_ + n]) & 0xC0) == 0x80) ++n;
    return "'" + std::string(src_.substr(i_, n)) + "'";
  }

  std::string_view src_;
  std::size_t i_ = 0;
  SourcePos pos_;
};

}  // namespace

bool is_keyword(std::string_view word) {
  for (auto k : kKeywords) {
    if (k == word) return true;
  }
  return false;
}

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

std::string describe(const Token& tok) {
  switch (tok.kind) {
    case TokenKind::End: return "end of input";
    case TokenKind::Identifier: return "identifier '" + tok.text + "'";
    case TokenKind::ElementId: return "element '" + tok.text + "'";
    case TokenKind::Number: return "number '" + tok.text + "'";
    case TokenKind::Keyword: return "keyword '" + tok.text + "'";
    default: return "'" + tok.text + "'";
  }
}

}  // namespace gq
