#pragma once

#include "gq/error.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace gq {

enum class TokenKind { Identifier, ElementId, Number, Keyword, Punct, QuantSymbol, End };

/// Quantifier glyphs are kept as written (`∀`, `#`, ...); the parser treats
/// them and their ASCII keywords alike.
struct Token {
  TokenKind kind;
  std::string text;
  SourcePos pos;
};

bool is_keyword(std::string_view word);

/// Skips whitespace and `//` comments. The last token is always End.
/// Throws ParseError on an illegal character or a malformed number.
std::vector<Token> tokenize(std::string_view source);

std::string describe(const Token& tok);

}  // namespace gq
