#include "gq/error.hpp"
#include "gq/value.hpp"

#include <sstream>

namespace gq {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateSort: return "duplicate sort";
    case ErrorKind::DuplicateElement: return "duplicate element";
    case ErrorKind::DuplicateSymbol: return "duplicate symbol";
    case ErrorKind::UnknownSort: return "unknown sort";
    case ErrorKind::UnknownSymbol: return "unknown symbol";
    case ErrorKind::UnboundVariable: return "unbound variable";
    case ErrorKind::SortMismatch: return "sort mismatch";
    case ErrorKind::ArityMismatch: return "arity mismatch";
    case ErrorKind::WFCViolation: return "well-formedness violation";
    case ErrorKind::RecursiveDeclaration: return "recursive declaration";
    case ErrorKind::NoValue: return "no value";
    case ErrorKind::Parse: return "parse error";
  }
  return "error";
}

namespace {

std::string parse_message(SourcePos pos, const std::string& expected, const std::string& found) {
  std::ostringstream os;
  os << pos.line << ':' << pos.column << ": expected " << expected << ", found " << found;
  return os.str();
}

}  // namespace

ParseError::ParseError(SourcePos pos, std::string expected, std::string found)
    : Error(ErrorKind::Parse, parse_message(pos, expected, found)),
      pos_(pos),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

SortName Value::sort() const {
  if (is_truth()) return SortName(kTruthSort);
  if (is_number()) return SortName(kNumberSort);
  return as_element().sort;
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.v_.index() != b.v_.index()) return a.v_.index() <=> b.v_.index();
  if (a.is_truth()) return a.as_truth() <=> b.as_truth();
  if (a.is_number()) {
    const auto& x = a.as_number();
    const auto& y = b.as_number();
    if (x < y) return std::strong_ordering::less;
    if (y < x) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  const auto& x = a.as_element();
  const auto& y = b.as_element();
  if (auto c = x.sort <=> y.sort; c != 0) return c;
  return x.id <=> y.id;
}

bool values_equal(const Value& a, const Value& b) {
  if (a.sort() != b.sort()) {
    throw Error(ErrorKind::SortMismatch,
                "cannot compare " + render(a) + " of sort " + a.sort() + " with " + render(b) +
                    " of sort " + b.sort());
  }
  return a == b;
}

std::string render(const Value& v) {
  if (v.is_truth()) return std::string(v.as_truth() ? kTrueId : kFalseId);
  if (v.is_element()) return v.as_element().id;
  const Rational& r = v.as_number();
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string render_decimal(const Rational& r) {
  using boost::multiprecision::cpp_int;
  cpp_int num = numerator(r);
  cpp_int den = denominator(r);
  if (den == 1) return num.str();

  cpp_int rest = den;
  int twos = 0, fives = 0;
  while (rest % 2 == 0) rest /= 2, ++twos;
  while (rest % 5 == 0) rest /= 5, ++fives;
  if (rest != 1) return num.str() + "/" + den.str();

  const int places = std::max(twos, fives);
  cpp_int scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  cpp_int scaled = num * (scale / den);
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;

  std::string digits = scaled.str();
  if (static_cast<int>(digits.size()) <= places) {
    digits.insert(0, places + 1 - digits.size(), '0');
  }
  digits.insert(digits.size() - places, ".");
  return negative ? "-" + digits : digits;
}

Rational parse_decimal(std::string_view text) {
  using boost::multiprecision::cpp_int;
  const auto dot = text.find('.');
  std::string whole(text.substr(0, dot));
  cpp_int num(whole);
  cpp_int den = 1;
  if (dot != std::string_view::npos) {
    for (char c : text.substr(dot + 1)) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
  }
  return Rational(num, den);
}

}  // namespace gq
