#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>
#include <variant>

namespace gq {

using Rational = boost::multiprecision::cpp_rational;
using SortName = std::string;

inline constexpr std::string_view kTruthSort = "TV";
inline constexpr std::string_view kNumberSort = "Number";
inline constexpr std::string_view kTrueId = "_True";
inline constexpr std::string_view kFalseId = "_False";

/// An element of a user sort. `sort` is empty for a literal that the
/// parser produced and that has not been resolved against a structure yet.
struct Element {
  SortName sort;
  std::string id;

  friend bool operator==(const Element&, const Element&) = default;
};

/// A truth value, an exact rational, or a sort-tagged element.
class Value {
 public:
  Value() : v_(false) {}
  static Value truth(bool b) { return Value(b); }
  static Value number(Rational r) { return Value(std::move(r)); }
  static Value element(SortName sort, std::string id) {
    return Value(Element{std::move(sort), std::move(id)});
  }

  bool is_truth() const { return std::holds_alternative<bool>(v_); }
  bool is_number() const { return std::holds_alternative<Rational>(v_); }
  bool is_element() const { return std::holds_alternative<Element>(v_); }

  bool as_truth() const { return std::get<bool>(v_); }
  const Rational& as_number() const { return std::get<Rational>(v_); }
  const Element& as_element() const { return std::get<Element>(v_); }

  SortName sort() const;

  /// Same sort and same value. Does not check sorts; see `values_equal`.
  friend bool operator==(const Value& a, const Value& b) { return a.v_ == b.v_; }

  /// Total order used for table keys and canonical sorting. Orders first by
  /// kind, then by sort, then by payload.
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);

 private:
  explicit Value(bool b) : v_(b) {}
  explicit Value(Rational r) : v_(std::move(r)) {}
  explicit Value(Element e) : v_(std::move(e)) {}

  std::variant<bool, Rational, Element> v_;
};

/// Sort-checked equality: throws Error(SortMismatch) when the sorts differ.
bool values_equal(const Value& a, const Value& b);

/// `_True`, `_False`, an element id, an integer, or `n/d`.
std::string render(const Value& v);

/// Shortest exact decimal for rationals whose denominator divides a power of
/// ten; `n/d` otherwise.
std::string render_decimal(const Rational& r);

/// Parses `digits[.digits]`. The caller guarantees the shape.
Rational parse_decimal(std::string_view text);

}  // namespace gq
