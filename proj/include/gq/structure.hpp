#pragma once

#include "gq/term.hpp"
#include "gq/value.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gq {

/// A finite, possibly partial, function table. `fallback` (from a `default`
/// statement) answers every tuple without an explicit entry.
struct FunctionTable {
  std::string name;
  Signature signature;
  std::map<std::vector<Value>, Value> entries;
  std::optional<Value> fallback;
};

class StructureBuilder;

/// A frozen finite many-sorted structure. Only StructureBuilder can change
/// one, so a Structure obtained from `StructureBuilder::freeze` is safe to
/// share between concurrent evaluations.
class Structure {
 public:
  Structure();

  bool has_sort(std::string_view name) const;
  /// Elements in canonical (declaration) order. TV enumerates as
  /// `_True, _False`. Throws UnknownSort, or SortMismatch for Number.
  std::vector<Value> enumerate_sort(std::string_view sort) const;
  /// User-declared sorts in declaration order (TV and Number excluded).
  const std::vector<SortName>& sort_names() const { return sort_order_; }

  /// Sort of an element id, if some sort declares it.
  std::optional<SortName> sort_of_element(std::string_view id) const;

  bool has_table(std::string_view name) const;
  bool has_definition(std::string_view name) const;
  bool has_symbol(std::string_view name) const {
    return has_table(name) || has_definition(name);
  }
  /// Signature of a table- or term-defined symbol. Throws UnknownSymbol.
  const Signature& signature_of(std::string_view name) const;

  const FunctionTable& table(std::string_view name) const;
  const FunctionDef& definition(std::string_view name) const;

  /// Symbols in registration order (tables and definitions interleaved).
  const std::vector<std::string>& symbol_names() const { return symbol_order_; }

  /// Table read. std::nullopt is the "no value" outcome, not an error.
  /// Throws UnknownSymbol, ArityMismatch or SortMismatch.
  std::optional<Value> lookup(std::string_view name, std::span<const Value> args) const;

  /// Copy of this structure with every sort enumerated in reverse.
  Structure with_reversed_enumeration() const;

 private:
  friend class StructureBuilder;

  void check_args(std::string_view name, const Signature& sig,
                  std::span<const Value> args) const;

  std::map<SortName, std::vector<Value>, std::less<>> sorts_;
  std::vector<SortName> sort_order_;
  std::map<std::string, SortName, std::less<>> element_sorts_;
  std::map<std::string, FunctionTable, std::less<>> tables_;
  std::map<std::string, FunctionDef, std::less<>> definitions_;
  std::vector<std::string> symbol_order_;
};

/// Builder-phase API. Every method validates its input and throws gq::Error
/// on violation, leaving the builder unchanged.
class StructureBuilder {
 public:
  StructureBuilder& add_sort(const SortName& name, const std::vector<std::string>& elements);
  StructureBuilder& declare_function(const std::string& name, Signature sig);
  /// Last write wins.
  StructureBuilder& set_value(const std::string& name, std::vector<Value> args, Value value);
  StructureBuilder& set_default(const std::string& name, Value value);
  /// Sort-checks the body (params bound to the signature's argument sorts),
  /// resolves element literals, and registers a term-defined function. The
  /// body may only refer to symbols registered earlier.
  StructureBuilder& register_declaration(const Declaration& decl);

  /// The structure as built so far (used for checking during building).
  const Structure& view() const { return s_; }
  Structure freeze() const { return s_; }

 private:
  void check_fresh_symbol(const std::string& name) const;
  void check_value_sort(const Value& v, const SortName& sort, std::string_view what) const;

  Structure s_;
};

}  // namespace gq
