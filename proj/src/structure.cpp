#include "gq/structure.hpp"

#include "gq/check.hpp"
#include "gq/error.hpp"

#include <algorithm>
#include <set>

namespace gq {

namespace {

bool is_builtin_sort(std::string_view name) { return name == kTruthSort || name == kNumberSort; }

void collect_symbols(const Term& t, std::set<std::string>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Apply>) {
          out.insert(n.fn);
          for (const auto& a : n.args) collect_symbols(*a, out);
        } else if constexpr (std::is_same_v<T, Compare>) {
          collect_symbols(*n.lhs, out);
          collect_symbols(*n.rhs, out);
        } else if constexpr (std::is_same_v<T, Quant>) {
          collect_symbols(*n.param, out);
          collect_symbols(*n.body, out);
        } else if constexpr (std::is_same_v<T, Count> || std::is_same_v<T, Sum>) {
          collect_symbols(*n.body, out);
        }
      },
      t.node);
}

}  // namespace

Structure::Structure() = default;

bool Structure::has_sort(std::string_view name) const {
  return is_builtin_sort(name) || sorts_.contains(name);
}

std::vector<Value> Structure::enumerate_sort(std::string_view sort) const {
  if (sort == kTruthSort) return {Value::truth(true), Value::truth(false)};
  if (sort == kNumberSort) {
    throw Error(ErrorKind::SortMismatch, "sort Number is infinite and cannot be enumerated");
  }
  auto it = sorts_.find(sort);
  if (it == sorts_.end()) throw Error(ErrorKind::UnknownSort, "unknown sort " + std::string(sort));
  return it->second;
}

std::optional<SortName> Structure::sort_of_element(std::string_view id) const {
  if (id == kTrueId || id == kFalseId) return SortName(kTruthSort);
  auto it = element_sorts_.find(id);
  if (it == element_sorts_.end()) return std::nullopt;
  return it->second;
}

bool Structure::has_table(std::string_view name) const { return tables_.contains(name); }

bool Structure::has_definition(std::string_view name) const { return definitions_.contains(name); }

const Signature& Structure::signature_of(std::string_view name) const {
  if (auto t = tables_.find(name); t != tables_.end()) return t->second.signature;
  if (auto d = definitions_.find(name); d != definitions_.end()) return d->second.signature;
  throw Error(ErrorKind::UnknownSymbol, "unknown function " + std::string(name));
}

const FunctionTable& Structure::table(std::string_view name) const {
  auto it = tables_.find(name);
  if (it == tables_.end()) {
    throw Error(ErrorKind::UnknownSymbol, "unknown function " + std::string(name));
  }
  return it->second;
}

const FunctionDef& Structure::definition(std::string_view name) const {
  auto it = definitions_.find(name);
  if (it == definitions_.end()) {
    throw Error(ErrorKind::UnknownSymbol, "unknown definition " + std::string(name));
  }
  return it->second;
}

void Structure::check_args(std::string_view name, const Signature& sig,
                           std::span<const Value> args) const {
  if (args.size() != sig.arg_sorts.size()) {
    throw Error(ErrorKind::ArityMismatch, std::string(name) + " expects " +
                                              std::to_string(sig.arg_sorts.size()) +
                                              " argument(s), got " + std::to_string(args.size()));
  }
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i].sort() != sig.arg_sorts[i]) {
      throw Error(ErrorKind::SortMismatch, "argument " + std::to_string(i + 1) + " of " +
                                               std::string(name) + " expects sort " +
                                               sig.arg_sorts[i] + ", got " + render(args[i]) +
                                               " of sort " + args[i].sort());
    }
  }
}

std::optional<Value> Structure::lookup(std::string_view name, std::span<const Value> args) const {
  const FunctionTable& t = table(name);
  check_args(name, t.signature, args);
  std::vector<Value> key(args.begin(), args.end());
  if (auto it = t.entries.find(key); it != t.entries.end()) return it->second;
  return t.fallback;
}

Structure Structure::with_reversed_enumeration() const {
  Structure copy = *this;
  for (auto& [name, elements] : copy.sorts_) std::reverse(elements.begin(), elements.end());
  return copy;
}

StructureBuilder& StructureBuilder::add_sort(const SortName& name,
                                             const std::vector<std::string>& elements) {
  if (name.empty()) throw Error(ErrorKind::UnknownSort, "empty sort name");
  if (s_.has_sort(name)) throw Error(ErrorKind::DuplicateSort, "sort " + name + " already declared");
  std::set<std::string, std::less<>> seen;
  for (const auto& id : elements) {
    if (id.size() < 2 || id.front() != '_') {
      throw Error(ErrorKind::Parse, "element id " + id + " must start with '_'");
    }
    if (id == kTrueId || id == kFalseId) {
      throw Error(ErrorKind::DuplicateElement, id + " is a reserved truth value");
    }
    if (!seen.insert(id).second) {
      throw Error(ErrorKind::DuplicateElement, "element " + id + " listed twice in sort " + name);
    }
    if (auto other = s_.sort_of_element(id)) {
      throw Error(ErrorKind::DuplicateElement, "element " + id + " already belongs to sort " + *other);
    }
  }
  std::vector<Value> values;
  values.reserve(elements.size());
  for (const auto& id : elements) {
    values.push_back(Value::element(name, id));
    s_.element_sorts_.emplace(id, name);
  }
  s_.sorts_.emplace(name, std::move(values));
  s_.sort_order_.push_back(name);
  return *this;
}

void StructureBuilder::check_fresh_symbol(const std::string& name) const {
  if (s_.has_symbol(name)) {
    throw Error(ErrorKind::DuplicateSymbol, "symbol " + name + " already declared");
  }
}

StructureBuilder& StructureBuilder::declare_function(const std::string& name, Signature sig) {
  check_fresh_symbol(name);
  if (sig.arg_sorts.empty()) {
    throw Error(ErrorKind::ArityMismatch, "function " + name + " needs at least one argument");
  }
  for (const auto& s : sig.arg_sorts) {
    if (!s_.has_sort(s)) throw Error(ErrorKind::UnknownSort, "unknown sort " + s);
  }
  if (!s_.has_sort(sig.result_sort)) {
    throw Error(ErrorKind::UnknownSort, "unknown sort " + sig.result_sort);
  }
  s_.tables_.emplace(name, FunctionTable{name, std::move(sig), {}, std::nullopt});
  s_.symbol_order_.push_back(name);
  return *this;
}

void StructureBuilder::check_value_sort(const Value& v, const SortName& sort,
                                        std::string_view what) const {
  if (v.sort() != sort) {
    throw Error(ErrorKind::SortMismatch, std::string(what) + " expects sort " + sort + ", got " +
                                             render(v) + " of sort " + v.sort());
  }
  if (v.is_element() && s_.sort_of_element(v.as_element().id) != sort) {
    throw Error(ErrorKind::SortMismatch,
                "element " + v.as_element().id + " is not a member of sort " + sort);
  }
}

StructureBuilder& StructureBuilder::set_value(const std::string& name, std::vector<Value> args,
                                              Value value) {
  if (s_.has_definition(name)) {
    throw Error(ErrorKind::SortMismatch, name + " is defined by a term and has no table");
  }
  auto it = s_.tables_.find(name);
  if (it == s_.tables_.end()) throw Error(ErrorKind::UnknownSymbol, "unknown function " + name);
  FunctionTable& t = it->second;
  s_.check_args(name, t.signature, args);
  for (std::size_t i = 0; i < args.size(); ++i) {
    check_value_sort(args[i], t.signature.arg_sorts[i],
                     "argument " + std::to_string(i + 1) + " of " + name);
  }
  check_value_sort(value, t.signature.result_sort, "result of " + name);
  t.entries.insert_or_assign(std::move(args), std::move(value));
  return *this;
}

StructureBuilder& StructureBuilder::set_default(const std::string& name, Value value) {
  auto it = s_.tables_.find(name);
  if (it == s_.tables_.end()) throw Error(ErrorKind::UnknownSymbol, "unknown function " + name);
  check_value_sort(value, it->second.signature.result_sort, "default of " + name);
  it->second.fallback = std::move(value);
  return *this;
}

StructureBuilder& StructureBuilder::register_declaration(const Declaration& decl) {
  check_fresh_symbol(decl.name);
  const FunctionDef& def = decl.def;
  if (def.signature.arg_sorts.empty()) {
    throw Error(ErrorKind::ArityMismatch, "definition " + decl.name + " needs at least one argument");
  }
  if (def.params.size() != def.signature.arg_sorts.size()) {
    throw Error(ErrorKind::ArityMismatch,
                decl.name + " declares " + std::to_string(def.signature.arg_sorts.size()) +
                    " argument sort(s) but " + std::to_string(def.params.size()) + " parameter(s)");
  }
  for (const auto& s : def.signature.arg_sorts) {
    if (!s_.has_sort(s)) throw Error(ErrorKind::UnknownSort, "unknown sort " + s);
  }
  if (!s_.has_sort(def.signature.result_sort)) {
    throw Error(ErrorKind::UnknownSort, "unknown sort " + def.signature.result_sort);
  }

  std::set<std::string> symbols;
  collect_symbols(*def.body, symbols);
  if (symbols.contains(decl.name)) {
    throw Error(ErrorKind::RecursiveDeclaration, decl.name + " refers to itself");
  }

  VarSorts params;
  for (std::size_t i = 0; i < def.params.size(); ++i) {
    if (!params.emplace(def.params[i], def.signature.arg_sorts[i]).second) {
      throw Error(ErrorKind::DuplicateSymbol, "parameter " + def.params[i] + " listed twice");
    }
  }
  TermPtr body = resolve_elements(def.body, s_);
  const SortName got = sort_of(*body, params, s_);
  if (got != def.signature.result_sort) {
    throw Error(ErrorKind::SortMismatch, decl.name + " is declared with result sort " +
                                             def.signature.result_sort + " but its body has sort " +
                                             got);
  }

  s_.definitions_.emplace(decl.name, FunctionDef{def.signature, def.params, std::move(body)});
  s_.symbol_order_.push_back(decl.name);
  return *this;
}

}  // namespace gq
