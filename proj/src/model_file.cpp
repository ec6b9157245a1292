#include "gq/model_file.hpp"

#include "gq/check.hpp"
#include "gq/error.hpp"
#include "gq/parser.hpp"

#include <fstream>
#include <sstream>

namespace gq {

namespace {

Value literal_value(const TermPtr& t, const Structure& s) {
  TermPtr resolved = resolve_elements(t, s);
  const auto* c = std::get_if<Const>(&resolved->node);
  if (!c) {
    throw Error(ErrorKind::SortMismatch, "expected a literal value, got " + print_term(*t));
  }
  return c->value;
}

std::string literal(const Value& v) {
  return v.is_number() ? render_decimal(v.as_number()) : render(v);
}

void apply(StructureBuilder& b, const ModelStmt& stmt) {
  std::visit(
      [&](const auto& st) {
        using T = std::decay_t<decltype(st)>;
        if constexpr (std::is_same_v<T, SortStmt>) {
          b.add_sort(st.name, st.elements);
        } else if constexpr (std::is_same_v<T, DeclareStmt>) {
          b.declare_function(st.name, st.signature);
        } else if constexpr (std::is_same_v<T, FactStmt>) {
          std::vector<Value> args;
          for (const auto& a : st.args) args.push_back(literal_value(a, b.view()));
          b.set_value(st.name, std::move(args), literal_value(st.value, b.view()));
        } else if constexpr (std::is_same_v<T, DefaultStmt>) {
          b.set_default(st.name, literal_value(st.value, b.view()));
        } else {
          b.register_declaration(st);
        }
      },
      stmt);
}

}  // namespace

void load_model_source(StructureBuilder& builder, std::string_view source) {
  StructureBuilder work = builder;
  for (const auto& ls : parse_model(source)) {
    try {
      apply(work, ls.stmt);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw Error(e.kind(), "line " + std::to_string(ls.pos.line) + ": " + e.what());
    }
  }
  builder = std::move(work);
}

void load_model_file(StructureBuilder& builder, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot read model file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  try {
    load_model_source(builder, text.str());
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

Structure load_model(const std::filesystem::path& path) {
  StructureBuilder b;
  load_model_file(b, path);
  return b.freeze();
}

std::string write_model(const Structure& s) {
  std::ostringstream os;
  for (const auto& name : s.sort_names()) {
    os << "sort " << name << " = {";
    const auto elems = s.enumerate_sort(name);
    for (std::size_t i = 0; i < elems.size(); ++i) os << (i ? ", " : "") << render(elems[i]);
    os << "}.\n";
  }
  for (const auto& name : s.symbol_names()) {
    if (s.has_definition(name)) {
      os << print_declaration(Declaration{name, s.definition(name)}) << "\n";
      continue;
    }
    const FunctionTable& t = s.table(name);
    os << "declare " << name << " " << print_signature(t.signature) << ".\n";
    for (const auto& [args, value] : t.entries) {
      os << name << "(";
      for (std::size_t i = 0; i < args.size(); ++i) os << (i ? ", " : "") << literal(args[i]);
      os << ") = " << literal(value) << ".\n";
    }
    if (t.fallback) os << "default " << name << " = " << literal(*t.fallback) << ".\n";
  }
  return os.str();
}

}  // namespace gq
