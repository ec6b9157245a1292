#include "gq/session.hpp"

#include "gq/check.hpp"
#include "gq/error.hpp"
#include "gq/model_file.hpp"
#include "gq/parser.hpp"

#include "json.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace gq {

int exit_code(QueryStatus status) {
  switch (status) {
    case QueryStatus::Ok: return 0;
    case QueryStatus::NoValue:
    case QueryStatus::Error: return 1;
    case QueryStatus::ParseError: return 2;
  }
  return 1;
}

void Session::load(const std::filesystem::path& path) {
  load_model_file(builder_, path);
  structure_ = builder_.freeze();
}

void Session::load_source(std::string_view source) {
  load_model_source(builder_, source);
  structure_ = builder_.freeze();
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

QueryResult Session::run_query(const std::string& source) {
  QueryResult r{trim(source), QueryStatus::Ok, ""};
  try {
    Query q = r.query.starts_with('?') ? parse_query(r.query) : Query{parse_term(r.query)};
    q.term = resolve_elements(q.term, structure_);
    check_closed(*q.term);
    sort_of(*q.term, {}, structure_);
    EvalOutcome o = eval_query(q, structure_);
    if (o.is_defined()) {
      r.text = render(o.value());
    } else if (o.failure().kind == ErrorKind::NoValue) {
      r.status = QueryStatus::NoValue;
      r.text = "No value";
    } else {
      r.status = QueryStatus::Error;
      r.text = "error: " + std::string(to_string(o.failure().kind)) + ": " + o.failure().detail;
    }
  } catch (const ParseError& e) {
    r.status = QueryStatus::ParseError;
    r.text = "error: parse error at " + std::string(e.what());
  } catch (const Error& e) {
    r.status = QueryStatus::Error;
    r.text = "error: " + std::string(to_string(e.kind())) + ": " + e.what();
  }
  history_.push_back(r);
  return r;
}

std::string Session::format(const QueryResult& r) const {
  if (format_ == OutputFormat::Text) return r.text;
  nlohmann::ordered_json j;
  j["query"] = r.query;
  switch (r.status) {
    case QueryStatus::Ok:
      j["status"] = "ok";
      j["value"] = r.text;
      break;
    case QueryStatus::NoValue:
      j["status"] = "no_value";
      j["value"] = nullptr;
      break;
    default:
      j["status"] = "error";
      j["value"] = r.text;
      break;
  }
  return j.dump();
}

std::string Session::list_sorts() const {
  std::ostringstream os;
  for (const auto& name : structure_.sort_names()) {
    const auto n = structure_.enumerate_sort(name).size();
    os << name << " (" << n << (n == 1 ? " element)\n" : " elements)\n");
  }
  return os.str();
}

std::string Session::list_functions() const {
  std::ostringstream os;
  for (const auto& name : structure_.symbol_names()) {
    os << name << " " << print_signature(structure_.signature_of(name))
       << (structure_.has_definition(name) ? " definition\n" : " table\n");
  }
  return os.str();
}

int Session::repl(std::istream& in, std::ostream& out, bool prompt) {
  static constexpr std::string_view kHelp =
      "commands: ? <term> ?   :load <path>   :sorts   :functions   :quit\n";
  std::string line;
  while (true) {
    if (prompt) out << "gq> " << std::flush;
    if (!std::getline(in, line)) break;
    const std::string cmd = trim(line);
    if (cmd.empty()) continue;
    if (cmd == ":quit" || cmd == ":q") break;
    if (cmd == ":sorts") {
      out << list_sorts();
    } else if (cmd == ":functions") {
      out << list_functions();
    } else if (cmd.starts_with(":load")) {
      const std::string path = trim(std::string_view(cmd).substr(5));
      try {
        load(path);
        out << "loaded " << path << "\n";
      } catch (const Error& e) {
        out << "error: " << e.what() << "\n";
      }
    } else if (cmd.starts_with(':')) {
      out << "unknown command " << cmd << "\n" << kHelp;
    } else {
      out << format(run_query(cmd)) << "\n";
    }
  }
  return 0;
}

}  // namespace gq
