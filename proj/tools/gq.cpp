#include "gq/error.hpp"
#include "gq/oracle.hpp"
#include "gq/parser.hpp"
#include "gq/session.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <unistd.h>

namespace {

int run_check(int iterations, std::uint64_t seed, const std::string& report_path) {
  gq::oracle::GeneratorConfig cfg;
  cfg.seed = seed;
  const auto found = gq::oracle::differential_check(cfg, iterations);
  const int agreed = iterations - static_cast<int>(found.size());
  std::cout << agreed << "/" << iterations << " agreed\n";
  if (found.empty()) return 0;
  std::ofstream(report_path) << gq::oracle::format_report(found);
  std::cout << found.size() << " discrepancies written to " << report_path << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evaluate quantifier queries over finite many-sorted models"};
  std::vector<std::string> models;
  std::vector<std::string> queries;
  std::string script;
  bool check = false;
  int iterations = 1000;
  std::uint64_t seed = 1;
  std::string report = "gq-check-report.txt";
  std::string format = "text";

  app.add_option("--model", models, "Model file (repeatable, loaded in order)");
  app.add_option("--query", queries, "Query text, e.g. \"? loop(_e1)?\" (repeatable)");
  app.add_option("--script", script, "File of queries");
  app.add_flag("--check", check, "Run the differential check against the reference oracle");
  app.add_option("--iterations", iterations, "Differential check iterations")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", seed, "Differential check seed");
  app.add_option("--report", report, "Where to write discrepancies");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json-lines"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (check) return run_check(iterations, seed, report);

  gq::Session session(format == "json-lines" ? gq::OutputFormat::JsonLines
                                             : gq::OutputFormat::Text);
  try {
    for (const auto& m : models) session.load(m);
  } catch (const gq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (queries.empty() && script.empty()) {
    return session.repl(std::cin, std::cout, isatty(STDIN_FILENO) != 0);
  }

  if (!script.empty()) {
    std::ifstream in(script);
    if (!in) {
      std::cerr << "error: cannot read script " << script << "\n";
      return 2;
    }
    std::ostringstream text;
    text << in.rdbuf();
    try {
      for (const auto& q : gq::parse_queries(text.str())) {
        queries.push_back("? " + gq::print_term(*q.term) + " ?");
      }
    } catch (const gq::ParseError& e) {
      std::cerr << "error: " << script << ":" << e.what() << "\n";
      return 2;
    }
  }

  int rc = 0;
  for (const auto& q : queries) {
    const auto r = session.run_query(q);
    std::cout << session.format(r) << "\n";
    rc = std::max(rc, gq::exit_code(r.status));
  }
  return rc;
}
