#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "pga/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "pga-infer: exact Bayesian inference for a loop-free discrete probabilistic "
      "language, via weighted automata over exact rationals"};

  std::string input_path;
  std::vector<std::string> queries;
  std::vector<std::string> marginals;
  std::vector<std::uint64_t> max_degrees;
  std::vector<std::string> expectations;
  std::string dot_path;
  std::string epsilon_text = "1/1000000";
  bool unnormalized = false, minimize = false, json = false, csv = false,
       oracle_check = false;

  app.add_option("file", input_path, "program file (.pp)")->required();
  app.add_option("--query", queries, "point query, e.g. \"P(X=1, Y=2)\"");
  app.add_option("--marginal", marginals, "tabulate the marginal of a variable");
  app.add_option("--max-degree", max_degrees,
                 "degree bound for the matching --marginal (default 8)");
  app.add_option("--expect", expectations, "expected value of a variable");
  app.add_flag("--unnormalized", unnormalized, "skip posterior normalization");
  app.add_flag("--minimize", minimize, "bisimulation-minimize after every statement");
  app.add_option("--dot", dot_path, "write the automaton as a DOT graph");
  app.add_flag("--json", json, "machine-readable JSON output");
  app.add_flag("--csv", csv, "CSV output for marginal tables");
  app.add_flag("--oracle-check", oracle_check,
               "cross-check against exhaustive path enumeration");
  app.add_option("--epsilon", epsilon_text,
                 "truncation bound for the oracle check (rational)");

  CLI11_PARSE(app, argc, argv);

  pga::cli::CliRequest req;
  req.input_path = input_path;
  req.unnormalized = unnormalized;
  req.minimize = minimize;
  req.json = json;
  req.csv = csv;
  req.oracle_check = oracle_check;
  if (!dot_path.empty()) req.dot_path = dot_path;

  try {
    req.epsilon = pga::Rational::parse(epsilon_text);
    for (const std::string& text : queries)
      req.point_queries.push_back(pga::cli::PointQuery{text, pga::cli::parse_point_query(text)});
    for (std::size_t i = 0; i < marginals.size(); ++i) {
      std::uint64_t degree = 8;
      if (i < max_degrees.size())
        degree = max_degrees[i];
      else if (!max_degrees.empty())
        degree = max_degrees.back();
      req.marginals.push_back(pga::cli::MarginalQuery{pga::VarId(marginals[i]), degree});
    }
    for (const std::string& name : expectations) req.expectations.emplace_back(name);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return pga::cli::kExitUserError;
  }

  return pga::cli::run(req, std::cout, std::cerr);
}
