#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pga/analysis.hpp"
#include "pga/automaton.hpp"
#include "pga/rational.hpp"

namespace pga::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitUserError = 1;
inline constexpr int kExitZeroMass = 2;
inline constexpr int kExitDivergent = 3;
inline constexpr int kExitOracleMismatch = 4;

struct PointQuery {
  std::string text;  // canonical "X=1, Y=2" rendering
  Valuation target;
};

struct MarginalQuery {
  VarId var;
  std::uint64_t max_degree;
};

struct CliRequest {
  std::string input_path;
  std::vector<PointQuery> point_queries;
  std::vector<MarginalQuery> marginals;
  std::vector<VarId> expectations;
  bool unnormalized = false;
  bool minimize = false;
  std::optional<std::string> dot_path;
  bool json = false;
  bool csv = false;
  bool oracle_check = false;
  Rational epsilon{1, 1000000};
};

/// Parses "P(X=1)" / "P(X=1, Y=0)". Throws std::invalid_argument.
Valuation parse_point_query(std::string_view text);

/// Executes parse -> infer -> (normalize unless unnormalized) -> queries.
/// Returns the process exit code; data goes to `out`, diagnostics to `err`.
int run(const CliRequest& req, std::ostream& out, std::ostream& err);

/// Deterministic DOT rendering: one node per state annotated with nonzero
/// initial/final weights, one edge per transition labeled "r" or "r·X".
std::string dot_export(const Pga& a);

struct QueryResult {
  std::string kind;  // "point" | "marginal" | "expectation"
  std::string target;
  Rational value;                                        // point / expectation
  std::vector<std::pair<std::string, Rational>> table;  // marginal, by degree
  Rational residual;
};

struct RunReport {
  std::string program_path;
  bool normalized = true;
  Rational mass;
  std::vector<QueryResult> queries;
};

/// Single JSON object with fixed key order; rationals are serialized as
/// strings so no precision is lost.
std::string json_report(const RunReport& report);

}  // namespace pga::cli
