#pragma once

#include <vector>

#include "pga/analysis.hpp"
#include "pga/ast.hpp"
#include "pga/rational.hpp"

namespace pga::oracle {

struct ComparisonViolation {
  Valuation valuation;
  Rational pga_value;
  Rational oracle_value;
};

struct ComparisonReport {
  std::vector<ComparisonViolation> violations;
  bool ok() const { return violations.empty(); }
};

struct EnumerationResult {
  DistTable table;       // unnormalized posterior, keyed over all program vars
  Rational killed_mass;  // mass dropped by failed observations
};

/// Reference small-step semantics by exhaustive path enumeration.
/// Deterministic statements rewrite the configuration; bernoulli splits in
/// two; geometric(q) expands children i = 0..k where k is minimal with
/// q^{k+1} < epsilon / (number of geometric statements), and the exact tail
/// q^{k+1}·mass is added to the residual. Observation drops violating
/// configurations (tracked in killed_mass, not the residual). The table sums
/// terminal masses per valuation; entries + residual + killed_mass = 1.
EnumerationResult enumerate_full(const Program& p, const Rational& epsilon);

/// The table of enumerate_full. Rejects epsilon <= 0.
DistTable enumerate(const Program& p, const Rational& epsilon);

/// Checks |pga - oracle| <= oracle.residual + tol for every valuation in
/// either table (missing entries read as 0; valuations are aligned over the
/// union of their variables). Violations are reported, not thrown.
ComparisonReport compare(const DistTable& pga_table, const DistTable& oracle_table,
                         const Rational& tol);

}  // namespace pga::oracle
