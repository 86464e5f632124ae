#pragma once

#include <set>

#include "pga/analysis.hpp"
#include "pga/ast.hpp"
#include "pga/automaton.hpp"

namespace pga {

struct TransformerConfig {
  bool auto_trim = true;  // trim after every statement
  bool minimize = false;  // bisim_minimize after every statement
};

/// Point mass at the all-zero valuation: one state, I = F = 1, PGF 1.
Pga initial_pga(const std::set<VarId>& vars);

/// Applies one statement to the distribution encoded by `a`.
Pga transform(const Stmt& s, const Pga& a, const TransformerConfig& cfg);

/// Folds transform left-to-right over the statement list.
Pga transform_program(const Program& p, Pga a, const TransformerConfig& cfg);

/// Unnormalized posterior of the whole program, starting from the all-zero
/// point mass over its free variables.
Pga infer(const Program& p, const TransformerConfig& cfg = {});

/// Normalized posterior; throws ZeroMassError when every outcome was
/// rejected by observations.
Pga posterior(const Program& p, const TransformerConfig& cfg = {});

}  // namespace pga
