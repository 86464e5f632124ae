#pragma once

// Seeded random programs, guards and automata for property and acceptance
// suites. Everything is driven by the passed-in engine, so a fixed seed
// reproduces the same case.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pga/ast.hpp"
#include "pga/automaton.hpp"
#include "pga/guard.hpp"

namespace testsupport {

inline std::uint64_t pick(std::mt19937_64& rng, std::uint64_t n) {
  return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng);
}

inline pga::Rational random_probability(std::mt19937_64& rng) {
  static const pga::Rational choices[] = {
      pga::Rational(1, 4), pga::Rational(1, 3), pga::Rational(1, 2), pga::Rational(2, 3)};
  return choices[pick(rng, 4)];
}

struct ProgramGenOptions {
  int max_vars = 3;
  int max_depth = 4;  // if-else nesting
  std::uint64_t max_const = 5;
  int min_stmts = 2;
  int max_stmts = 6;
  int max_geometric = 2;
  bool allow_observe = true;
  bool force_observe = false;
};

namespace detail {

struct ProgramGen {
  std::mt19937_64& rng;
  ProgramGenOptions opts;
  std::vector<pga::VarId> vars;
  int geometric_left;
  bool has_observe = false;

  pga::VarId var() { return vars[pick(rng, vars.size())]; }
  std::uint64_t constant() { return pick(rng, opts.max_const + 1); }

  pga::Guard guard(int depth) {
    switch (depth > 0 ? pick(rng, 8) : pick(rng, 6)) {
      case 0:
        return pga::Guard::atom(var(), pga::Cmp::Eq, constant());
      case 1:
        return pga::Guard::atom(var(), pga::Cmp::Ne, constant());
      case 2:
        return pga::Guard::atom(var(), pga::Cmp::Lt, constant() + 1);
      case 3:
        return pga::Guard::atom(var(), pga::Cmp::Le, constant());
      case 4:
        return pga::Guard::atom(var(), pga::Cmp::Gt, constant());
      case 5:
        return pga::Guard::atom(var(), pga::Cmp::Ge, constant());
      case 6:
        return pga::Guard::negation(guard(depth - 1));
      default:
        return pick(rng, 2) == 0
                   ? pga::Guard::conjunction(guard(depth - 1), guard(depth - 1))
                   : pga::Guard::disjunction(guard(depth - 1), guard(depth - 1));
    }
  }

  pga::Rhs rhs() {
    for (;;) {
      switch (pick(rng, 6)) {
        case 0:
          return pga::RhsConst{constant()};
        case 1:
          return pga::RhsVar{var()};
        case 2:
          return pga::RhsVarPlus{var(), constant()};
        case 3:
        case 4:
          return pga::RhsBernoulli{random_probability(rng)};
        default:
          if (geometric_left > 0) {
            --geometric_left;
            return pga::RhsGeometric{random_probability(rng)};
          }
          break;  // redraw
      }
    }
  }

  pga::Stmt stmt(int depth) {
    std::uint64_t kind = pick(rng, 10);
    if (kind == 0) return pga::Stmt{pga::StmtSkip{}};
    if (kind <= 5 || depth == 0) return pga::Stmt{pga::StmtAssign{var(), rhs()}};
    if (kind <= 7) {
      if (!opts.allow_observe) return pga::Stmt{pga::StmtAssign{var(), rhs()}};
      has_observe = true;
      return pga::Stmt{pga::StmtObserve{guard(1)}};
    }
    return pga::Stmt{pga::StmtIfElse{guard(1), program(depth - 1, 1, 2), program(depth - 1, 1, 2)}};
  }

  pga::Program program(int depth, int min_stmts, int max_stmts) {
    pga::Program p;
    int count = min_stmts + static_cast<int>(pick(
                                rng, static_cast<std::uint64_t>(max_stmts - min_stmts + 1)));
    for (int i = 0; i < count; ++i) p.stmts.push_back(stmt(depth));
    return p;
  }
};

}  // namespace detail

inline pga::Program random_program(std::mt19937_64& rng, const ProgramGenOptions& opts) {
  static const char* kNames[] = {"X", "Y", "Z"};
  detail::ProgramGen gen{rng, opts, {}, opts.max_geometric};
  int var_count = 1 + static_cast<int>(pick(rng, static_cast<std::uint64_t>(opts.max_vars)));
  for (int i = 0; i < var_count && i < 3; ++i) gen.vars.emplace_back(kNames[i]);

  pga::Program p = gen.program(opts.max_depth - 1, opts.min_stmts, opts.max_stmts);
  if (opts.force_observe && !gen.has_observe)
    p.stmts.push_back(pga::Stmt{pga::StmtObserve{gen.guard(1)}});
  return p;
}

struct PgaGenOptions {
  int max_states = 5;
  int max_vars = 2;
  int max_var_edges = 5;
  int max_scalar_edges = 4;
  bool forward_only_vars = false;  // no tagged cycles: finite support
};

// Random automaton whose scalar edges only run forward (no scalar cycles),
// so path enumeration terminates and star computations converge.
inline pga::Pga random_pga(std::mt19937_64& rng, const PgaGenOptions& opts = {}) {
  static const pga::Rational kWeights[] = {
      pga::Rational(1),    pga::Rational(1, 2), pga::Rational(1, 3),
      pga::Rational(1, 4), pga::Rational(2, 3), pga::Rational(2)};
  static const char* kNames[] = {"X", "Y"};

  std::size_t n = 2 + pick(rng, static_cast<std::uint64_t>(opts.max_states - 1));
  pga::Pga a(n);
  std::vector<pga::VarId> vars;
  for (int i = 0; i < opts.max_vars && i < 2; ++i) vars.emplace_back(kNames[i]);
  for (pga::VarId v : vars) a.declare_variable(v);

  a.set_initial(0, kWeights[pick(rng, 5)]);
  if (pick(rng, 3) == 0) a.set_initial(static_cast<pga::StateId>(pick(rng, n)), 1);
  std::size_t finals = 1 + pick(rng, 2);
  for (std::size_t i = 0; i < finals; ++i)
    a.set_final(static_cast<pga::StateId>(pick(rng, n)), kWeights[pick(rng, 6)]);

  std::size_t scalar_edges = pick(rng, static_cast<std::uint64_t>(opts.max_scalar_edges + 1));
  for (std::size_t i = 0; i < scalar_edges; ++i) {
    auto from = static_cast<pga::StateId>(pick(rng, n - 1));
    auto to = static_cast<pga::StateId>(from + 1 + pick(rng, n - from - 1));
    a.add_transition(from, to, kWeights[pick(rng, 6)]);
  }
  std::size_t var_edges = 1 + pick(rng, static_cast<std::uint64_t>(opts.max_var_edges));
  for (std::size_t i = 0; i < var_edges; ++i) {
    pga::StateId from, to;
    if (opts.forward_only_vars) {
      from = static_cast<pga::StateId>(pick(rng, n - 1));
      to = static_cast<pga::StateId>(from + 1 + pick(rng, n - from - 1));
    } else {
      from = static_cast<pga::StateId>(pick(rng, n));
      to = static_cast<pga::StateId>(pick(rng, n));
    }
    a.add_transition(from, to, kWeights[pick(rng, 6)], vars[pick(rng, vars.size())]);
  }
  return a;
}

inline pga::Guard random_guard(std::mt19937_64& rng, const std::vector<pga::VarId>& vars,
                               std::uint64_t max_const, int depth) {
  ProgramGenOptions opts;
  opts.max_const = max_const;
  detail::ProgramGen gen{rng, opts, vars, 0};
  return gen.guard(depth);
}

}  // namespace testsupport
