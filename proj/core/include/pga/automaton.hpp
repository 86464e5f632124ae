#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "pga/guard.hpp"
#include "pga/rational.hpp"
#include "pga/var.hpp"

namespace pga {

using StateId = std::uint32_t;

/// Transition weight: either a scalar r or a tagged term r·X.
struct Label {
  Rational weight;
  std::optional<VarId> var;

  bool is_scalar() const { return !var.has_value(); }
};

Label scalar_label(Rational weight);
Label var_label(Rational weight, VarId var);

struct Transition {
  StateId from;
  StateId to;
  Label label;
};

/// Probability generating automaton: a weighted automaton (Q, M, I, F) whose
/// labels are r or r·X over exact rationals. Its semantics I·M*·F is a formal
/// power series in the program variables; the coefficient of a monomial is
/// the summed weight of all paths taking exactly that many tagged transitions
/// per variable. A well-formed PGA has total mass <= 1, but intermediate
/// construction results may violate this and nothing here assumes it.
class Pga {
 public:
  explicit Pga(std::size_t state_count);

  std::size_t state_count() const { return initial_.size(); }
  StateId add_state();

  void set_initial(StateId q, Rational w);
  void set_final(StateId q, Rational w);
  const Rational& initial_weight(StateId q) const { return initial_.at(q); }
  const Rational& final_weight(StateId q) const { return final_.at(q); }

  /// Adds (or merges) a transition. Parallel edges with equal
  /// (from, to, var) merge by summing weights; zero weights are dropped.
  void add_transition(StateId from, StateId to, const Label& label);
  void add_transition(StateId from, StateId to, Rational weight);
  void add_transition(StateId from, StateId to, Rational weight, VarId var);

  const std::vector<Transition>& transitions() const { return transitions_; }

  void declare_variable(VarId v);
  /// Declared variables plus every variable occurring on a transition.
  const std::set<VarId>& variables() const { return vars_; }
  bool variable_occurs(VarId v) const;

 private:
  std::vector<Rational> initial_;
  std::vector<Rational> final_;
  std::vector<Transition> transitions_;
  std::map<std::tuple<StateId, StateId, std::optional<VarId>>, std::size_t>
      edge_index_;
  std::set<VarId> vars_;
};

/// Point mass at var = n: a chain of n+1 states; PGF X^n.
Pga dirac_pga(VarId var, std::uint64_t n);

/// PGF (1-p) + p·X. Rejects p outside [0, 1].
Pga bernoulli_pga(VarId var, const Rational& p);

/// Single state with a p·X self-loop and final weight 1-p;
/// PGF sum_i (1-p)·p^i·X^i. Rejects p outside [0, 1).
Pga geometric_pga(VarId var, const Rational& p);

/// Disjoint union with initial weights scaled: wa·[a] + wb·[b].
Pga weighted_union(const Pga& a, const Pga& b, const Rational& wa,
                   const Rational& wb);

/// Sequential composition via scalar bridge transitions from every final
/// state of `a` to every initial state of `b`: [a]·[b].
Pga concatenate(const Pga& a, const Pga& b);

/// Relabels every r·x transition to the scalar r; sets x to 1 in the PGF.
Pga substitute_to_one(const Pga& a, VarId x);

/// Splits every r·src edge into r·src followed by 1·dst through a fresh
/// state, substituting src by src·dst in the PGF. Rejects inputs where dst
/// already occurs on a transition.
Pga duplicate_var(const Pga& a, VarId src, VarId dst);

/// Product with one saturating counter per guard variable; keeps exactly
/// the monomials whose variable degrees satisfy g.
Pga guard_filter(const Pga& a, const Guard& g);

/// Multiplies all initial weights by c >= 0: c·[a].
Pga scale_initial(const Pga& a, const Rational& c);

/// Removes states that are unreachable from the initial weights or cannot
/// reach a final weight. Semantics-preserving.
Pga trim(const Pga& a);

/// Quotient by the coarsest forward weighted bisimulation (equal final
/// weight; equal summed weight per (tag, target class)). Semantics-preserving
/// and never increases the state count.
Pga bisim_minimize(const Pga& a);

}  // namespace pga
