#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pga/automaton.hpp"
#include "pga/rational.hpp"
#include "pga/var.hpp"

namespace pga {

/// Finitely supported map from variables to naturals. Entries are stored
/// explicitly, including zeros: whether an absent variable means "degree 0"
/// or "marginalized" is up to the operation consuming the valuation.
class Valuation {
 public:
  Valuation() = default;
  Valuation(std::initializer_list<std::pair<const VarId, std::uint64_t>> init)
      : entries_(init) {}

  void set(VarId v, std::uint64_t n) { entries_[v] = n; }
  std::uint64_t value_of(VarId v) const;
  bool contains(VarId v) const { return entries_.count(v) != 0; }
  const std::map<VarId, std::uint64_t>& entries() const { return entries_; }
  std::uint64_t total_degree() const;

  /// "X=1, Y=0"; empty valuation prints as "()".
  std::string to_string() const;

  bool operator==(const Valuation& o) const { return entries_ == o.entries_; }
  bool operator!=(const Valuation& o) const { return !(*this == o); }
  bool operator<(const Valuation& o) const { return entries_ < o.entries_; }

 private:
  std::map<VarId, std::uint64_t> entries_;
};

/// Finite slice of a distribution: exact probabilities per valuation plus an
/// exact upper bound on the mass outside the table.
struct DistTable {
  std::map<Valuation, Rational> entries;
  Rational residual;
};

/// Sum of all series coefficients: every label is read as a scalar and
/// I·(I-M)^{-1}·F is returned. Throws DivergentAutomatonError if the scalar
/// cycles carry mass >= 1.
Rational total_mass(const Pga& a);

/// Exact coefficient of the monomial with degrees v. Variables of `a` not
/// appearing in v are marginalized (substituted to 1); variables in v must
/// hit exactly their stated degree, including degree 0.
Rational coefficient(const Pga& a, const Valuation& v);

/// Tabulates the coefficient of every valuation of `vars` with each degree
/// <= degree_bound, after marginalizing all other variables.
/// residual = total_mass(a) - sum of the entries, exactly.
DistTable marginal_table(const Pga& a, const std::vector<VarId>& vars,
                         std::uint64_t degree_bound);

/// Same with a per-variable degree bound.
DistTable marginal_table(const Pga& a,
                         const std::vector<std::pair<VarId, std::uint64_t>>& bounds);

/// All joint coefficients over `vars` with total degree <= total_degree_bound.
std::map<Valuation, Rational> joint_coefficients(const Pga& a,
                                                 const std::vector<VarId>& vars,
                                                 std::uint64_t total_degree_bound);

/// E[x] over the subdistribution: sum_v v(x)·coefficient(a, v). Not rescaled
/// by the total mass; normalize first for conditional expectations.
Rational expectation(const Pga& a, VarId x);

/// Rescales the initial weights by 1/total_mass(a) so the result has total
/// mass exactly 1. Throws ZeroMassError when the mass is zero.
Pga normalize(const Pga& a);

}  // namespace pga
