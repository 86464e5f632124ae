#pragma once

// Test-only reference implementations. Coefficients are recomputed by
// explicit path enumeration, independent of the linear-solve pipeline they
// are used to check.

#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pga/analysis.hpp"
#include "pga/automaton.hpp"

namespace testsupport {

// True when some cycle uses only edges that read as scalars for the given
// query (untagged, or tagged with a variable outside `queried`). Path
// enumeration does not terminate on such automata.
inline bool has_unbounded_cycle(const pga::Pga& a, const std::set<pga::VarId>& queried) {
  const std::size_t n = a.state_count();
  std::vector<std::vector<pga::StateId>> adj(n);
  for (const pga::Transition& t : a.transitions())
    if (!t.label.var || queried.count(*t.label.var) == 0) adj[t.from].push_back(t.to);

  enum class Color { White, Grey, Black };
  std::vector<Color> color(n, Color::White);
  std::vector<std::pair<pga::StateId, std::size_t>> stack;
  for (pga::StateId start = 0; start < n; ++start) {
    if (color[start] != Color::White) continue;
    color[start] = Color::Grey;
    stack.push_back({start, 0});
    while (!stack.empty()) {
      auto& [q, next] = stack.back();
      if (next < adj[q].size()) {
        pga::StateId r = adj[q][next++];
        if (color[r] == Color::Grey) return true;
        if (color[r] == Color::White) {
          color[r] = Color::Grey;
          stack.push_back({r, 0});
        }
      } else {
        color[q] = Color::Black;
        stack.pop_back();
      }
    }
  }
  return false;
}

// Joint coefficients over `bounds` by path enumeration: walk every path from
// every initial state, multiplying weights; variables outside the bounds are
// marginalized (their tags read as scalars). Each visited state contributes
// weight-so-far times its final weight to the running counter vector.
inline std::map<pga::Valuation, pga::Rational> path_table(
    const pga::Pga& a,
    const std::vector<std::pair<pga::VarId, std::uint64_t>>& bounds) {
  std::set<pga::VarId> queried;
  for (const auto& [var, bound] : bounds) queried.insert(var);
  if (has_unbounded_cycle(a, queried))
    throw std::logic_error("path enumeration on an automaton with scalar cycles");

  std::map<pga::Valuation, pga::Rational> table;

  struct Walker {
    const pga::Pga& a;
    const std::vector<std::pair<pga::VarId, std::uint64_t>>& bounds;
    std::map<pga::Valuation, pga::Rational>& table;

    void record(const std::vector<std::uint64_t>& counts, const pga::Rational& w,
                pga::StateId q) {
      const pga::Rational& f = a.final_weight(q);
      if (f.is_zero()) return;
      pga::Valuation v;
      for (std::size_t i = 0; i < bounds.size(); ++i) v.set(bounds[i].first, counts[i]);
      auto [it, inserted] = table.emplace(std::move(v), w * f);
      if (!inserted) it->second += w * f;
    }

    void dfs(pga::StateId q, std::vector<std::uint64_t>& counts, const pga::Rational& w) {
      record(counts, w, q);
      for (const pga::Transition& t : a.transitions()) {
        if (t.from != q || t.label.weight.is_zero()) continue;
        std::ptrdiff_t dim = -1;
        if (t.label.var) {
          for (std::size_t i = 0; i < bounds.size(); ++i)
            if (bounds[i].first == *t.label.var) {
              dim = static_cast<std::ptrdiff_t>(i);
              break;
            }
        }
        if (dim >= 0) {
          if (counts[dim] + 1 > bounds[dim].second) continue;  // prune
          ++counts[dim];
          dfs(t.to, counts, w * t.label.weight);
          --counts[dim];
        } else {
          dfs(t.to, counts, w * t.label.weight);
        }
      }
    }
  } walker{a, bounds, table};

  for (pga::StateId q = 0; q < a.state_count(); ++q) {
    if (a.initial_weight(q).is_zero()) continue;
    std::vector<std::uint64_t> counts(bounds.size(), 0);
    walker.dfs(q, counts, a.initial_weight(q));
  }

  // Every valuation in the box appears, including zero-probability ones.
  if (bounds.empty()) {
    table.emplace(pga::Valuation{}, pga::Rational(0));
    return table;
  }
  std::vector<std::uint64_t> combo(bounds.size(), 0);
  for (;;) {
    pga::Valuation v;
    for (std::size_t i = 0; i < bounds.size(); ++i) v.set(bounds[i].first, combo[i]);
    table.emplace(std::move(v), pga::Rational(0));
    std::size_t d = bounds.size();
    for (;;) {
      if (d == 0) return table;
      --d;
      if (++combo[d] <= bounds[d].second) break;
      combo[d] = 0;
    }
  }
}

// Single-monomial coefficient by path enumeration; variables absent from v
// are marginalized.
inline pga::Rational path_coefficient(const pga::Pga& a, const pga::Valuation& v) {
  std::vector<std::pair<pga::VarId, std::uint64_t>> bounds;
  for (const auto& [var, n] : v.entries()) bounds.emplace_back(var, n);
  auto table = path_table(a, bounds);
  auto it = table.find(v);
  return it == table.end() ? pga::Rational(0) : it->second;
}

}  // namespace testsupport
