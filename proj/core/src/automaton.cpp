#include "pga/automaton.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pga {

Label scalar_label(Rational weight) { return Label{std::move(weight), std::nullopt}; }

Label var_label(Rational weight, VarId var) { return Label{std::move(weight), var}; }

Pga::Pga(std::size_t state_count) : initial_(state_count), final_(state_count) {
  if (state_count == 0) throw std::invalid_argument("automaton needs at least one state");
}

StateId Pga::add_state() {
  initial_.emplace_back();
  final_.emplace_back();
  return static_cast<StateId>(initial_.size() - 1);
}

void Pga::set_initial(StateId q, Rational w) {
  if (w.is_negative()) throw std::invalid_argument("negative initial weight");
  initial_.at(q) = std::move(w);
}

void Pga::set_final(StateId q, Rational w) {
  if (w.is_negative()) throw std::invalid_argument("negative final weight");
  final_.at(q) = std::move(w);
}

void Pga::add_transition(StateId from, StateId to, const Label& label) {
  if (from >= state_count() || to >= state_count())
    throw std::out_of_range("transition endpoint outside state set");
  if (label.weight.is_negative())
    throw std::invalid_argument("negative transition weight");
  if (label.var) vars_.insert(*label.var);
  if (label.weight.is_zero()) return;

  auto key = std::make_tuple(from, to, label.var);
  auto it = edge_index_.find(key);
  if (it != edge_index_.end()) {
    transitions_[it->second].label.weight += label.weight;
    return;
  }
  edge_index_.emplace(std::move(key), transitions_.size());
  transitions_.push_back(Transition{from, to, label});
}

void Pga::add_transition(StateId from, StateId to, Rational weight) {
  add_transition(from, to, scalar_label(std::move(weight)));
}

void Pga::add_transition(StateId from, StateId to, Rational weight, VarId var) {
  add_transition(from, to, var_label(std::move(weight), var));
}

void Pga::declare_variable(VarId v) { vars_.insert(v); }

bool Pga::variable_occurs(VarId v) const {
  return std::any_of(transitions_.begin(), transitions_.end(),
                     [&](const Transition& t) { return t.label.var == v; });
}

Pga dirac_pga(VarId var, std::uint64_t n) {
  Pga a(n + 1);
  a.declare_variable(var);
  a.set_initial(0, 1);
  a.set_final(static_cast<StateId>(n), 1);
  for (std::uint64_t i = 0; i < n; ++i)
    a.add_transition(static_cast<StateId>(i), static_cast<StateId>(i + 1), 1, var);
  return a;
}

Pga bernoulli_pga(VarId var, const Rational& p) {
  if (p.is_negative() || p > Rational(1))
    throw std::invalid_argument("bernoulli parameter outside [0, 1]: " + p.to_string());
  return weighted_union(dirac_pga(var, 0), dirac_pga(var, 1), Rational(1) - p, p);
}

Pga geometric_pga(VarId var, const Rational& p) {
  if (p.is_negative() || p >= Rational(1))
    throw std::invalid_argument("geometric parameter outside [0, 1): " + p.to_string());
  Pga a(1);
  a.declare_variable(var);
  a.set_initial(0, 1);
  a.set_final(0, Rational(1) - p);
  a.add_transition(0, 0, p, var);
  return a;
}

namespace {

// Copies b's transitions into out with state indices shifted by offset.
void copy_shifted(const Pga& src, Pga& out, StateId offset) {
  for (const Transition& t : src.transitions())
    out.add_transition(t.from + offset, t.to + offset, t.label);
}

void copy_declared_vars(const Pga& src, Pga& out) {
  for (VarId v : src.variables()) out.declare_variable(v);
}

}  // namespace

Pga weighted_union(const Pga& a, const Pga& b, const Rational& wa,
                   const Rational& wb) {
  if (wa.is_negative() || wb.is_negative())
    throw std::invalid_argument("negative union weight");
  const auto na = static_cast<StateId>(a.state_count());
  Pga out(a.state_count() + b.state_count());
  copy_declared_vars(a, out);
  copy_declared_vars(b, out);
  for (StateId q = 0; q < na; ++q) {
    out.set_initial(q, wa * a.initial_weight(q));
    out.set_final(q, a.final_weight(q));
  }
  for (StateId q = 0; q < b.state_count(); ++q) {
    out.set_initial(na + q, wb * b.initial_weight(q));
    out.set_final(na + q, b.final_weight(q));
  }
  copy_shifted(a, out, 0);
  copy_shifted(b, out, na);
  return out;
}

Pga concatenate(const Pga& a, const Pga& b) {
  const auto na = static_cast<StateId>(a.state_count());
  Pga out(a.state_count() + b.state_count());
  copy_declared_vars(a, out);
  copy_declared_vars(b, out);
  for (StateId q = 0; q < na; ++q) out.set_initial(q, a.initial_weight(q));
  for (StateId q = 0; q < b.state_count(); ++q)
    out.set_final(na + q, b.final_weight(q));
  copy_shifted(a, out, 0);
  copy_shifted(b, out, na);
  // Bridge every final state of a to every initial state of b with the
  // product weight; multiplies the two power series.
  for (StateId qa = 0; qa < na; ++qa) {
    const Rational& f = a.final_weight(qa);
    if (f.is_zero()) continue;
    for (StateId qb = 0; qb < b.state_count(); ++qb) {
      const Rational& i = b.initial_weight(qb);
      if (i.is_zero()) continue;
      out.add_transition(qa, na + qb, f * i);
    }
  }
  return out;
}

Pga substitute_to_one(const Pga& a, VarId x) {
  Pga out(a.state_count());
  copy_declared_vars(a, out);
  for (StateId q = 0; q < a.state_count(); ++q) {
    out.set_initial(q, a.initial_weight(q));
    out.set_final(q, a.final_weight(q));
  }
  for (const Transition& t : a.transitions()) {
    if (t.label.var == x)
      out.add_transition(t.from, t.to, t.label.weight);
    else
      out.add_transition(t.from, t.to, t.label);
  }
  return out;
}

Pga duplicate_var(const Pga& a, VarId src, VarId dst) {
  if (a.variable_occurs(dst))
    throw std::invalid_argument("duplicate_var: '" + dst.name() +
                                "' already occurs in the automaton");
  Pga out(a.state_count());
  copy_declared_vars(a, out);
  out.declare_variable(dst);
  for (StateId q = 0; q < a.state_count(); ++q) {
    out.set_initial(q, a.initial_weight(q));
    out.set_final(q, a.final_weight(q));
  }
  for (const Transition& t : a.transitions()) {
    if (t.label.var == src) {
      // q -r·src-> q' becomes q -r·src-> m -1·dst-> q'. Labels stay in the
      // r / r·X fragment; the series semiring is commutative so the order of
      // the two tags is irrelevant.
      StateId mid = out.add_state();
      out.add_transition(t.from, mid, t.label);
      out.add_transition(mid, t.to, 1, dst);
    } else {
      out.add_transition(t.from, t.to, t.label);
    }
  }
  return out;
}

Pga guard_filter(const Pga& a, const Guard& g) {
  const std::map<VarId, std::uint64_t> bounds = g.atom_bounds();

  if (bounds.empty()) {
    // No atoms: the guard is a constant.
    bool keep = g.evaluate([](VarId) { return std::uint64_t{0}; });
    Pga out(a.state_count());
    copy_declared_vars(a, out);
    for (StateId q = 0; q < a.state_count(); ++q) {
      out.set_initial(q, a.initial_weight(q));
      if (keep) out.set_final(q, a.final_weight(q));
    }
    for (const Transition& t : a.transitions()) out.add_transition(t.from, t.to, t.label);
    return out;
  }

  // One saturating counter per guard variable; counter for bound B ranges
  // over 0..B+1. All atom constants for that variable are <= B, so reading a
  // saturated counter as the literal value B+1 evaluates every atom as the
  // true degree (> B) would.
  struct Counter {
    VarId var;
    std::uint64_t dim;  // bound + 2
  };
  std::vector<Counter> counters;
  counters.reserve(bounds.size());
  std::size_t combo_count = 1;
  for (const auto& [var, bound] : bounds) {
    counters.push_back(Counter{var, bound + 2});
    combo_count *= bound + 2;
  }

  const std::size_t n = a.state_count();
  Pga out(n * combo_count);
  copy_declared_vars(a, out);
  for (const auto& [var, bound] : bounds) out.declare_variable(var);

  auto flat = [&](StateId q, const std::vector<std::uint64_t>& c) {
    std::size_t idx = q;
    for (std::size_t k = 0; k < counters.size(); ++k) idx = idx * counters[k].dim + c[k];
    return static_cast<StateId>(idx);
  };

  std::vector<std::uint64_t> combo(counters.size(), 0);
  auto next_combo = [&]() {
    for (std::size_t k = counters.size(); k-- > 0;) {
      if (++combo[k] < counters[k].dim) return true;
      combo[k] = 0;
    }
    return false;
  };

  do {
    const bool at_zero =
        std::all_of(combo.begin(), combo.end(), [](std::uint64_t c) { return c == 0; });
    const bool satisfied = g.evaluate([&](VarId v) -> std::uint64_t {
      for (std::size_t k = 0; k < counters.size(); ++k)
        if (counters[k].var == v) return combo[k];
      return 0;
    });
    for (StateId q = 0; q < n; ++q) {
      StateId pq = flat(q, combo);
      if (at_zero) out.set_initial(pq, a.initial_weight(q));
      if (satisfied) out.set_final(pq, a.final_weight(q));
    }
    for (const Transition& t : a.transitions()) {
      std::vector<std::uint64_t> target = combo;
      if (t.label.var) {
        for (std::size_t k = 0; k < counters.size(); ++k) {
          if (counters[k].var == *t.label.var) {
            if (target[k] + 1 < counters[k].dim) ++target[k];  // else saturate
            break;
          }
        }
      }
      out.add_transition(flat(t.from, combo), flat(t.to, target), t.label);
    }
  } while (next_combo());

  return out;
}

Pga scale_initial(const Pga& a, const Rational& c) {
  if (c.is_negative()) throw std::invalid_argument("negative initial scale");
  Pga out(a.state_count());
  copy_declared_vars(a, out);
  for (StateId q = 0; q < a.state_count(); ++q) {
    out.set_initial(q, c * a.initial_weight(q));
    out.set_final(q, a.final_weight(q));
  }
  for (const Transition& t : a.transitions()) out.add_transition(t.from, t.to, t.label);
  return out;
}

namespace {

std::vector<bool> reachable(std::size_t n, const std::vector<Transition>& edges,
                            const std::vector<bool>& seeds, bool forward) {
  std::vector<std::vector<StateId>> adj(n);
  for (const Transition& t : edges) {
    if (forward)
      adj[t.from].push_back(t.to);
    else
      adj[t.to].push_back(t.from);
  }
  std::vector<bool> seen(n, false);
  std::vector<StateId> stack;
  for (StateId q = 0; q < n; ++q)
    if (seeds[q]) {
      seen[q] = true;
      stack.push_back(q);
    }
  while (!stack.empty()) {
    StateId q = stack.back();
    stack.pop_back();
    for (StateId r : adj[q])
      if (!seen[r]) {
        seen[r] = true;
        stack.push_back(r);
      }
  }
  return seen;
}

}  // namespace

Pga trim(const Pga& a) {
  const std::size_t n = a.state_count();
  std::vector<bool> has_initial(n), has_final(n);
  for (StateId q = 0; q < n; ++q) {
    has_initial[q] = !a.initial_weight(q).is_zero();
    has_final[q] = !a.final_weight(q).is_zero();
  }
  std::vector<bool> fwd = reachable(n, a.transitions(), has_initial, true);
  std::vector<bool> bwd = reachable(n, a.transitions(), has_final, false);

  std::vector<StateId> remap(n, 0);
  std::size_t kept = 0;
  for (StateId q = 0; q < n; ++q)
    if (fwd[q] && bwd[q]) remap[q] = static_cast<StateId>(kept++);

  if (kept == 0) {
    // Nothing carries weight; the zero automaton still needs one state.
    Pga out(1);
    copy_declared_vars(a, out);
    return out;
  }

  Pga out(kept);
  copy_declared_vars(a, out);
  for (StateId q = 0; q < n; ++q) {
    if (!(fwd[q] && bwd[q])) continue;
    out.set_initial(remap[q], a.initial_weight(q));
    out.set_final(remap[q], a.final_weight(q));
  }
  for (const Transition& t : a.transitions())
    if (fwd[t.from] && bwd[t.from] && fwd[t.to] && bwd[t.to])
      out.add_transition(remap[t.from], remap[t.to], t.label);
  return out;
}

Pga bisim_minimize(const Pga& a) {
  const std::size_t n = a.state_count();

  // Partition refinement. Start from final-weight classes, split by the
  // summed outgoing weight per (label tag, target class) until stable.
  std::vector<std::size_t> cls(n);
  {
    std::map<Rational, std::size_t> by_final;
    for (StateId q = 0; q < n; ++q) {
      auto [it, inserted] = by_final.emplace(a.final_weight(q), by_final.size());
      cls[q] = it->second;
    }
  }

  using Signature =
      std::map<std::pair<std::optional<VarId>, std::size_t>, Rational>;
  for (;;) {
    std::vector<Signature> sig(n);
    for (const Transition& t : a.transitions()) {
      auto key = std::make_pair(t.label.var, cls[t.to]);
      auto [it, inserted] = sig[t.from].emplace(key, t.label.weight);
      if (!inserted) it->second += t.label.weight;
    }
    std::map<std::pair<std::size_t, Signature>, std::size_t> next_ids;
    std::vector<std::size_t> next(n);
    for (StateId q = 0; q < n; ++q) {
      auto key = std::make_pair(cls[q], sig[q]);
      auto [it, inserted] = next_ids.emplace(std::move(key), next_ids.size());
      next[q] = it->second;
    }
    if (next_ids.size() == static_cast<std::size_t>(
                               1 + *std::max_element(cls.begin(), cls.end())))
      break;
    cls = std::move(next);
  }

  // Renumber classes by smallest member for a stable output order.
  std::size_t class_count = 1 + *std::max_element(cls.begin(), cls.end());
  std::vector<StateId> representative(class_count, 0);
  std::vector<bool> seen(class_count, false);
  std::vector<std::size_t> order;
  for (StateId q = 0; q < n; ++q) {
    if (!seen[cls[q]]) {
      seen[cls[q]] = true;
      representative[cls[q]] = q;
      order.push_back(cls[q]);
    }
  }
  std::vector<std::size_t> renumber(class_count);
  for (std::size_t i = 0; i < order.size(); ++i) renumber[order[i]] = i;

  Pga out(class_count);
  copy_declared_vars(a, out);
  for (StateId q = 0; q < n; ++q) {
    std::size_t c = renumber[cls[q]];
    out.set_initial(static_cast<StateId>(c),
                    out.initial_weight(static_cast<StateId>(c)) + a.initial_weight(q));
  }
  for (std::size_t c = 0; c < class_count; ++c) {
    StateId rep = representative[order[c]];
    out.set_final(static_cast<StateId>(c), a.final_weight(rep));
  }
  // All members of a class share per-(tag, class) sums; read them off the
  // representative.
  for (const Transition& t : a.transitions()) {
    if (t.from != representative[cls[t.from]]) continue;
    out.add_transition(static_cast<StateId>(renumber[cls[t.from]]),
                       static_cast<StateId>(renumber[cls[t.to]]), t.label);
  }
  return out;
}

}  // namespace pga
