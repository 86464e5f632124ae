#include "pga/semantics.hpp"

namespace pga {

Pga initial_pga(const std::set<VarId>& vars) {
  Pga a(1);
  a.set_initial(0, 1);
  a.set_final(0, 1);
  for (VarId v : vars) a.declare_variable(v);
  return a;
}

namespace {

Pga apply_config(Pga a, const TransformerConfig& cfg) {
  if (cfg.auto_trim) a = trim(a);
  if (cfg.minimize) a = bisim_minimize(a);
  return a;
}

Pga assign(VarId target, const Rhs& rhs, const Pga& a) {
  return std::visit(
      [&](const auto& node) -> Pga {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, RhsConst>) {
          // X := n resets X and multiplies the series by X^n.
          return concatenate(substitute_to_one(a, target), dirac_pga(target, node.value));
        } else if constexpr (std::is_same_v<T, RhsVar>) {
          if (node.var == target) return a;  // X := X
          return duplicate_var(substitute_to_one(a, target), node.var, target);
        } else if constexpr (std::is_same_v<T, RhsVarPlus>) {
          if (node.var == target)  // X := X + n: increment, no reset
            return concatenate(a, dirac_pga(target, node.increment));
          return concatenate(duplicate_var(substitute_to_one(a, target), node.var, target),
                             dirac_pga(target, node.increment));
        } else if constexpr (std::is_same_v<T, RhsBernoulli>) {
          return concatenate(substitute_to_one(a, target), bernoulli_pga(target, node.p));
        } else {
          return concatenate(substitute_to_one(a, target), geometric_pga(target, node.p));
        }
      },
      rhs);
}

}  // namespace

Pga transform(const Stmt& s, const Pga& a, const TransformerConfig& cfg) {
  Pga result = std::visit(
      [&](const auto& node) -> Pga {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, StmtSkip>) {
          return a;
        } else if constexpr (std::is_same_v<T, StmtAssign>) {
          return assign(node.target, node.value, a);
        } else if constexpr (std::is_same_v<T, StmtIfElse>) {
          // Both branch weights are already baked in by the guard products.
          Pga then_in = guard_filter(a, node.guard);
          Pga else_in = guard_filter(a, Guard::negation(node.guard));
          Pga then_out = transform_program(node.then_branch, std::move(then_in), cfg);
          Pga else_out = transform_program(node.else_branch, std::move(else_in), cfg);
          return weighted_union(then_out, else_out, 1, 1);
        } else {
          return guard_filter(a, node.guard);
        }
      },
      s.node);
  return apply_config(std::move(result), cfg);
}

Pga transform_program(const Program& p, Pga a, const TransformerConfig& cfg) {
  for (const Stmt& s : p.stmts) a = transform(s, a, cfg);
  return a;
}

Pga infer(const Program& p, const TransformerConfig& cfg) {
  return transform_program(p, initial_pga(free_vars(p)), cfg);
}

Pga posterior(const Program& p, const TransformerConfig& cfg) {
  return normalize(infer(p, cfg));
}

}  // namespace pga
