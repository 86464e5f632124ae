#include "pga/oracle.hpp"

#include <set>
#include <stdexcept>

namespace pga::oracle {

namespace {

std::size_t count_geometric(const Program& p);

std::size_t count_geometric(const Stmt& s) {
  return std::visit(
      [](const auto& node) -> std::size_t {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, StmtAssign>) {
          return std::holds_alternative<RhsGeometric>(node.value) ? 1 : 0;
        } else if constexpr (std::is_same_v<T, StmtIfElse>) {
          return count_geometric(node.then_branch) + count_geometric(node.else_branch);
        } else {
          return 0;
        }
      },
      s.node);
}

std::size_t count_geometric(const Program& p) {
  std::size_t n = 0;
  for (const Stmt& s : p.stmts) n += count_geometric(s);
  return n;
}

// Continuation frame: statements still to execute from `next` on.
struct Frame {
  const std::vector<Stmt>* stmts;
  std::size_t next;
};

struct Walker {
  Rational site_budget;  // epsilon / number of geometric statements
  std::map<Valuation, Rational> table;
  Rational residual;
  Rational killed;

  void finish(const std::map<VarId, std::uint64_t>& val, const Rational& mass) {
    Valuation key;
    for (const auto& [var, n] : val) key.set(var, n);
    auto [it, inserted] = table.emplace(std::move(key), mass);
    if (!inserted) it->second += mass;
  }

  void walk(std::vector<Frame> cont, std::map<VarId, std::uint64_t> val, Rational mass) {
    while (true) {
      while (!cont.empty() && cont.back().next == cont.back().stmts->size())
        cont.pop_back();
      if (cont.empty()) {
        finish(val, mass);
        return;
      }
      const Stmt& s = (*cont.back().stmts)[cont.back().next++];

      bool done = std::visit(
          [&](const auto& node) -> bool {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, StmtSkip>) {
              return false;
            } else if constexpr (std::is_same_v<T, StmtAssign>) {
              return run_assign(node, cont, val, mass);
            } else if constexpr (std::is_same_v<T, StmtIfElse>) {
              bool taken = node.guard.evaluate(
                  [&](VarId v) -> std::uint64_t {
                    auto it = val.find(v);
                    return it == val.end() ? 0 : it->second;
                  });
              const Program& branch = taken ? node.then_branch : node.else_branch;
              cont.push_back(Frame{&branch.stmts, 0});
              return false;
            } else {  // StmtObserve
              bool ok = node.guard.evaluate(
                  [&](VarId v) -> std::uint64_t {
                    auto it = val.find(v);
                    return it == val.end() ? 0 : it->second;
                  });
              if (!ok) {
                killed += mass;
                return true;
              }
              return false;
            }
          },
          s.node);
      if (done) return;
    }
  }

  // Returns true when the current configuration is fully handled by
  // recursive children (probabilistic splits).
  bool run_assign(const StmtAssign& node, std::vector<Frame>& cont,
                  std::map<VarId, std::uint64_t>& val, Rational& mass) {
    return std::visit(
        [&](const auto& rhs) -> bool {
          using R = std::decay_t<decltype(rhs)>;
          if constexpr (std::is_same_v<R, RhsConst>) {
            val[node.target] = rhs.value;
            return false;
          } else if constexpr (std::is_same_v<R, RhsVar>) {
            val[node.target] = val.count(rhs.var) ? val[rhs.var] : 0;
            return false;
          } else if constexpr (std::is_same_v<R, RhsVarPlus>) {
            val[node.target] = (val.count(rhs.var) ? val[rhs.var] : 0) + rhs.increment;
            return false;
          } else if constexpr (std::is_same_v<R, RhsBernoulli>) {
            Rational p0 = Rational(1) - rhs.p;
            if (!p0.is_zero()) {
              auto child_val = val;
              child_val[node.target] = 0;
              walk(cont, std::move(child_val), mass * p0);
            }
            if (!rhs.p.is_zero()) {
              val[node.target] = 1;
              mass *= rhs.p;
              return false;  // continue in place with the X=1 branch
            }
            return true;
          } else {  // RhsGeometric
            const Rational& q = rhs.p;
            if (q.is_zero()) {
              val[node.target] = 0;
              return false;
            }
            // Children i = 0..k, k minimal with q^{k+1} < budget; the exact
            // tail q^{k+1}·mass goes to the residual.
            std::uint64_t k = 0;
            Rational tail = q;  // q^{k+1}
            while (tail >= site_budget) {
              ++k;
              tail *= q;
            }
            residual += tail * mass;
            Rational success = Rational(1) - q;
            Rational power(1);
            for (std::uint64_t i = 0; i <= k; ++i) {
              auto child_val = val;
              child_val[node.target] = i;
              walk(cont, std::move(child_val), mass * success * power);
              power *= q;
            }
            return true;
          }
        },
        node.value);
  }
};

}  // namespace

EnumerationResult enumerate_full(const Program& p, const Rational& epsilon) {
  if (!epsilon.is_positive()) throw std::invalid_argument("epsilon must be positive");

  Walker walker;
  std::size_t sites = count_geometric(p);
  walker.site_budget = epsilon / Rational(static_cast<long>(sites == 0 ? 1 : sites));

  std::map<VarId, std::uint64_t> val;
  for (VarId v : free_vars(p)) val[v] = 0;

  walker.walk({Frame{&p.stmts, 0}}, std::move(val), Rational(1));

  EnumerationResult result;
  result.table.entries = std::move(walker.table);
  result.table.residual = std::move(walker.residual);
  result.killed_mass = std::move(walker.killed);
  return result;
}

DistTable enumerate(const Program& p, const Rational& epsilon) {
  return enumerate_full(p, epsilon).table;
}

ComparisonReport compare(const DistTable& pga_table, const DistTable& oracle_table,
                         const Rational& tol) {
  if (tol.is_negative()) throw std::invalid_argument("negative tolerance");

  // Align valuations over the union of variables so that explicit zeros and
  // absent entries mean the same key.
  std::set<VarId> vars;
  for (const auto& [v, prob] : pga_table.entries)
    for (const auto& [var, n] : v.entries()) vars.insert(var);
  for (const auto& [v, prob] : oracle_table.entries)
    for (const auto& [var, n] : v.entries()) vars.insert(var);

  auto aligned = [&](const DistTable& t) {
    std::map<Valuation, Rational> out;
    for (const auto& [v, prob] : t.entries) {
      Valuation key;
      for (VarId var : vars) key.set(var, v.value_of(var));
      auto [it, inserted] = out.emplace(std::move(key), prob);
      if (!inserted) it->second += prob;
    }
    return out;
  };

  std::map<Valuation, Rational> lhs = aligned(pga_table);
  std::map<Valuation, Rational> rhs = aligned(oracle_table);

  std::set<Valuation> keys;
  for (const auto& [v, prob] : lhs) keys.insert(v);
  for (const auto& [v, prob] : rhs) keys.insert(v);

  Rational allowed = oracle_table.residual + tol;
  ComparisonReport report;
  for (const Valuation& v : keys) {
    auto l = lhs.find(v);
    auto r = rhs.find(v);
    Rational pga_value = l == lhs.end() ? Rational(0) : l->second;
    Rational oracle_value = r == rhs.end() ? Rational(0) : r->second;
    if ((pga_value - oracle_value).abs() > allowed)
      report.violations.push_back(ComparisonViolation{v, pga_value, oracle_value});
  }
  return report;
}

}  // namespace pga::oracle
