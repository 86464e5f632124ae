#include "pga/analysis.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "pga/errors.hpp"
#include "pga/linalg.hpp"

namespace pga {

std::uint64_t Valuation::value_of(VarId v) const {
  auto it = entries_.find(v);
  return it == entries_.end() ? 0 : it->second;
}

std::uint64_t Valuation::total_degree() const {
  std::uint64_t sum = 0;
  for (const auto& [var, n] : entries_) sum += n;
  return sum;
}

std::string Valuation::to_string() const {
  if (entries_.empty()) return "()";
  std::ostringstream os;
  bool first = true;
  for (const auto& [var, n] : entries_) {
    if (!first) os << ", ";
    first = false;
    os << var.name() << "=" << n;
  }
  return os.str();
}

namespace {

struct SparseEdge {
  StateId from;
  StateId to;
  Rational weight;
};

// Action of (I - N)^{-1} for a sparse nonnegative N. States are grouped into
// strongly connected components; each component block is inverted densely
// with the M-matrix convergence check, and values propagate between
// components in topological order. Equivalent to multiplying by the dense
// star matrix, but near-linear on the DAG-like automata the pipeline builds.
class StarOperator {
 public:
  StarOperator(std::size_t n, const std::vector<SparseEdge>& edges) : n_(n), out_(n), in_(n) {
    for (const SparseEdge& e : edges) {
      if (e.weight.is_zero()) continue;
      out_[e.from].emplace_back(e.to, e.weight);
      in_[e.to].emplace_back(e.from, e.weight);
    }
    compute_sccs();
    invert_blocks();
  }

  // row · (I - N)^{-1}
  RationalVector apply_row(const RationalVector& row) const {
    RationalVector x = row;
    for (const auto& scc : sccs_) {
      solve_block_row(scc, x);
      for (StateId s : scc) {
        if (x[s].is_zero()) continue;
        for (const auto& [t, w] : out_[s])
          if (scc_of_[t] != scc_of_[s]) x[t] += x[s] * w;
      }
    }
    return x;
  }

  // (I - N)^{-1} · col
  RationalVector apply_col(const RationalVector& col) const {
    RationalVector y = col;
    for (auto it = sccs_.rbegin(); it != sccs_.rend(); ++it) {
      solve_block_col(*it, y);
      for (StateId s : *it) {
        if (y[s].is_zero()) continue;
        for (const auto& [p, w] : in_[s])
          if (scc_of_[p] != scc_of_[s]) y[p] += w * y[s];
      }
    }
    return y;
  }

 private:
  void compute_sccs() {
    // Iterative Tarjan; emits components sinks-first, reversed at the end so
    // sccs_ is in topological order (sources first).
    constexpr std::uint32_t kUnvisited = UINT32_MAX;
    std::vector<std::uint32_t> index(n_, kUnvisited), low(n_, 0);
    std::vector<bool> on_stack(n_, false);
    std::vector<StateId> stack;
    scc_of_.assign(n_, 0);
    std::uint32_t counter = 0;

    struct Frame {
      StateId v;
      std::size_t edge;
    };
    for (StateId root = 0; root < n_; ++root) {
      if (index[root] != kUnvisited) continue;
      std::vector<Frame> call;
      call.push_back({root, 0});
      index[root] = low[root] = counter++;
      stack.push_back(root);
      on_stack[root] = true;
      while (!call.empty()) {
        Frame& f = call.back();
        if (f.edge < out_[f.v].size()) {
          StateId w = out_[f.v][f.edge++].first;
          if (index[w] == kUnvisited) {
            index[w] = low[w] = counter++;
            stack.push_back(w);
            on_stack[w] = true;
            call.push_back({w, 0});
          } else if (on_stack[w]) {
            low[f.v] = std::min(low[f.v], index[w]);
          }
        } else {
          if (low[f.v] == index[f.v]) {
            std::vector<StateId> component;
            StateId w;
            do {
              w = stack.back();
              stack.pop_back();
              on_stack[w] = false;
              scc_of_[w] = static_cast<std::uint32_t>(sccs_.size());
              component.push_back(w);
            } while (w != f.v);
            sccs_.push_back(std::move(component));
          }
          StateId v = f.v;
          call.pop_back();
          if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
        }
      }
    }
    std::reverse(sccs_.begin(), sccs_.end());
    for (std::uint32_t i = 0; i < sccs_.size(); ++i)
      for (StateId s : sccs_[i]) scc_of_[s] = i;
  }

  void invert_blocks() {
    block_inv_.reserve(sccs_.size());
    for (const auto& scc : sccs_) {
      if (scc.size() == 1) {
        StateId s = scc[0];
        Rational self;
        for (const auto& [t, w] : out_[s])
          if (t == s) self += w;
        if (self >= Rational(1))
          throw DivergentAutomatonError("scalar cycles carry mass >= 1");
        RationalMatrix inv(1, 1);
        inv(0, 0) = self.is_zero() ? Rational(1) : Rational(1) / (Rational(1) - self);
        block_inv_.push_back(std::move(inv));
        continue;
      }
      RationalMatrix block(scc.size(), scc.size());
      std::map<StateId, std::size_t> pos;
      for (std::size_t i = 0; i < scc.size(); ++i) pos[scc[i]] = i;
      for (std::size_t i = 0; i < scc.size(); ++i)
        for (const auto& [t, w] : out_[scc[i]]) {
          auto it = pos.find(t);
          if (it != pos.end()) block(i, it->second) += w;
        }
      block_inv_.push_back(star_matrix(block));  // checked dense inverse
    }
  }

  void solve_block_row(const std::vector<StateId>& scc, RationalVector& x) const {
    const RationalMatrix& inv = block_inv_[scc_of_[scc[0]]];
    if (scc.size() == 1) {
      if (!x[scc[0]].is_zero()) x[scc[0]] *= inv(0, 0);
      return;
    }
    RationalVector local(scc.size());
    for (std::size_t i = 0; i < scc.size(); ++i) local[i] = x[scc[i]];
    RationalVector solved = local * inv;
    for (std::size_t i = 0; i < scc.size(); ++i) x[scc[i]] = solved[i];
  }

  void solve_block_col(const std::vector<StateId>& scc, RationalVector& y) const {
    const RationalMatrix& inv = block_inv_[scc_of_[scc[0]]];
    if (scc.size() == 1) {
      if (!y[scc[0]].is_zero()) y[scc[0]] *= inv(0, 0);
      return;
    }
    RationalVector local(scc.size());
    for (std::size_t i = 0; i < scc.size(); ++i) local[i] = y[scc[i]];
    RationalVector solved = inv * local;
    for (std::size_t i = 0; i < scc.size(); ++i) y[scc[i]] = solved[i];
  }

  std::size_t n_;
  std::vector<std::vector<std::pair<StateId, Rational>>> out_;
  std::vector<std::vector<std::pair<StateId, Rational>>> in_;
  std::vector<std::vector<StateId>> sccs_;  // topological order
  std::vector<std::uint32_t> scc_of_;
  std::vector<RationalMatrix> block_inv_;
};

RationalVector initial_row(const Pga& a) {
  RationalVector v(a.state_count());
  for (StateId q = 0; q < a.state_count(); ++q) v[q] = a.initial_weight(q);
  return v;
}

RationalVector final_col(const Pga& a) {
  RationalVector v(a.state_count());
  for (StateId q = 0; q < a.state_count(); ++q) v[q] = a.final_weight(q);
  return v;
}

// row · B for a sparse coefficient matrix given as an edge list.
RationalVector sparse_row_product(const RationalVector& row,
                                  const std::vector<SparseEdge>& edges) {
  RationalVector out(row.size());
  for (const SparseEdge& e : edges) {
    if (row[e.from].is_zero()) continue;
    out[e.to] += row[e.from] * e.weight;
  }
  return out;
}

struct QuerySetup {
  std::unique_ptr<StarOperator> star;        // over N = scalars + marginalized
  std::vector<std::vector<SparseEdge>> b;    // per queried variable
  RationalVector i_row;
  RationalVector f_col;
};

// Splits the transition matrix into the scalar part N (true scalars plus all
// variables not queried, i.e. marginalized by reading them as 1) and one
// coefficient matrix per queried variable.
QuerySetup build_setup(const Pga& a, const std::vector<VarId>& queried) {
  std::vector<SparseEdge> scalar;
  std::vector<std::vector<SparseEdge>> b(queried.size());
  for (const Transition& t : a.transitions()) {
    std::ptrdiff_t idx = -1;
    if (t.label.var) {
      auto it = std::find(queried.begin(), queried.end(), *t.label.var);
      if (it != queried.end()) idx = it - queried.begin();
    }
    if (idx >= 0)
      b[idx].push_back(SparseEdge{t.from, t.to, t.label.weight});
    else
      scalar.push_back(SparseEdge{t.from, t.to, t.label.weight});
  }
  QuerySetup setup;
  setup.star = std::make_unique<StarOperator>(a.state_count(), scalar);
  setup.b = std::move(b);
  setup.i_row = initial_row(a);
  setup.f_col = final_col(a);
  return setup;
}

// Layered dynamic program over counter vectors c <= bounds:
//   row(0) = I·S,  row(c) = (sum over x with c_x >= 1 of row(c - e_x)·B_x)·S,
// emitting row(c)·F per vector in increasing total-degree order. Rows are
// kept for two adjacent layers only.
void run_dp(const QuerySetup& setup, const std::vector<std::uint64_t>& bounds,
            std::optional<std::uint64_t> total_cap,
            const std::function<void(const std::vector<std::uint64_t>&, Rational)>& emit) {
  const std::size_t dims = bounds.size();
  std::uint64_t max_level = 0;
  for (std::uint64_t b : bounds) max_level += b;
  if (total_cap && *total_cap < max_level) max_level = *total_cap;

  std::map<std::vector<std::uint64_t>, RationalVector> prev;
  {
    std::vector<std::uint64_t> zero(dims, 0);
    RationalVector row = setup.star->apply_row(setup.i_row);
    emit(zero, dot(row, setup.f_col));
    prev.emplace(std::move(zero), std::move(row));
  }

  for (std::uint64_t level = 1; level <= max_level; ++level) {
    std::map<std::vector<std::uint64_t>, RationalVector> cur;
    for (const auto& [c, row] : prev) {
      for (std::size_t d = 0; d < dims; ++d) {
        if (c[d] >= bounds[d]) continue;
        std::vector<std::uint64_t> target = c;
        ++target[d];
        cur.emplace(std::move(target), RationalVector());
      }
    }
    for (auto& [c, row] : cur) {
      RationalVector acc(setup.i_row.size());
      for (std::size_t d = 0; d < dims; ++d) {
        if (c[d] == 0) continue;
        std::vector<std::uint64_t> pred = c;
        --pred[d];
        RationalVector part = sparse_row_product(prev.at(pred), setup.b[d]);
        for (std::size_t q = 0; q < acc.size(); ++q) acc[q] += part[q];
      }
      row = setup.star->apply_row(acc);
      emit(c, dot(row, setup.f_col));
    }
    prev = std::move(cur);
  }
}

Valuation make_valuation(const std::vector<VarId>& vars,
                         const std::vector<std::uint64_t>& counts) {
  Valuation v;
  for (std::size_t i = 0; i < vars.size(); ++i) v.set(vars[i], counts[i]);
  return v;
}

void check_distinct(const std::vector<VarId>& vars) {
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j])
        throw std::invalid_argument("duplicate variable in query: " + vars[i].name());
}

}  // namespace

Rational total_mass(const Pga& a) {
  QuerySetup setup = build_setup(a, {});
  return dot(setup.star->apply_row(setup.i_row), setup.f_col);
}

Rational coefficient(const Pga& a, const Valuation& v) {
  std::vector<VarId> queried;
  std::vector<std::uint64_t> bounds;
  for (const auto& [var, degree] : v.entries()) {
    queried.push_back(var);
    bounds.push_back(degree);
  }
  QuerySetup setup = build_setup(a, queried);
  Rational result;
  run_dp(setup, bounds, std::nullopt,
         [&](const std::vector<std::uint64_t>& c, Rational value) {
           if (c == bounds) result = std::move(value);
         });
  return result;
}

DistTable marginal_table(const Pga& a, const std::vector<VarId>& vars,
                         std::uint64_t degree_bound) {
  std::vector<std::pair<VarId, std::uint64_t>> bounds;
  bounds.reserve(vars.size());
  for (VarId v : vars) bounds.emplace_back(v, degree_bound);
  return marginal_table(a, bounds);
}

DistTable marginal_table(const Pga& a,
                         const std::vector<std::pair<VarId, std::uint64_t>>& bounds) {
  std::vector<VarId> queried;
  std::vector<std::uint64_t> degrees;
  for (const auto& [var, bound] : bounds) {
    queried.push_back(var);
    degrees.push_back(bound);
  }
  check_distinct(queried);

  DistTable table;
  QuerySetup setup = build_setup(a, queried);
  Rational covered;
  run_dp(setup, degrees, std::nullopt,
         [&](const std::vector<std::uint64_t>& c, Rational value) {
           covered += value;
           table.entries.emplace(make_valuation(queried, c), std::move(value));
         });
  table.residual = total_mass(a) - covered;
  return table;
}

std::map<Valuation, Rational> joint_coefficients(const Pga& a,
                                                 const std::vector<VarId>& vars,
                                                 std::uint64_t total_degree_bound) {
  check_distinct(vars);
  std::vector<std::uint64_t> degrees(vars.size(), total_degree_bound);
  QuerySetup setup = build_setup(a, vars);
  std::map<Valuation, Rational> out;
  run_dp(setup, degrees, total_degree_bound,
         [&](const std::vector<std::uint64_t>& c, Rational value) {
           out.emplace(make_valuation(vars, c), std::move(value));
         });
  return out;
}

Rational expectation(const Pga& a, VarId x) {
  std::vector<SparseEdge> all_scalar;
  std::vector<SparseEdge> bx;
  for (const Transition& t : a.transitions()) {
    all_scalar.push_back(SparseEdge{t.from, t.to, t.label.weight});
    if (t.label.var == x) bx.push_back(SparseEdge{t.from, t.to, t.label.weight});
  }
  StarOperator star(a.state_count(), all_scalar);
  RationalVector u = star.apply_row(initial_row(a));
  RationalVector w = star.apply_col(final_col(a));
  Rational sum;
  for (const SparseEdge& e : bx) {
    if (u[e.from].is_zero() || w[e.to].is_zero()) continue;
    sum += u[e.from] * e.weight * w[e.to];
  }
  return sum;
}

Pga normalize(const Pga& a) {
  Rational mass = total_mass(a);
  if (mass.is_zero())
    throw ZeroMassError("all probability mass was rejected by observations");
  return scale_initial(a, Rational(1) / mass);
}

}  // namespace pga
