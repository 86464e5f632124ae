#include "pga/ast.hpp"

#include <sstream>

namespace pga {

namespace {

struct RhsEq {
  bool operator()(const RhsConst& a, const RhsConst& b) const { return a.value == b.value; }
  bool operator()(const RhsVar& a, const RhsVar& b) const { return a.var == b.var; }
  bool operator()(const RhsVarPlus& a, const RhsVarPlus& b) const {
    return a.var == b.var && a.increment == b.increment;
  }
  bool operator()(const RhsBernoulli& a, const RhsBernoulli& b) const { return a.p == b.p; }
  bool operator()(const RhsGeometric& a, const RhsGeometric& b) const { return a.p == b.p; }
  template <class A, class B>
  bool operator()(const A&, const B&) const {
    return false;
  }
};

bool rhs_equal(const Rhs& a, const Rhs& b) { return std::visit(RhsEq{}, a, b); }

struct StmtEq {
  bool operator()(const StmtSkip&, const StmtSkip&) const { return true; }
  bool operator()(const StmtAssign& a, const StmtAssign& b) const {
    return a.target == b.target && rhs_equal(a.value, b.value);
  }
  bool operator()(const StmtIfElse& a, const StmtIfElse& b) const {
    return a.guard == b.guard && a.then_branch == b.then_branch &&
           a.else_branch == b.else_branch;
  }
  bool operator()(const StmtObserve& a, const StmtObserve& b) const {
    return a.guard == b.guard;
  }
  template <class A, class B>
  bool operator()(const A&, const B&) const {
    return false;
  }
};

}  // namespace

bool operator==(const Stmt& a, const Stmt& b) {
  return std::visit(StmtEq{}, a.node, b.node);
}

bool operator==(const Program& a, const Program& b) {
  return a.stmts == b.stmts;
}

namespace {

void collect_vars(const Program& p, std::set<VarId>& out);

void collect_guard_vars(const Guard& g, std::set<VarId>& out) {
  for (const auto& [var, bound] : g.atom_bounds()) out.insert(var);
}

void collect_vars(const Stmt& s, std::set<VarId>& out) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, StmtAssign>) {
          out.insert(node.target);
          std::visit(
              [&](const auto& rhs) {
                using R = std::decay_t<decltype(rhs)>;
                if constexpr (std::is_same_v<R, RhsVar> || std::is_same_v<R, RhsVarPlus>)
                  out.insert(rhs.var);
              },
              node.value);
        } else if constexpr (std::is_same_v<T, StmtIfElse>) {
          collect_guard_vars(node.guard, out);
          collect_vars(node.then_branch, out);
          collect_vars(node.else_branch, out);
        } else if constexpr (std::is_same_v<T, StmtObserve>) {
          collect_guard_vars(node.guard, out);
        }
      },
      s.node);
}

void collect_vars(const Program& p, std::set<VarId>& out) {
  for (const Stmt& s : p.stmts) collect_vars(s, out);
}

void print_program(const Program& p, std::ostringstream& os, int indent);

void print_stmt(const Stmt& s, std::ostringstream& os, int indent) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, StmtSkip>) {
          os << pad << "skip";
        } else if constexpr (std::is_same_v<T, StmtAssign>) {
          os << pad << node.target.name() << " := " << to_source(node.value);
        } else if constexpr (std::is_same_v<T, StmtIfElse>) {
          os << pad << "if (" << node.guard.to_string() << ") {\n";
          print_program(node.then_branch, os, indent + 1);
          os << "\n" << pad << "} else {\n";
          print_program(node.else_branch, os, indent + 1);
          os << "\n" << pad << "}";
        } else if constexpr (std::is_same_v<T, StmtObserve>) {
          os << pad << "observe(" << node.guard.to_string() << ")";
        }
      },
      s.node);
}

void print_program(const Program& p, std::ostringstream& os, int indent) {
  for (std::size_t i = 0; i < p.stmts.size(); ++i) {
    if (i > 0) os << ";\n";
    print_stmt(p.stmts[i], os, indent);
  }
}

}  // namespace

std::set<VarId> free_vars(const Program& p) {
  std::set<VarId> out;
  collect_vars(p, out);
  return out;
}

std::string to_source(const Rhs& rhs) {
  return std::visit(
      [](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, RhsConst>) {
          return std::to_string(node.value);
        } else if constexpr (std::is_same_v<T, RhsVar>) {
          return node.var.name();
        } else if constexpr (std::is_same_v<T, RhsVarPlus>) {
          return node.var.name() + " + " + std::to_string(node.increment);
        } else if constexpr (std::is_same_v<T, RhsBernoulli>) {
          return "bernoulli(" + node.p.to_string() + ")";
        } else {
          return "geometric(" + node.p.to_string() + ")";
        }
      },
      rhs);
}

std::string to_source(const Stmt& s) {
  std::ostringstream os;
  print_stmt(s, os, 0);
  return os.str();
}

std::string to_source(const Program& p) {
  std::ostringstream os;
  print_program(p, os, 0);
  os << "\n";
  return os.str();
}

}  // namespace pga
