#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "pga/guard.hpp"
#include "pga/rational.hpp"
#include "pga/var.hpp"

namespace pga {

struct RhsConst {
  std::uint64_t value;
};
struct RhsVar {
  VarId var;
};
struct RhsVarPlus {
  VarId var;
  std::uint64_t increment;
};
struct RhsBernoulli {
  Rational p;  // in [0, 1]
};
struct RhsGeometric {
  Rational p;  // in [0, 1)
};

using Rhs = std::variant<RhsConst, RhsVar, RhsVarPlus, RhsBernoulli, RhsGeometric>;

struct Stmt;

struct Program {
  std::vector<Stmt> stmts;
};

struct StmtSkip {};
struct StmtAssign {
  VarId target;
  Rhs value;
};
struct StmtIfElse {
  Guard guard;
  Program then_branch;
  Program else_branch;
};
struct StmtObserve {
  Guard guard;
};

struct Stmt {
  std::variant<StmtSkip, StmtAssign, StmtIfElse, StmtObserve> node;
};

bool operator==(const Program& a, const Program& b);
bool operator==(const Stmt& a, const Stmt& b);
inline bool operator!=(const Program& a, const Program& b) { return !(a == b); }
inline bool operator!=(const Stmt& a, const Stmt& b) { return !(a == b); }

/// Every variable read or written anywhere in the program,
/// in lexicographic order.
std::set<VarId> free_vars(const Program& p);

/// Concrete syntax for the AST; parsing it back yields an equal AST.
std::string to_source(const Program& p);
std::string to_source(const Stmt& s);
std::string to_source(const Rhs& rhs);

}  // namespace pga
