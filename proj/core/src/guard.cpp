#include "pga/guard.hpp"

#include <stdexcept>

namespace pga {

std::string to_string(Cmp cmp) {
  switch (cmp) {
    case Cmp::Eq: return "=";
    case Cmp::Ne: return "!=";
    case Cmp::Lt: return "<";
    case Cmp::Le: return "<=";
    case Cmp::Gt: return ">";
    case Cmp::Ge: return ">=";
  }
  throw std::logic_error("bad Cmp");
}

bool compare(std::uint64_t lhs, Cmp cmp, std::uint64_t rhs) {
  switch (cmp) {
    case Cmp::Eq: return lhs == rhs;
    case Cmp::Ne: return lhs != rhs;
    case Cmp::Lt: return lhs < rhs;
    case Cmp::Le: return lhs <= rhs;
    case Cmp::Gt: return lhs > rhs;
    case Cmp::Ge: return lhs >= rhs;
  }
  throw std::logic_error("bad Cmp");
}

Guard Guard::always_true() {
  auto node = std::make_shared<Node>();
  node->kind = Kind::True;
  return Guard(std::move(node));
}

Guard Guard::atom(VarId var, Cmp cmp, std::uint64_t constant) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Atom;
  node->var = var;
  node->cmp = cmp;
  node->constant = constant;
  return Guard(std::move(node));
}

Guard Guard::negation(Guard inner) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Not;
  node->a = std::move(inner.node_);
  return Guard(std::move(node));
}

Guard Guard::conjunction(Guard lhs, Guard rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::And;
  node->a = std::move(lhs.node_);
  node->b = std::move(rhs.node_);
  return Guard(std::move(node));
}

Guard Guard::disjunction(Guard lhs, Guard rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Or;
  node->a = std::move(lhs.node_);
  node->b = std::move(rhs.node_);
  return Guard(std::move(node));
}

bool Guard::eval_node(const Node& n,
                      const std::function<std::uint64_t(VarId)>& value_of) {
  switch (n.kind) {
    case Kind::True: return true;
    case Kind::Atom: return compare(value_of(*n.var), n.cmp, n.constant);
    case Kind::Not: return !eval_node(*n.a, value_of);
    case Kind::And: return eval_node(*n.a, value_of) && eval_node(*n.b, value_of);
    case Kind::Or: return eval_node(*n.a, value_of) || eval_node(*n.b, value_of);
  }
  throw std::logic_error("bad guard node");
}

bool Guard::evaluate(const std::function<std::uint64_t(VarId)>& value_of) const {
  return eval_node(*node_, value_of);
}

void Guard::bounds_node(const Node& n, std::map<VarId, std::uint64_t>& out) {
  switch (n.kind) {
    case Kind::True: return;
    case Kind::Atom: {
      auto [it, inserted] = out.emplace(*n.var, n.constant);
      if (!inserted && it->second < n.constant) it->second = n.constant;
      return;
    }
    case Kind::Not: bounds_node(*n.a, out); return;
    case Kind::And:
    case Kind::Or:
      bounds_node(*n.a, out);
      bounds_node(*n.b, out);
      return;
  }
}

std::map<VarId, std::uint64_t> Guard::atom_bounds() const {
  std::map<VarId, std::uint64_t> out;
  bounds_node(*node_, out);
  return out;
}

bool Guard::equal_nodes(const Node& x, const Node& y) {
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case Kind::True: return true;
    case Kind::Atom:
      return *x.var == *y.var && x.cmp == y.cmp && x.constant == y.constant;
    case Kind::Not: return equal_nodes(*x.a, *y.a);
    case Kind::And:
    case Kind::Or:
      return equal_nodes(*x.a, *y.a) && equal_nodes(*x.b, *y.b);
  }
  return false;
}

bool Guard::operator==(const Guard& other) const {
  return equal_nodes(*node_, *other.node_);
}

// parent_level: 0 = disjunction context, 1 = conjunction, 2 = atom.
// Children at looser binding than their context get parenthesized, so the
// printed form re-parses to the same tree.
void Guard::print_node(const Node& n, std::string& out, int parent_level) {
  switch (n.kind) {
    case Kind::True:
      out += "true";
      return;
    case Kind::Atom:
      out += n.var->name();
      out += " " + pga::to_string(n.cmp) + " ";
      out += std::to_string(n.constant);
      return;
    case Kind::Not:
      out += "!";
      if (n.a->kind == Kind::True || n.a->kind == Kind::Not) {
        print_node(*n.a, out, 2);
      } else {
        out += "(";
        print_node(*n.a, out, 0);
        out += ")";
      }
      return;
    case Kind::And: {
      bool parens = parent_level > 1;
      if (parens) out += "(";
      print_node(*n.a, out, 1);
      out += " && ";
      // Right child must be an atom for a left-folded re-parse.
      if (n.b->kind == Kind::And || n.b->kind == Kind::Or) {
        out += "(";
        print_node(*n.b, out, 0);
        out += ")";
      } else {
        print_node(*n.b, out, 2);
      }
      if (parens) out += ")";
      return;
    }
    case Kind::Or: {
      bool parens = parent_level > 0;
      if (parens) out += "(";
      print_node(*n.a, out, 0);
      out += " || ";
      if (n.b->kind == Kind::Or) {
        out += "(";
        print_node(*n.b, out, 0);
        out += ")";
      } else {
        print_node(*n.b, out, 1);
      }
      if (parens) out += ")";
      return;
    }
  }
}

std::string Guard::to_string() const {
  std::string out;
  print_node(*node_, out, 0);
  return out;
}

}  // namespace pga
