#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "pga/var.hpp"

namespace pga {

enum class Cmp { Eq, Ne, Lt, Le, Gt, Ge };

std::string to_string(Cmp cmp);
bool compare(std::uint64_t lhs, Cmp cmp, std::uint64_t rhs);

/// Rectangular boolean condition: a tree of atoms `var <cmp> constant`
/// combined with !, && and ||. Immutable; copies share structure.
class Guard {
 public:
  static Guard always_true();
  static Guard atom(VarId var, Cmp cmp, std::uint64_t constant);
  static Guard negation(Guard inner);
  static Guard conjunction(Guard lhs, Guard rhs);
  static Guard disjunction(Guard lhs, Guard rhs);

  bool evaluate(const std::function<std::uint64_t(VarId)>& value_of) const;

  /// Largest constant any atom compares each variable against.
  std::map<VarId, std::uint64_t> atom_bounds() const;

  bool operator==(const Guard& other) const;  // structural
  bool operator!=(const Guard& other) const { return !(*this == other); }

  std::string to_string() const;

 private:
  enum class Kind { True, Atom, Not, And, Or };

  struct Node {
    Kind kind;
    std::optional<VarId> var;  // Atom
    Cmp cmp = Cmp::Eq;
    std::uint64_t constant = 0;
    std::shared_ptr<const Node> a;  // Not / And / Or
    std::shared_ptr<const Node> b;  // And / Or
  };

  explicit Guard(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static bool eval_node(const Node& n,
                        const std::function<std::uint64_t(VarId)>& value_of);
  static void bounds_node(const Node& n, std::map<VarId, std::uint64_t>& out);
  static bool equal_nodes(const Node& x, const Node& y);
  static void print_node(const Node& n, std::string& out, int parent_level);

  std::shared_ptr<const Node> node_;
};

}  // namespace pga
