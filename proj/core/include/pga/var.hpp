#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace pga {

/// Interned program-variable identifier. Two VarIds compare equal iff they
/// name the same source-level variable. Ordering is lexicographic on the
/// name, so containers keyed by VarId iterate in a stable order.
class VarId {
 public:
  explicit VarId(std::string_view name);

  const std::string& name() const;

  friend bool operator==(VarId a, VarId b) { return a.id_ == b.id_; }
  friend bool operator!=(VarId a, VarId b) { return a.id_ != b.id_; }
  friend bool operator<(VarId a, VarId b) {
    return a.id_ != b.id_ && a.name() < b.name();
  }

 private:
  std::uint32_t id_;
};

std::ostream& operator<<(std::ostream& os, VarId v);

}  // namespace pga
