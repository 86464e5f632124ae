#include "pga/var.hpp"

#include <deque>
#include <mutex>
#include <ostream>
#include <unordered_map>

namespace pga {

namespace {

struct Interner {
  std::mutex mutex;
  std::unordered_map<std::string, std::uint32_t> ids;
  std::deque<std::string> names;  // stable addresses
};

Interner& interner() {
  static Interner table;
  return table;
}

}  // namespace

VarId::VarId(std::string_view name) {
  auto& table = interner();
  std::lock_guard<std::mutex> lock(table.mutex);
  auto it = table.ids.find(std::string(name));
  if (it != table.ids.end()) {
    id_ = it->second;
    return;
  }
  id_ = static_cast<std::uint32_t>(table.names.size());
  table.names.emplace_back(name);
  table.ids.emplace(table.names.back(), id_);
}

const std::string& VarId::name() const {
  auto& table = interner();
  std::lock_guard<std::mutex> lock(table.mutex);
  return table.names[id_];
}

std::ostream& operator<<(std::ostream& os, VarId v) { return os << v.name(); }

}  // namespace pga
