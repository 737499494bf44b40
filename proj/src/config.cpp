#include "acg/config.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace acg {

namespace {

std::uint64_t initial_bound() {
  if (const char* env = std::getenv("ACG_ENUM_BOUND")) {
    try {
      auto value = std::stoull(env);
      if (value > 0) return value;
    } catch (const std::exception&) {
      // unparsable value: keep the default
    }
  }
  return kDefaultEnumerationBound;
}

std::atomic<std::uint64_t>& bound_storage() {
  static std::atomic<std::uint64_t> bound{initial_bound()};
  return bound;
}

}  // namespace

std::uint64_t enumeration_bound() { return bound_storage().load(); }

void set_enumeration_bound(std::uint64_t bound) { bound_storage().store(bound); }

}  // namespace acg
