#pragma once

#include <cstdint>

namespace acg {

inline constexpr std::uint64_t kDefaultEnumerationBound = 1'000'000;

/// Largest group order that may be enumerated element by element.
/// Initialised from the `ACG_ENUM_BOUND` environment variable when set.
std::uint64_t enumeration_bound();
void set_enumeration_bound(std::uint64_t bound);

}  // namespace acg
