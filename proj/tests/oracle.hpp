#pragma once

// Brute-force reference computations used only by the tests. Everything here
// works on explicit element lists built by closure under multiplication, and
// deliberately avoids the BSGS, orbit and table machinery under test.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "acg/permutation.hpp"

namespace acg::oracle {

using Elements = std::vector<Permutation>;

inline Elements closure(std::size_t degree, const Elements& gens) {
  std::set<Permutation> seen{Permutation(degree)};
  Elements queue{Permutation(degree)};
  for (std::size_t pos = 0; pos < queue.size(); ++pos) {
    for (const auto& g : gens) {
      Permutation y = queue[pos] * g;
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return Elements(seen.begin(), seen.end());
}

inline bool member(const Elements& sorted, const Permutation& x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

inline Elements centralizer(const Elements& group, const Permutation& x) {
  Elements out;
  for (const auto& g : group) {
    if (g * x == x * g) out.push_back(g);
  }
  return out;
}

inline Elements conjugacy_class(const Elements& group, const Permutation& x) {
  std::set<Permutation> cls;
  for (const auto& g : group) cls.insert(g.inverse() * x * g);
  return Elements(cls.begin(), cls.end());
}

inline std::vector<Elements> classes(const Elements& group) {
  std::set<Permutation> done;
  std::vector<Elements> out;
  for (const auto& x : group) {
    if (done.count(x)) continue;
    auto cls = conjugacy_class(group, x);
    done.insert(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

inline Elements derived(const Elements& group) {
  std::set<Permutation> comms;
  for (const auto& x : group) {
    for (const auto& y : group) comms.insert(x.inverse() * y.inverse() * x * y);
  }
  return closure(group.front().degree(), Elements(comms.begin(), comms.end()));
}

inline Elements center(const Elements& group) {
  Elements out;
  for (const auto& z : group) {
    bool central = std::all_of(group.begin(), group.end(), [&](const Permutation& g) { return g * z == z * g; });
    if (central) out.push_back(z);
  }
  return out;
}

inline Elements normalizer(const Elements& group, const Elements& sub) {
  Elements out;
  for (const auto& g : group) {
    bool ok = std::all_of(sub.begin(), sub.end(),
                          [&](const Permutation& h) { return member(sub, g.inverse() * h * g); });
    if (ok) out.push_back(g);
  }
  return out;
}

inline bool is_subgroup(const Elements& sorted) {
  for (const auto& x : sorted) {
    for (const auto& y : sorted) {
      if (!member(sorted, x * y)) return false;
    }
  }
  return true;
}

inline bool is_p_power(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

/// Centraliser order and |G:G'| comparison straight from the definition.
inline bool anticentral(const Elements& group, const Permutation& a) {
  return centralizer(group, a).size() * derived(group).size() == group.size();
}

inline Elements commutator_set(const Elements& group, const Permutation& a) {
  std::set<Permutation> out;
  for (const auto& g : group) out.insert(a.inverse() * g.inverse() * a * g);
  return Elements(out.begin(), out.end());
}

}  // namespace acg::oracle
