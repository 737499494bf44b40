#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "acg/cayley.hpp"
#include "acg/gset.hpp"
#include "acg/perm_group.hpp"

namespace acg {

struct ConjClass {
  Permutation representative;  // lexicographically least member
  std::uint64_t size = 0;
  std::optional<std::vector<Permutation>> members;  // sorted
};

enum class SeriesKind { derived, lower_central, upper_central, chief };

std::string to_string(SeriesKind kind);

struct SeriesReport {
  SeriesKind kind = SeriesKind::derived;
  /// derived / lower_central: descending from G. upper_central / chief:
  /// ascending from the trivial subgroup.
  std::vector<PermGroup> terms;
  bool is_solvable = false;
  bool is_nilpotent = false;
  std::optional<std::size_t> nilpotency_class;
  /// Chief series only: central_factor[i] describes terms[i+1]/terms[i].
  std::vector<bool> central_factor;
};

struct QuotientMap {
  CosetAction action;
  PermGroup image;
  Permutation project(const Permutation& g) const { return action.image_of(g); }
};

// Elementwise predicates and small helpers.

bool is_abelian(const PermGroup& group);
bool is_normal(const PermGroup& group, const PermGroup& subgroup);
bool commutes_with_all(const Permutation& x, std::span<const Permutation> elements);
bool is_solvable(const PermGroup& group);
bool is_nilpotent(const PermGroup& group);
std::uint64_t exponent(const PermGroup& group);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
bool is_prime(std::uint64_t n);
/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

PermGroup intersection(const PermGroup& a, const PermGroup& b);

/// Order of the conjugacy class of x under `group` (x need not lie in it).
std::uint64_t class_size(const PermGroup& group, const Permutation& x);

// Centralizers, normalizers, closures.

/// C_G(x) for x in G. Exhaustive below kExhaustiveCentralizerLimit, orbit
/// stabilizer on the conjugation action above. Throws PreconditionError if
/// x is not in G.
PermGroup centralizer(const PermGroup& group, const Permutation& x);
inline constexpr std::uint64_t kExhaustiveCentralizerLimit = 10'000;
/// Both paths, with no membership requirement on x.
PermGroup centralizer_exhaustive(const PermGroup& group, const Permutation& x);
PermGroup centralizer_orbit_stabilizer(const PermGroup& group, const Permutation& x);
/// Elements of `group` commuting with every element of `elements`.
PermGroup centralizer_of_set(const PermGroup& group, std::span<const Permutation> elements);

std::vector<ConjClass> conjugacy_classes(const PermGroup& group);

PermGroup derived_subgroup(const PermGroup& group);
PermGroup center(const PermGroup& group);
PermGroup normalizer(const PermGroup& group, const PermGroup& subgroup);
PermGroup normal_closure(const PermGroup& group, std::span<const Permutation> elements);
/// [A, B] for subgroups A, B that are both normal in `group`.
PermGroup commutator_subgroup(const PermGroup& group, const PermGroup& a, const PermGroup& b);

QuotientMap quotient_group(const PermGroup& group, const PermGroup& normal);

PermGroup sylow_subgroup(const PermGroup& group, std::uint64_t p);

SeriesReport series_report(const PermGroup& group, SeriesKind kind);
SeriesReport chief_series(const PermGroup& group);

/// A x B on the disjoint union of the point sets, A's points first.
PermGroup direct_product(const PermGroup& a, const PermGroup& b);
Permutation direct_product_element(const Permutation& a, const Permutation& b);

bool is_supplement(const PermGroup& group, const PermGroup& subgroup);

/// All subgroups of a solvable group, found by prime-index extensions over
/// the Cayley table. Each entry is closed and contains the identity.
/// Nonsolvable input falls back to naive cyclic extension.
std::vector<ElementSet> all_subgroups(const PermGroup& group);

}  // namespace acg
