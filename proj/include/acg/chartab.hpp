#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "acg/cyclotomic.hpp"
#include "acg/perm_group.hpp"
#include "acg/structure.hpp"

namespace acg {

using Rational = boost::rational<std::int64_t>;

/// Exact table of irreducible characters.
///
/// Rows are characters sorted by degree (trivial character first); columns
/// follow `classes`, whose first entry is the identity class. All values
/// live in Z[zeta_m] with m = `conductor`, the exponent of the group.
struct CharacterTable {
  std::uint64_t group_order = 0;
  unsigned conductor = 1;
  /// Prime q used for the modular eigenspace split.
  std::uint64_t dixon_prime = 0;
  std::vector<ConjClass> classes;
  std::vector<std::vector<Cyclotomic>> irreducibles;
  std::vector<std::uint64_t> degrees;
  std::size_t linear_count = 0;
  /// inverse_class[k] is the class of g^-1 for g in classes[k].
  std::vector<std::size_t> inverse_class;

  std::size_t class_count() const noexcept { return classes.size(); }
  std::size_t character_count() const noexcept { return irreducibles.size(); }
  /// Throws PreconditionError if `g` is not an element of the group.
  std::size_t class_of(const Permutation& g) const;

  std::shared_ptr<const std::unordered_map<Permutation, std::size_t, PermutationHash>> class_lookup;
};

/// Least prime q = 1 mod exponent with q > 2 sqrt(order).
std::uint64_t dixon_prime(std::uint64_t group_order, std::uint64_t exponent);

/// Builds the table; throws CapacityError above the enumeration bound and
/// InternalError if any consistency check (degree sum, orthogonality) fails.
CharacterTable character_table(const PermGroup& group);

bool is_zero_at(const CharacterTable& table, std::size_t character, std::size_t cls);

/// sum_chi chi(g_i) conj(chi(g_j)).
std::int64_t orthogonality_check(const CharacterTable& table, std::size_t class_i, std::size_t class_j);

/// <chi_N, chi_N>_N for a normal subgroup N of G.
Rational restriction_norm(const CharacterTable& table, const PermGroup& group, const PermGroup& normal,
                          std::size_t character);

/// Text export: a "# conductor m" comment, a row of class sizes, then one
/// comma-separated row per character.
std::string export_character_table(const CharacterTable& table);

}  // namespace acg
