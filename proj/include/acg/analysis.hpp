#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "acg/cayley.hpp"
#include "acg/chartab.hpp"
#include "acg/perm_group.hpp"
#include "acg/structure.hpp"

namespace acg {

/// Quotient G/K for one term K of the chief series, recorded per element.
struct ChiefQuotient {
  PermGroup kernel;
  /// coset[x] is the coset of element x in the quotient realization.
  std::vector<std::uint32_t> coset;
  /// centralizer_order[c] = |C_{G/K}(c)| computed in the quotient image.
  std::vector<std::uint64_t> centralizer_order;
};

/// Element-indexed view of a small group, built around its Cayley table.
///
/// Derived data (G', classes, chief series, character table, subgroup
/// lattice) is computed on first use and cached. Not thread-safe: share the
/// underlying PermGroup across threads, not the analysis object.
class GroupAnalysis {
 public:
  // Implicit so that operations can be called directly with a PermGroup.
  GroupAnalysis(PermGroup group);  // NOLINT(google-explicit-constructor)

  const PermGroup& group() const noexcept { return group_; }
  const CayleyTable& table() const { return *table_; }
  std::size_t order() const noexcept { return n_; }
  /// Throws PreconditionError if `g` is not in the group.
  std::uint32_t index(const Permutation& g) const;
  const Permutation& element(std::uint32_t x) const { return table_->element(x); }
  ElementSet full() const { return table_->full(); }

  const PermGroup& derived() const;
  const ElementSet& derived_set() const;
  std::uint64_t abelian_index() const { return n_ / derived_set().count(); }

  const std::vector<ConjClass>& classes() const;
  std::uint32_t class_of(std::uint32_t x) const;
  std::uint64_t centralizer_order(std::uint32_t x) const;

  bool solvable() const;
  /// Throws UnsupportedError for nonsolvable groups.
  const SeriesReport& chief() const;
  /// One entry per term of chief().terms, in the same order.
  const std::vector<ChiefQuotient>& chief_quotients() const;
  const CharacterTable& character_table() const;
  const std::vector<ElementSet>& subgroups() const;

  ElementSet set_of(const PermGroup& subgroup) const;
  PermGroup subgroup(const ElementSet& set) const;
  /// Greedy generating set, in increasing index order.
  std::vector<std::uint32_t> generators_of(const ElementSet& set) const;
  ElementSet closure(const std::vector<std::uint32_t>& generators) const { return table_->closure(generators); }

  ElementSet centralizer(std::uint32_t x) const { return centralizer_in(full(), x); }
  ElementSet centralizer_in(const ElementSet& within, std::uint32_t x) const;
  ElementSet normalizer(const ElementSet& subgroup) const;
  ElementSet conjugate(const ElementSet& subgroup, std::uint32_t g) const;
  /// The set {xy : x in a, y in b}; not necessarily a subgroup.
  ElementSet product(const ElementSet& a, const ElementSet& b) const;
  ElementSet derived_of(const ElementSet& subgroup) const;
  ElementSet center_of(const ElementSet& subgroup) const;
  /// A subgroup is nilpotent iff for each prime its p-elements number |H|_p.
  bool is_nilpotent(const ElementSet& subgroup) const;
  /// Set of elements of `within` whose order is coprime to p.
  ElementSet p_prime_elements(const ElementSet& within, std::uint64_t p) const;

  std::string describe(std::uint32_t x) const { return element(x).to_string(); }
  std::string describe(const ElementSet& subgroup) const;

 private:
  PermGroup group_;
  const CayleyTable* table_;
  std::size_t n_;
  mutable std::optional<PermGroup> derived_;
  mutable std::optional<ElementSet> derived_set_;
  mutable std::optional<std::vector<ConjClass>> classes_;
  mutable std::vector<std::uint32_t> class_id_;
  mutable std::optional<bool> solvable_;
  mutable std::optional<SeriesReport> chief_;
  mutable std::optional<std::vector<ChiefQuotient>> chief_quotients_;
  mutable std::optional<CharacterTable> chartab_;
  mutable std::optional<std::vector<ElementSet>> subgroups_;
};

}  // namespace acg
