#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "acg/permutation.hpp"

namespace acg {

class CayleyTable;

/// Base and strong generating set with explicit transversals.
struct Bsgs {
  struct Level {
    std::vector<Point> orbit;
    /// Index into `transversal` for every point, -1 when outside the orbit.
    std::vector<std::int32_t> slot;
    /// transversal[slot[b]] maps the base point to b.
    std::vector<Permutation> transversal;
  };

  std::vector<Point> base;
  std::vector<Permutation> strong_generators;
  std::vector<Level> levels;
  std::uint64_t order = 1;

  /// Strips `g` through the chain. Returns the residue and the level at which
  /// sifting stopped (levels.size() when every level was passed).
  std::pair<Permutation, std::size_t> sift(Permutation g) const;
};

/// A permutation group given by generators. The BSGS, the sorted element
/// list and the Cayley table are built lazily on first use and shared between
/// copies; construction of each is synchronised, so concurrent readers see
/// either nothing or a complete certificate.
class PermGroup {
 public:
  PermGroup();
  /// Throws DegreeMismatch if a generator has the wrong degree.
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  const Bsgs& bsgs() const;
  std::uint64_t order() const { return bsgs().order; }
  bool is_trivial() const { return order() == 1; }
  Permutation identity() const { return Permutation(degree_); }

  /// Membership via sifting. Throws DegreeMismatch.
  bool contains(const Permutation& p) const;
  bool contains_all(std::span<const Permutation> perms) const;
  /// Every generator of `other` lies in this group.
  bool contains(const PermGroup& other) const;

  /// All elements in lexicographic order of their image tables.
  /// Throws CapacityError when order() exceeds enumeration_bound().
  const std::vector<Permutation>& elements() const;
  /// Position of `p` in elements(), or nullopt if p is not in the group.
  std::optional<std::size_t> index_of(const Permutation& p) const;

  /// Multiplication table over elements(); throws CapacityError above
  /// kCayleyTableLimit.
  const CayleyTable& table() const;
  static constexpr std::uint64_t kCayleyTableLimit = 4096;

  /// Same set of elements.
  bool operator==(const PermGroup& other) const;

 private:
  struct Cache;
  std::size_t degree_ = 1;
  std::vector<Permutation> generators_;
  std::shared_ptr<Cache> cache_;
};

/// Returns `group` with its BSGS certificate built.
PermGroup build_bsgs(const PermGroup& group);

bool membership_test(const PermGroup& group, const Permutation& p);

/// Copies the element list; throws CapacityError if order() > bound.
std::vector<Permutation> elements_enumerate(const PermGroup& group, std::uint64_t bound);

/// Subgroup generated by `generators` plus the generators of `base`.
PermGroup join(const PermGroup& base, std::span<const Permutation> generators);
PermGroup join(const PermGroup& a, const PermGroup& b);

/// Subgroup of the given degree generated by a set that is already known to
/// be closed under multiplication. Picks a short generating set greedily.
PermGroup subgroup_from_elements(std::size_t degree, std::span<const Permutation> elements);

}  // namespace acg
