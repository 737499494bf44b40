#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "acg/perm_group.hpp"

namespace acg {

/// A finite set {0, ..., size-1} with a right action of `acting_group`.
class GSet {
 public:
  using Action = std::function<std::size_t(std::size_t, const Permutation&)>;

  GSet(PermGroup acting_group, std::size_t size, Action action,
       std::vector<std::string> labels = {});

  /// The group acting on its own points.
  static GSet natural(const PermGroup& group);
  /// Conjugation action on a G-invariant set of elements.
  static GSet conjugation_on_elements(const PermGroup& group, std::vector<Permutation> elements);
  /// Conjugation action on a G-invariant set of subgroups.
  static GSet conjugation_on_subgroups(const PermGroup& group, std::vector<PermGroup> subgroups);

  std::size_t size() const noexcept { return size_; }
  const PermGroup& acting_group() const noexcept { return group_; }
  std::size_t act(std::size_t point, const Permutation& g) const;
  const std::string& label(std::size_t point) const;

  /// Orbit of `point` under the group generated by `generators`, sorted.
  std::vector<std::size_t> orbit_under(std::size_t point, std::span<const Permutation> generators) const;
  std::vector<std::size_t> fixed_points(const Permutation& g) const;
  /// Image of `g` as a permutation of the points.
  Permutation image_of(const Permutation& g) const;

 private:
  PermGroup group_;
  std::size_t size_;
  Action action_;
  std::vector<std::string> labels_;
};

/// Orbit of `point` under the acting group; throws PreconditionError for an
/// unknown point.
std::vector<std::size_t> orbit_of(const GSet& omega, std::size_t point);

/// Right cosets Hx of H in G, numbered by first appearance in G.elements().
struct CosetAction {
  GSet gset;
  /// Induced permutation group on the |G:H| cosets.
  PermGroup image;
  /// representatives[c] is the least element of coset c.
  std::vector<Permutation> representatives;

  /// Coset containing `g`.
  std::size_t coset_of(const Permutation& g) const;
  Permutation image_of(const Permutation& g) const { return gset.image_of(g); }

  std::shared_ptr<const std::vector<std::size_t>> labels;  // indexed like G.elements()
  PermGroup group;
};

/// Action of G on the right cosets of H. Throws PreconditionError if H is not
/// contained in G.
CosetAction coset_action(const PermGroup& group, const PermGroup& subgroup);

}  // namespace acg
