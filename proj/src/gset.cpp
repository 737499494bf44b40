#include "acg/gset.hpp"

#include <algorithm>
#include <unordered_map>

#include "acg/errors.hpp"

namespace acg {

GSet::GSet(PermGroup acting_group, std::size_t size, Action action, std::vector<std::string> labels)
    : group_(std::move(acting_group)), size_(size), action_(std::move(action)), labels_(std::move(labels)) {
  if (labels_.empty()) {
    labels_.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) labels_.push_back(std::to_string(i + 1));
  }
}

GSet GSet::natural(const PermGroup& group) {
  return GSet(group, group.degree(),
              [](std::size_t point, const Permutation& g) { return std::size_t{g[static_cast<Point>(point)]}; });
}

GSet GSet::conjugation_on_elements(const PermGroup& group, std::vector<Permutation> elements) {
  auto elems = std::make_shared<std::vector<Permutation>>(std::move(elements));
  auto index = std::make_shared<std::unordered_map<Permutation, std::size_t, PermutationHash>>();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < elems->size(); ++i) {
    index->emplace((*elems)[i], i);
    labels.push_back((*elems)[i].to_string());
  }
  auto size = elems->size();
  return GSet(
      group, size,
      [elems, index](std::size_t point, const Permutation& g) {
        auto it = index->find(conjugate((*elems)[point], g));
        if (it == index->end()) throw PreconditionError("element set is not invariant under conjugation");
        return it->second;
      },
      std::move(labels));
}

GSet GSet::conjugation_on_subgroups(const PermGroup& group, std::vector<PermGroup> subgroups) {
  auto subs = std::make_shared<std::vector<PermGroup>>(std::move(subgroups));
  std::vector<std::string> labels;
  for (const auto& s : *subs) labels.push_back("<" + to_string(s.generators()) + ">");
  auto size = subs->size();
  return GSet(
      group, size,
      [subs](std::size_t point, const Permutation& g) {
        const PermGroup& h = (*subs)[point];
        std::vector<Permutation> conj_gens;
        for (const auto& x : h.generators()) conj_gens.push_back(conjugate(x, g));
        for (std::size_t i = 0; i < subs->size(); ++i) {
          const PermGroup& k = (*subs)[i];
          if (k.order() == h.order() && k.contains_all(conj_gens)) return i;
        }
        throw PreconditionError("subgroup set is not invariant under conjugation");
      },
      std::move(labels));
}

std::size_t GSet::act(std::size_t point, const Permutation& g) const {
  if (point >= size_) throw PreconditionError("unknown point " + std::to_string(point));
  return action_(point, g);
}

const std::string& GSet::label(std::size_t point) const {
  if (point >= size_) throw PreconditionError("unknown point " + std::to_string(point));
  return labels_[point];
}

std::vector<std::size_t> GSet::orbit_under(std::size_t point, std::span<const Permutation> generators) const {
  if (point >= size_) throw PreconditionError("unknown point " + std::to_string(point));
  std::vector<bool> seen(size_, false);
  std::vector<std::size_t> orbit{point};
  seen[point] = true;
  for (std::size_t pos = 0; pos < orbit.size(); ++pos) {
    for (const auto& g : generators) {
      std::size_t next = action_(orbit[pos], g);
      if (!seen[next]) {
        seen[next] = true;
        orbit.push_back(next);
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

std::vector<std::size_t> GSet::fixed_points(const Permutation& g) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size_; ++i) {
    if (action_(i, g) == i) out.push_back(i);
  }
  return out;
}

Permutation GSet::image_of(const Permutation& g) const {
  std::vector<Point> images(size_);
  for (std::size_t i = 0; i < size_; ++i) images[i] = static_cast<Point>(action_(i, g));
  return Permutation::from_images(std::move(images));
}

std::vector<std::size_t> orbit_of(const GSet& omega, std::size_t point) {
  return omega.orbit_under(point, omega.acting_group().generators());
}

std::size_t CosetAction::coset_of(const Permutation& g) const {
  auto idx = group.index_of(g);
  if (!idx) throw PreconditionError(g.to_string() + " is not an element of the acting group");
  return (*labels)[*idx];
}

CosetAction coset_action(const PermGroup& group, const PermGroup& subgroup) {
  if (subgroup.degree() != group.degree() || !group.contains(subgroup)) {
    throw PreconditionError("subgroup is not contained in the group");
  }
  const auto& elems = group.elements();
  const auto& sub_elems = subgroup.elements();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  auto labels = std::make_shared<std::vector<std::size_t>>(elems.size(), kUnset);
  std::vector<Permutation> reps;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if ((*labels)[i] != kUnset) continue;
    std::size_t label = reps.size();
    reps.push_back(elems[i]);
    for (const auto& h : sub_elems) (*labels)[*group.index_of(h * elems[i])] = label;
  }

  auto shared_reps = std::make_shared<std::vector<Permutation>>(reps);
  PermGroup g_copy = group;
  auto action = [g_copy, labels, shared_reps](std::size_t coset, const Permutation& g) {
    auto idx = g_copy.index_of((*shared_reps)[coset] * g);
    if (!idx) throw PreconditionError(g.to_string() + " is not an element of the acting group");
    return (*labels)[*idx];
  };
  GSet gset(group, reps.size(), action);
  std::vector<Permutation> image_gens;
  for (const auto& g : group.generators()) image_gens.push_back(gset.image_of(g));
  PermGroup image(reps.size(), std::move(image_gens));
  return CosetAction{std::move(gset), std::move(image), std::move(reps), std::move(labels), group};
}

}  // namespace acg
