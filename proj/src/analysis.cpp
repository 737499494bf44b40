#include "acg/analysis.hpp"

#include <unordered_map>

#include "acg/errors.hpp"

namespace acg {

GroupAnalysis::GroupAnalysis(PermGroup group)
    : group_(std::move(group)), table_(&group_.table()), n_(table_->size()) {}

std::uint32_t GroupAnalysis::index(const Permutation& g) const {
  if (g.degree() != group_.degree()) throw PreconditionError(g.to_string() + " has the wrong degree");
  auto idx = table_->index_of(g);
  if (!idx) throw PreconditionError(g.to_string() + " is not an element of the group");
  return *idx;
}

const PermGroup& GroupAnalysis::derived() const {
  if (!derived_) derived_ = derived_subgroup(group_);
  return *derived_;
}

const ElementSet& GroupAnalysis::derived_set() const {
  if (!derived_set_) derived_set_ = set_of(derived());
  return *derived_set_;
}

const std::vector<ConjClass>& GroupAnalysis::classes() const {
  if (!classes_) {
    classes_ = conjugacy_classes(group_);
    class_id_.assign(n_, 0);
    for (std::uint32_t k = 0; k < classes_->size(); ++k) {
      for (const auto& x : *(*classes_)[k].members) class_id_[index(x)] = k;
    }
  }
  return *classes_;
}

std::uint32_t GroupAnalysis::class_of(std::uint32_t x) const {
  classes();
  return class_id_[x];
}

std::uint64_t GroupAnalysis::centralizer_order(std::uint32_t x) const {
  return n_ / classes()[class_of(x)].size;
}

bool GroupAnalysis::solvable() const {
  if (!solvable_) solvable_ = is_solvable(group_);
  return *solvable_;
}

const SeriesReport& GroupAnalysis::chief() const {
  if (!chief_) chief_ = chief_series(group_);
  return *chief_;
}

const std::vector<ChiefQuotient>& GroupAnalysis::chief_quotients() const {
  if (chief_quotients_) return *chief_quotients_;
  std::vector<ChiefQuotient> out;
  for (const auto& kernel : chief().terms) {
    ChiefQuotient q{kernel, std::vector<std::uint32_t>(n_), {}};
    if (kernel.is_trivial()) {
      for (std::uint32_t x = 0; x < n_; ++x) q.coset[x] = x;
      for (std::uint32_t x = 0; x < n_; ++x) q.centralizer_order.push_back(centralizer_order(x));
    } else {
      QuotientMap map = quotient_group(group_, kernel);
      const auto& labels = *map.action.labels;
      for (std::uint32_t x = 0; x < n_; ++x) q.coset[x] = static_cast<std::uint32_t>(labels[x]);
      std::unordered_map<Permutation, std::uint64_t, PermutationHash> class_size_of;
      for (const auto& cls : conjugacy_classes(map.image)) {
        for (const auto& m : *cls.members) class_size_of.emplace(m, cls.size);
      }
      for (const auto& rep : map.action.representatives) {
        q.centralizer_order.push_back(map.image.order() / class_size_of.at(map.project(rep)));
      }
    }
    out.push_back(std::move(q));
  }
  chief_quotients_ = std::move(out);
  return *chief_quotients_;
}

const CharacterTable& GroupAnalysis::character_table() const {
  if (!chartab_) chartab_ = acg::character_table(group_);
  return *chartab_;
}

const std::vector<ElementSet>& GroupAnalysis::subgroups() const {
  if (!subgroups_) subgroups_ = all_subgroups(group_);
  return *subgroups_;
}

ElementSet GroupAnalysis::set_of(const PermGroup& subgroup) const {
  ElementSet out(n_);
  for (const auto& h : subgroup.elements()) out.insert(index(h));
  return out;
}

std::vector<std::uint32_t> GroupAnalysis::generators_of(const ElementSet& set) const {
  std::vector<std::uint32_t> gens;
  ElementSet current = table_->closure(gens);
  for (auto x : set.members()) {
    if (current.contains(x)) continue;
    gens.push_back(x);
    current = table_->closure(gens);
  }
  return gens;
}

PermGroup GroupAnalysis::subgroup(const ElementSet& set) const {
  std::vector<Permutation> gens;
  for (auto x : generators_of(set)) gens.push_back(element(x));
  return PermGroup(group_.degree(), std::move(gens));
}

ElementSet GroupAnalysis::centralizer_in(const ElementSet& within, std::uint32_t x) const {
  ElementSet out(n_);
  for (auto g : within.members()) {
    if (table_->mul(g, x) == table_->mul(x, g)) out.insert(g);
  }
  return out;
}

ElementSet GroupAnalysis::normalizer(const ElementSet& subgroup) const {
  auto gens = generators_of(subgroup);
  ElementSet out(n_);
  for (std::uint32_t g = 0; g < n_; ++g) {
    bool normalizes = true;
    for (auto h : gens) {
      if (!subgroup.contains(table_->conj(h, g))) {
        normalizes = false;
        break;
      }
    }
    if (normalizes) out.insert(g);
  }
  return out;
}

ElementSet GroupAnalysis::conjugate(const ElementSet& subgroup, std::uint32_t g) const {
  ElementSet out(n_);
  for (auto h : subgroup.members()) out.insert(table_->conj(h, g));
  return out;
}

ElementSet GroupAnalysis::product(const ElementSet& a, const ElementSet& b) const {
  ElementSet out(n_);
  auto bm = b.members();
  for (auto x : a.members()) {
    for (auto y : bm) out.insert(table_->mul(x, y));
  }
  return out;
}

ElementSet GroupAnalysis::derived_of(const ElementSet& subgroup) const {
  auto gens = generators_of(subgroup);
  std::vector<std::uint32_t> comms;
  for (auto x : gens) {
    for (auto y : gens) comms.push_back(table_->comm(x, y));
  }
  ElementSet current = table_->closure(comms);
  // Normal closure in the subgroup.
  for (bool changed = true; changed;) {
    changed = false;
    for (auto c : generators_of(current)) {
      for (auto g : gens) {
        auto d = table_->conj(c, g);
        if (!current.contains(d)) {
          comms.push_back(d);
          current = table_->closure(comms);
          changed = true;
        }
      }
    }
  }
  return current;
}

ElementSet GroupAnalysis::center_of(const ElementSet& subgroup) const {
  auto gens = generators_of(subgroup);
  ElementSet out(n_);
  for (auto x : subgroup.members()) {
    bool central = true;
    for (auto g : gens) {
      if (table_->mul(x, g) != table_->mul(g, x)) {
        central = false;
        break;
      }
    }
    if (central) out.insert(x);
  }
  return out;
}

bool GroupAnalysis::is_nilpotent(const ElementSet& subgroup) const {
  const std::uint64_t size = subgroup.count();
  auto members = subgroup.members();
  for (auto p : prime_divisors(size)) {
    std::uint64_t p_elements = 0;
    for (auto x : members) {
      if (p_part(table_->order_of(x), p) == table_->order_of(x)) ++p_elements;
    }
    if (p_elements != p_part(size, p)) return false;
  }
  return true;
}

ElementSet GroupAnalysis::p_prime_elements(const ElementSet& within, std::uint64_t p) const {
  ElementSet out(n_);
  for (auto x : within.members()) {
    if (table_->order_of(x) % p != 0) out.insert(x);
  }
  return out;
}

std::string GroupAnalysis::describe(const ElementSet& subgroup) const {
  std::string out = "<";
  auto gens = generators_of(subgroup);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i > 0) out += ", ";
    out += element(gens[i]).to_string();
  }
  return out + ">";
}

}  // namespace acg
