#include "acg/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "acg/cayley.hpp"
#include "acg/config.hpp"
#include "acg/errors.hpp"

namespace acg {

struct PermGroup::Cache {
  std::once_flag bsgs_once;
  std::unique_ptr<Bsgs> bsgs;

  std::mutex elements_mutex;
  std::shared_ptr<const std::vector<Permutation>> elements;
  std::shared_ptr<const std::unordered_map<Permutation, std::size_t, PermutationHash>> index;

  std::mutex table_mutex;
  std::shared_ptr<const CayleyTable> table;
};

namespace {

// Deterministic Schreier-Sims. Base points are chosen as the first point
// moved by a generator that fixes the current base.
class SchreierSims {
 public:
  SchreierSims(std::size_t degree, const std::vector<Permutation>& generators)
      : degree_(degree) {
    for (const auto& g : generators) {
      if (!g.is_identity()) gens_.push_back(g);
    }
  }

  Bsgs run() {
    for (const auto& g : gens_) {
      bool fixes_base = std::all_of(base_.begin(), base_.end(),
                                    [&](Point b) { return g[b] == b; });
      if (fixes_base) base_.push_back(g.first_moved_point());
    }
    std::size_t k = base_.size();
    stab_gens_.assign(k, {});
    levels_.assign(k, {});
    for (std::size_t i = 0; i < k; ++i) {
      for (const auto& g : gens_) {
        bool fixes = true;
        for (std::size_t j = 0; j < i && fixes; ++j) fixes = g[base_[j]] == base_[j];
        if (fixes) stab_gens_[i].push_back(g);
      }
    }

    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(k) - 1;
    while (i >= 0) {
      auto level = static_cast<std::size_t>(i);
      compute_level(level);
      std::optional<std::size_t> jump = process_level(level);
      if (jump) {
        i = static_cast<std::ptrdiff_t>(*jump);
      } else {
        --i;
      }
    }

    Bsgs result;
    result.base = base_;
    result.levels = levels_;
    std::unordered_set<Permutation, PermutationHash> seen;
    for (const auto& level_gens : stab_gens_) {
      for (const auto& g : level_gens) {
        if (seen.insert(g).second) result.strong_generators.push_back(g);
      }
    }
    for (const auto& level : levels_) result.order *= level.orbit.size();
    return result;
  }

 private:
  void compute_level(std::size_t i) {
    Bsgs::Level level;
    level.slot.assign(degree_, -1);
    Point b = base_[i];
    level.orbit.push_back(b);
    level.slot[b] = 0;
    level.transversal.emplace_back(degree_);
    for (std::size_t pos = 0; pos < level.orbit.size(); ++pos) {
      Point beta = level.orbit[pos];
      for (const auto& s : stab_gens_[i]) {
        Point gamma = s[beta];
        if (level.slot[gamma] < 0) {
          level.slot[gamma] = static_cast<std::int32_t>(level.transversal.size());
          level.transversal.push_back(level.transversal[static_cast<std::size_t>(level.slot[beta])] * s);
          level.orbit.push_back(gamma);
        }
      }
    }
    levels_[i] = std::move(level);
  }

  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const {
    for (std::size_t l = from; l < base_.size(); ++l) {
      Point beta = g[base_[l]];
      auto slot = levels_[l].slot[beta];
      if (slot < 0) return {std::move(g), l};
      g = g * levels_[l].transversal[static_cast<std::size_t>(slot)].inverse();
    }
    return {std::move(g), base_.size()};
  }

  // Tests every Schreier generator of level i. On finding one that does not
  // strip, records it and returns the level to resume from.
  std::optional<std::size_t> process_level(std::size_t i) {
    const auto& level = levels_[i];
    for (std::size_t pos = 0; pos < level.orbit.size(); ++pos) {
      Point beta = level.orbit[pos];
      const Permutation& u_beta = level.transversal[static_cast<std::size_t>(level.slot[beta])];
      for (std::size_t s_idx = 0; s_idx < stab_gens_[i].size(); ++s_idx) {
        const Permutation& s = stab_gens_[i][s_idx];
        Point gamma = s[beta];
        const Permutation& u_gamma = level.transversal[static_cast<std::size_t>(level.slot[gamma])];
        Permutation h = u_beta * s * u_gamma.inverse();
        if (h.is_identity()) continue;
        auto [residue, j] = strip(std::move(h), i + 1);
        if (residue.is_identity()) continue;
        if (j == base_.size()) {
          base_.push_back(residue.first_moved_point());
          stab_gens_.emplace_back();
          levels_.emplace_back();
        }
        for (std::size_t l = i + 1; l <= j; ++l) stab_gens_[l].push_back(residue);
        return j;
      }
    }
    return std::nullopt;
  }

  std::size_t degree_;
  std::vector<Permutation> gens_;
  std::vector<Point> base_;
  std::vector<std::vector<Permutation>> stab_gens_;
  std::vector<Bsgs::Level> levels_;
};

}  // namespace

std::pair<Permutation, std::size_t> Bsgs::sift(Permutation g) const {
  for (std::size_t l = 0; l < base.size(); ++l) {
    Point beta = g[base[l]];
    auto slot = levels[l].slot[beta];
    if (slot < 0) return {std::move(g), l};
    g = g * levels[l].transversal[static_cast<std::size_t>(slot)].inverse();
  }
  return {std::move(g), base.size()};
}

PermGroup::PermGroup() : PermGroup(1, {}) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  if (degree == 0) throw PreconditionError("degree must be positive");
  for (const auto& g : generators_) {
    if (g.degree() != degree) {
      throw DegreeMismatch("generator " + g.to_string() + " has degree " +
                           std::to_string(g.degree()) + ", expected " + std::to_string(degree));
    }
  }
}

PermGroup PermGroup::trivial(std::size_t degree) { return PermGroup(degree, {}); }

const Bsgs& PermGroup::bsgs() const {
  std::call_once(cache_->bsgs_once, [this] {
    cache_->bsgs = std::make_unique<Bsgs>(SchreierSims(degree_, generators_).run());
  });
  return *cache_->bsgs;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) {
    throw DegreeMismatch("permutation of degree " + std::to_string(p.degree()) +
                         " tested against group of degree " + std::to_string(degree_));
  }
  auto [residue, level] = bsgs().sift(p);
  return level == bsgs().base.size() && residue.is_identity();
}

bool PermGroup::contains_all(std::span<const Permutation> perms) const {
  return std::all_of(perms.begin(), perms.end(), [this](const Permutation& p) { return contains(p); });
}

bool PermGroup::contains(const PermGroup& other) const {
  return contains_all(other.generators());
}

const std::vector<Permutation>& PermGroup::elements() const {
  std::lock_guard lock(cache_->elements_mutex);
  if (cache_->elements) return *cache_->elements;
  const Bsgs& chain = bsgs();
  if (chain.order > enumeration_bound()) {
    throw CapacityError("group of order " + std::to_string(chain.order) +
                        " exceeds enumeration bound " + std::to_string(enumeration_bound()) +
                        "; raise ACG_ENUM_BOUND");
  }
  std::vector<Permutation> current{Permutation(degree_)};
  for (std::size_t l = chain.levels.size(); l-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(current.size() * chain.levels[l].transversal.size());
    for (const auto& x : current) {
      for (const auto& u : chain.levels[l].transversal) next.push_back(x * u);
    }
    current = std::move(next);
  }
  std::sort(current.begin(), current.end());
  auto index = std::make_shared<std::unordered_map<Permutation, std::size_t, PermutationHash>>();
  index->reserve(current.size());
  for (std::size_t i = 0; i < current.size(); ++i) index->emplace(current[i], i);
  cache_->index = std::move(index);
  cache_->elements = std::make_shared<const std::vector<Permutation>>(std::move(current));
  return *cache_->elements;
}

std::optional<std::size_t> PermGroup::index_of(const Permutation& p) const {
  elements();
  std::shared_ptr<const std::unordered_map<Permutation, std::size_t, PermutationHash>> index;
  {
    std::lock_guard lock(cache_->elements_mutex);
    index = cache_->index;
  }
  auto it = index->find(p);
  if (it == index->end()) return std::nullopt;
  return it->second;
}

const CayleyTable& PermGroup::table() const {
  if (order() > kCayleyTableLimit) {
    throw CapacityError("group of order " + std::to_string(order()) +
                        " exceeds the multiplication table limit");
  }
  const auto& elems = elements();
  std::lock_guard lock(cache_->table_mutex);
  if (!cache_->table) cache_->table = std::make_shared<const CayleyTable>(elems);
  return *cache_->table;
}

bool PermGroup::operator==(const PermGroup& other) const {
  return degree_ == other.degree_ && order() == other.order() && contains(other) &&
         other.contains(*this);
}

PermGroup build_bsgs(const PermGroup& group) {
  group.bsgs();
  return group;
}

bool membership_test(const PermGroup& group, const Permutation& p) { return group.contains(p); }

std::vector<Permutation> elements_enumerate(const PermGroup& group, std::uint64_t bound) {
  if (group.order() > bound) {
    throw CapacityError("group of order " + std::to_string(group.order()) +
                        " exceeds enumeration bound " + std::to_string(bound) +
                        "; increase the bound");
  }
  return group.elements();
}

PermGroup join(const PermGroup& base, std::span<const Permutation> generators) {
  std::vector<Permutation> gens = base.generators();
  bool grew = false;
  for (const auto& g : generators) {
    if (!base.contains(g)) {
      gens.push_back(g);
      grew = true;
    }
  }
  if (!grew) return base;
  return PermGroup(base.degree(), std::move(gens));
}

PermGroup join(const PermGroup& a, const PermGroup& b) { return join(a, b.generators()); }

PermGroup subgroup_from_elements(std::size_t degree, std::span<const Permutation> elements) {
  std::vector<Permutation> gens;
  std::unordered_set<Permutation, PermutationHash> covered{Permutation(degree)};
  for (const auto& e : elements) {
    if (covered.count(e)) continue;
    gens.push_back(e);
    // Closure of the enlarged generating set, by right multiplication.
    std::vector<Permutation> frontier(covered.begin(), covered.end());
    std::deque<Permutation> queue(frontier.begin(), frontier.end());
    while (!queue.empty()) {
      Permutation x = std::move(queue.front());
      queue.pop_front();
      for (const auto& g : gens) {
        Permutation y = x * g;
        if (covered.insert(y).second) queue.push_back(std::move(y));
      }
    }
  }
  return PermGroup(degree, std::move(gens));
}

CayleyTable::CayleyTable(const std::vector<Permutation>& elements)
    : n_(elements.size()), elements_(elements) {
  index_.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) index_.emplace(elements_[i], static_cast<std::uint32_t>(i));
  mul_.resize(n_ * n_);
  inv_.resize(n_);
  orders_.resize(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      auto it = index_.find(elements_[i] * elements_[j]);
      if (it == index_.end()) throw InternalError("element list is not closed under multiplication");
      mul_[i * n_ + j] = it->second;
    }
  }
  for (std::size_t i = 0; i < n_; ++i) {
    inv_[i] = index_.at(elements_[i].inverse());
    orders_[i] = elements_[i].order();
  }
}

std::optional<std::uint32_t> CayleyTable::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementSet CayleyTable::closure(std::span<const std::uint32_t> generators) const {
  ElementSet set(n_);
  std::vector<std::uint32_t> queue{0};
  set.insert(0);
  for (std::size_t pos = 0; pos < queue.size(); ++pos) {
    for (auto g : generators) {
      auto y = mul(queue[pos], g);
      if (!set.contains(y)) {
        set.insert(y);
        queue.push_back(y);
      }
    }
  }
  return set;
}

ElementSet CayleyTable::full() const {
  ElementSet set(n_);
  for (std::size_t i = 0; i < n_; ++i) set.insert(i);
  return set;
}

std::vector<Permutation> CayleyTable::to_permutations(const ElementSet& set) const {
  std::vector<Permutation> out;
  for (auto i : set.members()) out.push_back(elements_[i]);
  return out;
}

}  // namespace acg
