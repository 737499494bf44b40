#include "acg/structure.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "acg/errors.hpp"

namespace acg {

namespace {

void require_subgroup(const PermGroup& group, const PermGroup& subgroup, const char* what) {
  if (subgroup.degree() != group.degree() || !group.contains(subgroup)) {
    throw PreconditionError(std::string(what) + ": subgroup is not contained in the group");
  }
}

void require_member(const PermGroup& group, const Permutation& x, const char* what) {
  if (x.degree() != group.degree() || !group.contains(x)) {
    throw PreconditionError(std::string(what) + ": " + x.to_string() + " is not an element of the group");
  }
}

bool normalizes(const Permutation& g, const PermGroup& subgroup) {
  for (const auto& h : subgroup.generators()) {
    if (!subgroup.contains(conjugate(h, g))) return false;
  }
  return true;
}

// Smallest k >= 1 with x^k in `subgroup`.
std::uint64_t order_modulo(const Permutation& x, const PermGroup& subgroup) {
  Permutation power = x;
  std::uint64_t k = 1;
  while (!subgroup.contains(power)) {
    power = power * x;
    ++k;
  }
  return k;
}

std::vector<PermGroup> derived_terms(const PermGroup& group) {
  std::vector<PermGroup> terms{group};
  for (;;) {
    PermGroup next = derived_subgroup(terms.back());
    if (next.order() == terms.back().order()) break;
    terms.push_back(std::move(next));
  }
  return terms;
}

std::vector<PermGroup> lower_central_terms(const PermGroup& group) {
  std::vector<PermGroup> terms{group};
  for (;;) {
    PermGroup next = commutator_subgroup(group, terms.back(), group);
    if (next.order() == terms.back().order()) break;
    terms.push_back(std::move(next));
  }
  return terms;
}

}  // namespace

std::string to_string(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::derived: return "derived";
    case SeriesKind::lower_central: return "lower_central";
    case SeriesKind::upper_central: return "upper_central";
    case SeriesKind::chief: return "chief";
  }
  return "unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t result = 1;
  while (n % p == 0) {
    n /= p;
    result *= p;
  }
  return result;
}

bool commutes_with_all(const Permutation& x, std::span<const Permutation> elements) {
  return std::all_of(elements.begin(), elements.end(),
                     [&](const Permutation& y) { return x * y == y * x; });
}

bool is_abelian(const PermGroup& group) {
  const auto& gens = group.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
    }
  }
  return true;
}

bool is_normal(const PermGroup& group, const PermGroup& subgroup) {
  if (subgroup.degree() != group.degree() || !group.contains(subgroup)) return false;
  for (const auto& g : group.generators()) {
    if (!normalizes(g, subgroup)) return false;
  }
  return true;
}

bool is_solvable(const PermGroup& group) { return derived_terms(group).back().is_trivial(); }

bool is_nilpotent(const PermGroup& group) { return lower_central_terms(group).back().is_trivial(); }

std::uint64_t exponent(const PermGroup& group) {
  std::uint64_t result = 1;
  for (const auto& cls : conjugacy_classes(group)) {
    result = std::lcm(result, cls.representative.order());
  }
  return result;
}

PermGroup intersection(const PermGroup& a, const PermGroup& b) {
  const PermGroup& small = a.order() <= b.order() ? a : b;
  const PermGroup& large = a.order() <= b.order() ? b : a;
  if (large.contains(small)) return small;
  std::vector<Permutation> common;
  for (const auto& x : small.elements()) {
    if (large.contains(x)) common.push_back(x);
  }
  return subgroup_from_elements(a.degree(), common);
}

std::uint64_t class_size(const PermGroup& group, const Permutation& x) {
  std::unordered_set<Permutation, PermutationHash> seen{x};
  std::vector<Permutation> queue{x};
  for (std::size_t pos = 0; pos < queue.size(); ++pos) {
    for (const auto& g : group.generators()) {
      Permutation y = conjugate(queue[pos], g);
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  return queue.size();
}

PermGroup centralizer(const PermGroup& group, const Permutation& x) {
  require_member(group, x, "centralizer");
  if (group.order() > kExhaustiveCentralizerLimit) return centralizer_orbit_stabilizer(group, x);
  return centralizer_exhaustive(group, x);
}

PermGroup centralizer_exhaustive(const PermGroup& group, const Permutation& x) {
  std::vector<Permutation> members;
  for (const auto& g : group.elements()) {
    if (g * x == x * g) members.push_back(g);
  }
  return subgroup_from_elements(group.degree(), members);
}

PermGroup centralizer_orbit_stabilizer(const PermGroup& group, const Permutation& x) {
  // Orbit of x under conjugation with a transversal: x^{transversal[i]} = orbit[i].
  std::unordered_map<Permutation, std::size_t, PermutationHash> where{{x, 0}};
  std::vector<Permutation> orbit{x};
  std::vector<Permutation> transversal{group.identity()};
  for (std::size_t pos = 0; pos < orbit.size(); ++pos) {
    for (const auto& g : group.generators()) {
      Permutation y = conjugate(orbit[pos], g);
      if (where.emplace(y, orbit.size()).second) {
        orbit.push_back(std::move(y));
        transversal.push_back(transversal[pos] * g);
      }
    }
  }
  // Schreier generators of the stabilizer.
  PermGroup stabilizer = PermGroup::trivial(group.degree());
  for (std::size_t pos = 0; pos < orbit.size(); ++pos) {
    for (const auto& g : group.generators()) {
      std::size_t target = where.at(conjugate(orbit[pos], g));
      Permutation s = transversal[pos] * g * transversal[target].inverse();
      if (!stabilizer.contains(s)) {
        std::vector<Permutation> gens = stabilizer.generators();
        gens.push_back(std::move(s));
        stabilizer = PermGroup(group.degree(), std::move(gens));
      }
    }
  }
  if (stabilizer.order() * orbit.size() != group.order()) {
    throw InternalError("orbit-stabilizer count mismatch in centralizer");
  }
  return stabilizer;
}

PermGroup centralizer_of_set(const PermGroup& group, std::span<const Permutation> elements) {
  PermGroup result = group;
  for (const auto& x : elements) {
    if (result.is_trivial()) break;
    result = centralizer_exhaustive(result, x);
  }
  return result;
}

std::vector<ConjClass> conjugacy_classes(const PermGroup& group) {
  const auto& elems = group.elements();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> class_of(elems.size(), kUnset);
  std::vector<ConjClass> classes;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (class_of[i] != kUnset) continue;
    std::size_t id = classes.size();
    std::vector<std::size_t> members{i};
    class_of[i] = id;
    for (std::size_t pos = 0; pos < members.size(); ++pos) {
      for (const auto& g : group.generators()) {
        std::size_t j = *group.index_of(conjugate(elems[members[pos]], g));
        if (class_of[j] == kUnset) {
          class_of[j] = id;
          members.push_back(j);
        }
      }
    }
    std::sort(members.begin(), members.end());
    ConjClass cls;
    cls.representative = elems[i];
    cls.size = members.size();
    std::vector<Permutation> member_perms;
    member_perms.reserve(members.size());
    for (auto j : members) member_perms.push_back(elems[j]);
    cls.members = std::move(member_perms);
    classes.push_back(std::move(cls));
  }
  return classes;
}

PermGroup normal_closure(const PermGroup& group, std::span<const Permutation> elements) {
  std::vector<Permutation> gens;
  for (const auto& x : elements) {
    require_member(group, x, "normal_closure");
    if (!x.is_identity()) gens.push_back(x);
  }
  PermGroup closure(group.degree(), gens);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto& g : group.generators()) {
      Permutation c = conjugate(gens[i], g);
      if (!closure.contains(c)) {
        gens.push_back(std::move(c));
        closure = PermGroup(group.degree(), gens);
      }
    }
  }
  return closure;
}

PermGroup commutator_subgroup(const PermGroup& group, const PermGroup& a, const PermGroup& b) {
  std::vector<Permutation> comms;
  for (const auto& x : a.generators()) {
    for (const auto& y : b.generators()) {
      Permutation c = commutator(x, y);
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  }
  return normal_closure(group, comms);
}

PermGroup derived_subgroup(const PermGroup& group) {
  return commutator_subgroup(group, group, group);
}

PermGroup center(const PermGroup& group) { return centralizer_of_set(group, group.generators()); }

PermGroup normalizer(const PermGroup& group, const PermGroup& subgroup) {
  require_subgroup(group, subgroup, "normalizer");
  if (is_normal(group, subgroup)) return group;
  PermGroup result = subgroup;
  for (const auto& g : group.elements()) {
    if (result.contains(g)) continue;
    if (normalizes(g, subgroup)) result = join(result, std::span<const Permutation>(&g, 1));
  }
  return result;
}

QuotientMap quotient_group(const PermGroup& group, const PermGroup& normal) {
  if (!is_normal(group, normal)) throw PreconditionError("quotient_group: subgroup is not normal");
  CosetAction action = coset_action(group, normal);
  PermGroup image = action.image;
  return QuotientMap{std::move(action), std::move(image)};
}

PermGroup sylow_subgroup(const PermGroup& group, std::uint64_t p) {
  if (!is_prime(p)) throw PreconditionError("sylow_subgroup: " + std::to_string(p) + " is not prime");
  const std::uint64_t target = p_part(group.order(), p);
  PermGroup sylow = PermGroup::trivial(group.degree());
  while (sylow.order() < target) {
    PermGroup norm = normalizer(group, sylow);
    std::optional<Permutation> extension;
    for (const auto& g : norm.elements()) {
      if (sylow.contains(g)) continue;
      std::uint64_t o = g.order();
      std::uint64_t p_power = p_part(o, p);
      Permutation h = g.pow(static_cast<std::int64_t>(o / p_power));
      if (sylow.contains(h)) continue;
      // Now h P has p-power order in N(P)/P; step down to order exactly p.
      while (!sylow.contains(h.pow(static_cast<std::int64_t>(p)))) h = h.pow(static_cast<std::int64_t>(p));
      extension = h;
      break;
    }
    if (!extension) throw InternalError("sylow_subgroup: normalizer quotient has no p-element");
    sylow = join(sylow, std::span<const Permutation>(&*extension, 1));
  }
  return sylow;
}

SeriesReport series_report(const PermGroup& group, SeriesKind kind) {
  if (kind == SeriesKind::chief) return chief_series(group);
  SeriesReport report;
  report.kind = kind;
  auto derived = derived_terms(group);
  auto lower = lower_central_terms(group);
  report.is_solvable = derived.back().is_trivial();
  report.is_nilpotent = lower.back().is_trivial();
  if (report.is_nilpotent) report.nilpotency_class = lower.size() - 1;

  switch (kind) {
    case SeriesKind::derived:
      report.terms = std::move(derived);
      break;
    case SeriesKind::lower_central:
      report.terms = std::move(lower);
      break;
    case SeriesKind::upper_central: {
      report.terms.push_back(PermGroup::trivial(group.degree()));
      for (;;) {
        const PermGroup& current = report.terms.back();
        std::vector<Permutation> members;
        for (const auto& g : group.elements()) {
          bool central_mod = std::all_of(group.generators().begin(), group.generators().end(),
                                         [&](const Permutation& y) { return current.contains(commutator(g, y)); });
          if (central_mod) members.push_back(g);
        }
        if (members.size() == current.order()) break;
        report.terms.push_back(subgroup_from_elements(group.degree(), members));
      }
      break;
    }
    case SeriesKind::chief:
      break;
  }
  return report;
}

SeriesReport chief_series(const PermGroup& group) {
  if (!is_solvable(group)) throw UnsupportedError("chief_series: group is not solvable");
  SeriesReport report;
  report.kind = SeriesKind::chief;
  report.is_solvable = true;
  auto lower = lower_central_terms(group);
  report.is_nilpotent = lower.back().is_trivial();
  if (report.is_nilpotent) report.nilpotency_class = lower.size() - 1;

  auto classes = conjugacy_classes(group);
  // The series refines the derived series, so G' and every later derived
  // term occur as chief terms.
  auto ceilings = series_report(group, SeriesKind::derived).terms;
  std::reverse(ceilings.begin(), ceilings.end());
  std::size_t ceiling = 0;
  report.terms.push_back(PermGroup::trivial(group.degree()));
  while (report.terms.back().order() < group.order()) {
    const PermGroup& current = report.terms.back();
    while (ceilings[ceiling].order() <= current.order()) ++ceiling;
    const PermGroup& top = ceilings[ceiling];
    std::optional<PermGroup> best;
    for (const auto& cls : classes) {
      const Permutation& g = cls.representative;
      if (current.contains(g) || !top.contains(g)) continue;
      if (!is_prime(order_modulo(g, current))) continue;
      std::vector<Permutation> seeds = current.generators();
      seeds.push_back(g);
      PermGroup candidate = normal_closure(group, seeds);
      if (!best || candidate.order() < best->order()) best = std::move(candidate);
    }
    if (!best) throw InternalError("chief_series: no minimal normal subgroup found");
    report.terms.push_back(std::move(*best));
  }
  for (std::size_t i = 0; i + 1 < report.terms.size(); ++i) {
    const PermGroup& lower_term = report.terms[i];
    bool central = true;
    for (const auto& n : report.terms[i + 1].generators()) {
      for (const auto& g : group.generators()) {
        if (!lower_term.contains(commutator(n, g))) {
          central = false;
          break;
        }
      }
      if (!central) break;
    }
    report.central_factor.push_back(central);
  }
  return report;
}

Permutation direct_product_element(const Permutation& a, const Permutation& b) {
  std::vector<Point> images(a.images());
  const auto shift = static_cast<Point>(a.degree());
  for (auto x : b.images()) images.push_back(x + shift);
  return Permutation::from_images(std::move(images));
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) gens.push_back(direct_product_element(g, Permutation(b.degree())));
  for (const auto& g : b.generators()) gens.push_back(direct_product_element(Permutation(a.degree()), g));
  return PermGroup(a.degree() + b.degree(), std::move(gens));
}

bool is_supplement(const PermGroup& group, const PermGroup& subgroup) {
  require_subgroup(group, subgroup, "is_supplement");
  PermGroup derived = derived_subgroup(group);
  std::uint64_t meet = intersection(subgroup, derived).order();
  return subgroup.order() * derived.order() == group.order() * meet;
}

std::vector<ElementSet> all_subgroups(const PermGroup& group) {
  const CayleyTable& table = group.table();
  const std::size_t n = table.size();
  const bool solvable = is_solvable(group);
  constexpr std::size_t kMaxSubgroups = 200'000;

  struct Entry {
    ElementSet set;
    std::vector<std::uint32_t> gens;
  };
  std::vector<Entry> found;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  ElementSet trivial(n);
  trivial.insert(0);
  found.push_back({trivial, {}});
  seen.insert(trivial);

  for (std::size_t idx = 0; idx < found.size(); ++idx) {
    // Copy: `found` grows inside the loop.
    const ElementSet m_set = found[idx].set;
    const std::vector<std::uint32_t> m_gens = found[idx].gens;
    const auto m_members = m_set.members();
    ElementSet covered = m_set;
    for (std::uint32_t g = 0; g < n; ++g) {
      if (covered.contains(g)) continue;
      ElementSet k_set(n);
      if (solvable) {
        bool norm = std::all_of(m_gens.begin(), m_gens.end(),
                                [&](std::uint32_t m) { return m_set.contains(table.conj(m, g)); });
        if (!norm) continue;
        std::uint32_t power = g;
        std::uint64_t k = 1;
        while (!m_set.contains(power)) {
          power = table.mul(power, g);
          ++k;
        }
        if (!is_prime(k)) continue;
        std::uint32_t gi = 0;  // g^i, starting from the identity
        for (std::uint64_t i = 0; i < k; ++i) {
          for (auto m : m_members) k_set.insert(table.mul(m, gi));
          gi = table.mul(gi, g);
        }
      } else {
        std::vector<std::uint32_t> gens = m_gens;
        gens.push_back(g);
        k_set = table.closure(gens);
      }
      if (solvable) {
        for (auto x : k_set.members()) covered.insert(x);
      }
      if (seen.insert(k_set).second) {
        std::vector<std::uint32_t> gens = m_gens;
        gens.push_back(g);
        found.push_back({std::move(k_set), std::move(gens)});
        if (found.size() > kMaxSubgroups) throw CapacityError("all_subgroups: too many subgroups");
      }
    }
  }
  std::vector<ElementSet> result;
  result.reserve(found.size());
  for (auto& e : found) result.push_back(std::move(e.set));
  return result;
}

}  // namespace acg
