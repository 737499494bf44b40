#include "acg/anticentral.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include "acg/errors.hpp"

namespace acg {

namespace {

constexpr std::uint64_t kSampleSeed = 0x5eedac9ULL;
constexpr std::size_t kSampleSize = 48;

void require_anticentral(const GroupAnalysis& g, std::uint32_t a, const char* what) {
  if (!is_anticentral(g, a)) {
    throw PreconditionError(std::string(what) + ": " + g.describe(a) + " is not anticentral");
  }
}

void require_prime(std::uint64_t p, const char* what) {
  if (!is_prime(p)) throw PreconditionError(std::string(what) + ": " + std::to_string(p) + " is not prime");
}

ElementSet require_subgroup(const GroupAnalysis& g, const PermGroup& h, const char* what) {
  if (h.degree() != g.group().degree() || !g.group().contains(h)) {
    throw PreconditionError(std::string(what) + ": subgroup is not contained in the group");
  }
  return g.set_of(h);
}

bool is_normal_set(const GroupAnalysis& g, const ElementSet& h) { return g.normalizer(h).count() == g.order(); }

bool is_supplement_set(const GroupAnalysis& g, const ElementSet& h) {
  const auto& derived = g.derived_set();
  return h.count() * derived.count() == g.order() * h.intersection_count(derived);
}

// All conjugates of `subgroup` under the group generated by `within`.
std::vector<ElementSet> conjugates_under(const GroupAnalysis& g, const ElementSet& subgroup,
                                         const ElementSet& within) {
  auto gens = g.generators_of(within);
  std::vector<ElementSet> orbit{subgroup};
  std::unordered_set<ElementSet, ElementSetHash> seen{subgroup};
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (auto x : gens) {
      auto c = g.conjugate(orbit[i], x);
      if (seen.insert(c).second) orbit.push_back(std::move(c));
    }
  }
  return orbit;
}

std::vector<ElementSet> fixed_by(const GroupAnalysis& g, const std::vector<ElementSet>& sets, std::uint32_t a) {
  std::vector<ElementSet> out;
  for (const auto& s : sets) {
    if (g.conjugate(s, a) == s) out.push_back(s);
  }
  return out;
}

std::vector<ElementSet> sylows_fixed_by(const GroupAnalysis& g, const ElementSet& within, std::uint32_t a,
                                        std::uint64_t p) {
  ElementSet p0 = g.set_of(sylow_subgroup(g.subgroup(within), p));
  return fixed_by(g, conjugates_under(g, p0, within), a);
}

std::string describe_sets(const GroupAnalysis& g, const std::vector<ElementSet>& sets) {
  std::string out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i > 0) out += "; ";
    out += g.describe(sets[i]);
  }
  return out.empty() ? "none" : out;
}

// Unique a-invariant Sylow p-subgroup of `within`; throws TheoremViolation
// otherwise.
ElementSet unique_fixed_sylow(const GroupAnalysis& g, const ElementSet& within, std::uint32_t a,
                              std::uint64_t p) {
  auto fixed = sylows_fixed_by(g, within, a, p);
  if (fixed.size() != 1) {
    throw TheoremViolation("an anticentral element fixes exactly one Sylow " + std::to_string(p) + "-subgroup",
                           "fixed Sylow subgroups: " + describe_sets(g, fixed));
  }
  return fixed.front();
}

std::string first_difference(const GroupAnalysis& g, const ElementSet& x, const ElementSet& y) {
  for (std::uint32_t i = 0; i < x.universe(); ++i) {
    if (x.contains(i) != y.contains(i)) return g.describe(i);
  }
  return "()";
}

std::vector<std::uint32_t> sample_elements(const GroupAnalysis& g, std::size_t count) {
  std::mt19937_64 rng(kSampleSeed);
  std::uniform_int_distribution<std::uint32_t> dist(0, static_cast<std::uint32_t>(g.order() - 1));
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(dist(rng));
  return out;
}

ElementSet c_chain_limit(const GroupAnalysis& g, std::uint32_t a, std::vector<ElementSet>* levels) {
  const auto& t = g.table();
  ElementSet current(g.order());
  current.insert(0);
  if (levels != nullptr) levels->push_back(current);
  for (;;) {
    ElementSet next(g.order());
    for (std::uint32_t x = 0; x < g.order(); ++x) {
      if (current.contains(t.comm(a, x))) next.insert(x);
    }
    if (next == current) return current;
    current = std::move(next);
    if (levels != nullptr) levels->push_back(current);
  }
}

// Product of the sets, in the given order.
ElementSet product_of(const GroupAnalysis& g, const std::vector<const ElementSet*>& factors) {
  ElementSet out(g.order());
  out.insert(0);
  for (const auto* f : factors) out = g.product(out, *f);
  return out;
}

}  // namespace

DecomposedElement decompose(const Permutation& a, std::uint64_t p) {
  require_prime(p, "decompose");
  const std::uint64_t n = a.order();
  const std::uint64_t pe = p_part(n, p);
  const std::uint64_t m = n / pe;
  // u*m + v*pe = 1
  std::int64_t old_r = static_cast<std::int64_t>(m), r = static_cast<std::int64_t>(pe);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  const std::int64_t u = old_s;
  const auto nn = static_cast<std::int64_t>(n);
  std::int64_t x_exp = ((u * static_cast<std::int64_t>(m)) % nn + nn) % nn;
  Permutation x = a.pow(x_exp);
  Permutation k = a * x.inverse();
  return {a, x, k};
}

bool is_anticentral(const PermGroup& group, const Permutation& a) {
  if (a.degree() != group.degree() || !group.contains(a)) {
    throw PreconditionError(a.to_string() + " is not an element of the group");
  }
  const std::uint64_t index = group.order() / derived_subgroup(group).order();
  return class_size(group, a) * index == group.order();
}

bool is_anticentral(const GroupAnalysis& group, std::uint32_t a) {
  return group.centralizer_order(a) == group.abelian_index();
}

AnticentralCertificate equivalence_report(const GroupAnalysis& g, const Permutation& element, bool with_characters) {
  const std::uint32_t a = g.index(element);
  const auto& t = g.table();
  const auto& derived = g.derived_set();
  AnticentralCertificate cert;
  cert.element = element;
  cert.centralizer_order = g.centralizer(a).count();
  cert.commutator_index = g.abelian_index();
  if (cert.centralizer_order < cert.commutator_index) {
    throw TheoremViolation("|C_G(a)| >= |G:G'|", element.to_string());
  }
  cert.cond_i = cert.centralizer_order == cert.commutator_index;

  ElementSet cls(g.order());
  ElementSet coset(g.order());
  ElementSet comms(g.order());
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    cls.insert(t.conj(a, x));
    comms.insert(t.comm(a, x));
    if (derived.contains(x)) coset.insert(t.mul(a, x));
  }
  cert.cond_ii = cls == coset;
  if (!cert.cond_ii) {
    for (std::uint32_t x = 0; x < g.order(); ++x) {
      if (cls.contains(x) != coset.contains(x)) {
        cert.class_coset_witness = g.element(x);
        break;
      }
    }
  }
  cert.cond_iii = comms == derived;

  if (with_characters) {
    const auto& table = g.character_table();
    std::size_t k = table.class_of(element);
    bool vanish = true;
    for (std::size_t c = 0; c < table.character_count(); ++c) {
      if (table.degrees[c] > 1 && !table.irreducibles[c][k].is_zero()) vanish = false;
    }
    cert.cond_iv = vanish;
  }

  bool agree = cert.cond_i == cert.cond_ii && cert.cond_i == cert.cond_iii &&
               (!cert.cond_iv || *cert.cond_iv == cert.cond_i);
  if (!agree) {
    std::ostringstream w;
    w << element.to_string() << " (i)=" << cert.cond_i << " (ii)=" << cert.cond_ii << " (iii)=" << cert.cond_iii;
    if (cert.cond_iv) w << " (iv)=" << *cert.cond_iv;
    throw TheoremViolation("the four anticentrality conditions agree", w.str());
  }
  return cert;
}

std::vector<ConjClass> find_anticentral_classes(const GroupAnalysis& g) {
  std::vector<ConjClass> out;
  for (const auto& cls : g.classes()) {
    if (cls.size * g.abelian_index() == g.order()) out.push_back(cls);
  }
  return out;
}

CChain c_chain(const GroupAnalysis& g, const Permutation& element) {
  const std::uint32_t a = g.index(element);
  CChain chain{element, {}, PermGroup(), false};
  ElementSet limit = c_chain_limit(g, a, &chain.levels);
  chain.limit = g.subgroup(limit);
  chain.limit_is_subgroup = g.closure(limit.members()) == limit;
  return chain;
}

VerificationReport carter_verify(const GroupAnalysis& g, const Permutation& element) {
  const std::uint32_t a = g.index(element);
  require_anticentral(g, a, "carter_verify");
  VerificationReport report;
  report.suite = "carter";
  const ElementSet d = c_chain_limit(g, a, nullptr);
  const std::string d_text = g.describe(d);
  const bool closed = g.closure(d.members()) == d;
  report.check("carter.subgroup", "C^inf(a) is a subgroup", closed, [&] { return d_text; });
  if (!closed) return report;

  report.check("carter.i", "D = C^inf(a) is nilpotent and N_G(D) = D",
               g.is_nilpotent(d) && g.normalizer(d) == d, [&] { return d_text; });
  report.check("carter.ii", "DG' = G", is_supplement_set(g, d), [&] { return d_text; });

  // Candidate subgroups through a for claims (iii)-(v).
  std::vector<ElementSet> candidates;
  std::string regime;
  if (g.order() <= kExhaustiveLatticeLimit) {
    for (const auto& h : g.subgroups()) {
      if (h.contains(a)) candidates.push_back(h);
    }
    regime = "exhaustive lattice, " + std::to_string(candidates.size()) + " subgroups through a";
  } else {
    auto xs = sample_elements(g, 2 * kSampleSize);
    candidates.push_back(d);
    candidates.push_back(g.full());
    for (std::size_t i = 0; i < kSampleSize; ++i) {
      candidates.push_back(g.closure({a, xs[i]}));
      candidates.push_back(g.closure({a, xs[i], xs[kSampleSize + i]}));
    }
    regime = "sampled, " + std::to_string(candidates.size()) + " generated subgroups through a";
  }

  std::optional<std::string> w3;
  std::optional<std::string> w4;
  std::optional<std::string> w5;
  for (const auto& h : candidates) {
    const bool supplement = is_supplement_set(g, h);
    const bool inside_d = h.is_subset_of(d);
    if (supplement && !d.is_subset_of(h) && !w3) w3 = g.describe(h);
    if (!inside_d && g.is_nilpotent(h) && !w4) w4 = g.describe(h);
    if (supplement && !(h == d) && g.is_nilpotent(h) && !w5) w5 = g.describe(h);
  }
  report.check("carter.iii", "every supplement of G' containing a contains D", !w3, [&] { return *w3; }, regime);
  report.check("carter.iv", "every nilpotent subgroup containing a lies in D", !w4, [&] { return *w4; }, regime);
  report.check("carter.v", "D is the only nilpotent supplement of G' containing a", !w5, [&] { return *w5; },
               regime);

  if (g.order() <= kExhaustiveLatticeLimit && g.solvable()) {
    // Carter subgroups of a solvable group are conjugate.
    std::optional<std::string> witness;
    for (const auto& h : g.subgroups()) {
      if (h.count() != d.count() || !g.is_nilpotent(h) || !(g.normalizer(h) == h)) continue;
      bool conjugate = false;
      for (std::uint32_t x = 0; x < g.order() && !conjugate; ++x) conjugate = g.conjugate(d, x) == h;
      if (!conjugate) {
        witness = g.describe(h);
        break;
      }
    }
    report.check("carter.conjugacy", "every self-normalizing nilpotent subgroup is conjugate to D", !witness,
                 [&] { return *witness; });
  }
  return report;
}

std::size_t fixed_point_analysis(const GSet& omega, const Permutation& a) {
  const PermGroup& group = omega.acting_group();
  if (!is_anticentral(group, a)) throw PreconditionError(a.to_string() + " is not anticentral");
  if (omega.size() == 0) throw PreconditionError("fixed_point_analysis: empty G-set");
  PermGroup derived = derived_subgroup(group);
  if (omega.orbit_under(0, derived.generators()).size() != omega.size()) {
    throw PreconditionError("fixed_point_analysis: G' is not transitive on the G-set");
  }
  auto fixed = omega.fixed_points(a);
  if (fixed.size() != 1) {
    std::string w = a.to_string() + " fixes " + std::to_string(fixed.size()) + " points";
    throw TheoremViolation("an anticentral element fixes exactly one point of a G'-transitive G-set", w);
  }
  return fixed.front();
}

VerificationReport supplement_properties(const GroupAnalysis& g, const PermGroup& supplement,
                                         const Permutation& element) {
  const std::uint32_t a = g.index(element);
  const ElementSet h = require_subgroup(g, supplement, "supplement_properties");
  if (!h.contains(a)) throw PreconditionError("supplement_properties: a is not in H");
  if (!is_supplement_set(g, h)) throw PreconditionError("supplement_properties: HG' != G");
  require_anticentral(g, a, "supplement_properties");
  const auto& t = g.table();
  VerificationReport report;
  report.suite = "supplements";
  const std::string h_text = g.describe(h);

  ElementSet comms(g.order());
  for (auto x : h.members()) comms.insert(t.comm(a, x));
  const ElementSet h_derived = g.derived_of(h);
  const ElementSet h_meet = h & g.derived_set();
  report.check("suppl.commutators", "[a,H] = H' = H & G'", comms == h_derived && h_derived == h_meet,
               [&] { return h_text + " differing at " + first_difference(g, comms, h_derived == comms ? h_meet : h_derived); });
  report.check("suppl.anticentral_in_h", "a is anticentral in H",
               g.centralizer_in(h, a).count() * h_derived.count() == h.count(), [&] { return h_text; });

  ElementSet conjugators(g.order());
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    if (h.contains(t.conj(a, t.inv(x)))) conjugators.insert(x);
  }
  report.check("suppl.conjugators", "{x : a in H^x} = H", conjugators == h,
               [&] { return first_difference(g, conjugators, h); });

  std::size_t containing = 0;
  for (const auto& c : conjugates_under(g, h, g.full())) containing += c.contains(a) ? 1 : 0;
  report.check("suppl.unique_conjugate", "a lies in exactly one conjugate of H", containing == 1,
               [&] { return std::to_string(containing) + " conjugates of " + h_text + " contain a"; });

  const ElementSet cent = g.centralizer(a);
  report.check("suppl.centralizer", "C_G(a) <= H", cent.is_subset_of(h), [&] { return g.describe(cent); });
  const ElementSet norm = g.normalizer(h);
  report.check("suppl.self_normalizing", "N_G(H) = H", norm == h, [&] { return first_difference(g, norm, h); });

  std::vector<std::uint32_t> xs;
  std::string regime;
  if (g.order() <= kExhaustiveLatticeLimit) {
    for (std::uint32_t x = 0; x < g.order(); ++x) xs.push_back(x);
    regime = "exhaustive";
  } else {
    xs = sample_elements(g, kSampleSize);
    regime = "sampled " + std::to_string(xs.size()) + " elements";
  }
  auto gens = g.generators_of(h);
  std::optional<std::uint32_t> bad;
  for (auto x : xs) {
    std::vector<std::uint32_t> both(gens);
    for (auto y : gens) both.push_back(t.conj(y, x));
    if (!g.closure(both).contains(x)) {
      bad = x;
      break;
    }
  }
  report.check("suppl.abnormal", "x in <H, H^x> for all x", !bad, [&] { return g.describe(*bad); }, regime);
  return report;
}

PermGroup invariant_sylow(const GroupAnalysis& g, const PermGroup& normal, const Permutation& element,
                          std::uint64_t p) {
  const std::uint32_t a = g.index(element);
  require_prime(p, "invariant_sylow");
  const ElementSet n = require_subgroup(g, normal, "invariant_sylow");
  if (!is_normal_set(g, n)) throw PreconditionError("invariant_sylow: N is not normal");
  require_anticentral(g, a, "invariant_sylow");
  return g.subgroup(unique_fixed_sylow(g, n, a, p));
}

HallSystem hall_system(const GroupAnalysis& g, const PermGroup& normal, const Permutation& element) {
  const std::uint32_t a = g.index(element);
  const ElementSet n = require_subgroup(g, normal, "hall_system");
  if (!is_normal_set(g, n)) throw PreconditionError("hall_system: N is not normal");
  if (!is_solvable(normal)) throw PreconditionError("hall_system: N is not solvable");
  require_anticentral(g, a, "hall_system");

  const std::uint64_t order = n.count();
  const auto primes = prime_divisors(order);
  std::vector<ElementSet> sylows;
  for (auto p : primes) sylows.push_back(unique_fixed_sylow(g, n, a, p));

  const std::size_t subsets = std::size_t{1} << primes.size();
  std::vector<ElementSet> members(subsets);
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    std::vector<const ElementSet*> factors;
    std::uint64_t expected = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (mask & (std::size_t{1} << i)) {
        factors.push_back(&sylows[i]);
        expected *= p_part(order, primes[i]);
      }
    }
    members[mask] = product_of(g, factors);
    if (members[mask].count() != expected || !(g.closure(members[mask].members()) == members[mask])) {
      throw TheoremViolation("the product of the a-invariant Sylow subgroups is a Hall subgroup",
                             "prime set mask " + std::to_string(mask));
    }
    if (!(g.conjugate(members[mask], a) == members[mask])) {
      throw TheoremViolation("each member of the Hall system is a-invariant", g.describe(members[mask]));
    }
  }

  // Pairwise permutability: HK is a subgroup of order |H||K|/|H & K|.
  for (std::size_t x = 0; x < subsets; ++x) {
    for (std::size_t y = x + 1; y < subsets; ++y) {
      ElementSet hk = g.product(members[x], members[y]);
      std::size_t expected = members[x].count() * members[y].count() / members[x].intersection_count(members[y]);
      if (hk.count() != expected || !(g.closure(hk.members()) == hk)) {
        throw TheoremViolation("members of a Hall system permute",
                               g.describe(members[x]) + " and " + g.describe(members[y]));
      }
    }
  }

  // The complement basis route: the a-invariant Hall p'-subgroup is unique,
  // and every member is the intersection of the complements it avoids.
  const std::size_t all = subsets - 1;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::size_t complement = all & ~(std::size_t{1} << i);
    auto fixed = fixed_by(g, conjugates_under(g, members[complement], n), a);
    if (fixed.size() != 1) {
      throw TheoremViolation("an anticentral element fixes exactly one Hall " + std::to_string(primes[i]) +
                                 "'-subgroup",
                             "fixed: " + describe_sets(g, fixed));
    }
  }
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    ElementSet meet = n;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (!(mask & (std::size_t{1} << i))) meet = meet & members[all & ~(std::size_t{1} << i)];
    }
    if (!(meet == members[mask])) {
      throw TheoremViolation("Hall subgroups are intersections of the complement basis", g.describe(members[mask]));
    }
  }

  HallSystem system{normal, {}};
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    std::vector<std::uint64_t> pi;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (mask & (std::size_t{1} << i)) pi.push_back(primes[i]);
    }
    system.subgroups.emplace(std::move(pi), g.subgroup(members[mask]));
  }
  return system;
}

VerificationReport sylow_normalizer_identity(const GroupAnalysis& g, const Permutation& element) {
  const std::uint32_t a = g.index(element);
  require_anticentral(g, a, "sylow_normalizer_identity");
  VerificationReport report;
  report.suite = "sylow-hall";
  const ElementSet d = c_chain_limit(g, a, nullptr);
  ElementSet meet = g.full();
  for (auto p : prime_divisors(g.order())) {
    auto fixed = sylows_fixed_by(g, g.full(), a, p);
    report.check("hall.unique_sylow_" + std::to_string(p), "a fixes exactly one Sylow p-subgroup of G",
                 fixed.size() == 1, [&] { return describe_sets(g, fixed); }, "p = " + std::to_string(p));
    for (const auto& s : fixed) meet = meet & g.normalizer(s);
  }
  report.check("sylownorm.identity", "C^inf(a) = intersection of N_G(P) over a-invariant Sylow P", meet == d,
               [&] { return first_difference(g, meet, d); });

  if (g.solvable()) {
    HallSystem system = hall_system(g, g.group(), element);
    ElementSet system_normalizer = g.full();
    for (const auto& [pi, h] : system.subgroups) system_normalizer = system_normalizer & g.normalizer(g.set_of(h));
    report.check("hallsys.normalizer", "the a-invariant Hall system has system normalizer C^inf(a)",
                 system_normalizer == d, [&] { return first_difference(g, system_normalizer, d); });
  }
  return report;
}

VerificationReport cyclic_sylow_complement_check(const GroupAnalysis& g, const Permutation& element,
                                                 const PermGroup& normal, std::uint64_t p) {
  const std::uint32_t a = g.index(element);
  require_prime(p, "cyclic_sylow_complement_check");
  const ElementSet n = require_subgroup(g, normal, "cyclic_sylow_complement_check");
  if (!is_normal_set(g, n)) throw PreconditionError("cyclic_sylow_complement_check: N is not normal");
  if (!n.is_subset_of(g.derived_set())) throw PreconditionError("cyclic_sylow_complement_check: N is not in G'");
  require_anticentral(g, a, "cyclic_sylow_complement_check");
  const std::uint64_t pn = p_part(n.count(), p);
  bool cyclic = false;
  for (auto x : n.members()) cyclic = cyclic || g.table().order_of(x) == pn;
  if (!cyclic) throw PreconditionError("cyclic_sylow_complement_check: Sylow subgroup of N is not cyclic");

  VerificationReport report;
  report.suite = "p-complement";
  const ElementSet complement = g.p_prime_elements(n, p);
  const bool closed = g.closure(complement.members()) == complement;
  report.check("pcomp.subgroup", "the p'-elements of N form a subgroup", closed,
               [&] { return g.describe(complement); });
  report.check("pcomp.index", "|N : K| = |N|_p", complement.count() * pn == n.count(),
               [&] { return std::to_string(complement.count()); });
  report.check("pcomp.normal", "K is normal in G", closed && is_normal_set(g, complement),
               [&] { return g.describe(complement); });
  return report;
}

NormalSylowConditions normal_sylow_conditions(const GroupAnalysis& g, std::uint64_t p, const Permutation& element,
                                              const std::optional<PermGroup>& complement) {
  const std::uint32_t a = g.index(element);
  require_prime(p, "normal_sylow_conditions");
  const ElementSet sylow = g.set_of(sylow_subgroup(g.group(), p));
  if (!is_normal_set(g, sylow)) throw PreconditionError("normal_sylow_conditions: Sylow subgroup is not normal");
  DecomposedElement parts = decompose(element, p);
  const std::uint32_t x = g.index(parts.p_part);
  const std::uint32_t k = g.index(parts.p_prime_part);
  const std::uint64_t k_order = g.order() / sylow.count();

  ElementSet kset(g.order());
  if (complement) {
    kset = require_subgroup(g, *complement, "normal_sylow_conditions");
    if (kset.count() != k_order || kset.intersection_count(sylow) != 1) {
      throw PreconditionError("normal_sylow_conditions: K is not a complement to P");
    }
    if (!kset.contains(k)) throw PreconditionError("normal_sylow_conditions: K does not contain a_p'");
  } else {
    // Every p'-subgroup lies in a complement, so one greedy pass suffices.
    std::vector<std::uint32_t> gens{k};
    kset = g.closure(gens);
    for (std::uint32_t y = 0; y < g.order() && kset.count() < k_order; ++y) {
      if (kset.contains(y) || g.table().order_of(y) % p == 0) continue;
      gens.push_back(y);
      ElementSet next = g.closure(gens);
      if (next.count() % p != 0) {
        kset = std::move(next);
      } else {
        gens.pop_back();
      }
    }
    if (kset.count() != k_order) {
      throw TheoremViolation("a normal Sylow subgroup has a complement containing a_p'", g.describe(kset));
    }
  }

  NormalSylowConditions c{parts, g.subgroup(sylow), g.subgroup(kset)};
  c.k_anticentral_in_k = g.centralizer_in(kset, k).count() * g.derived_of(kset).count() == kset.count();
  const ElementSet u = g.centralizer_in(sylow, k);
  const ElementSet u_derived = g.derived_of(u);
  c.x_anticentral_in_cpk = u.contains(x) && g.centralizer_in(u, x).count() * u_derived.count() == u.count();
  c.cpk_meet_derived = (u & g.derived_of(sylow)) == u_derived;
  ElementSet cpk_full = sylow;
  for (auto y : g.generators_of(kset)) cpk_full = cpk_full & g.centralizer(y);
  c.cpk_equals_cpk_full = cpk_full == u;
  c.anticentral = is_anticentral(g, a);
  return c;
}

VerificationReport normal_sylow_criteria(const GroupAnalysis& g, std::uint64_t p, const Permutation& a,
                                         const std::optional<PermGroup>& complement) {
  auto c = normal_sylow_conditions(g, p, a, complement);
  VerificationReport report;
  report.suite = "normal-sylow";
  std::ostringstream detail;
  detail << "p=" << p << " (1)=" << c.k_anticentral_in_k << " (2)=" << c.x_anticentral_in_cpk
         << " (3)=" << c.cpk_meet_derived << " (4)=" << c.cpk_equals_cpk_full << " anticentral=" << c.anticentral;
  report.check("normal_sylow.equivalence", "conditions (1)-(4) hold iff a is anticentral", c.all() == c.anticentral,
               [&] {
                 std::string w = a.to_string() + " with K = <";
                 for (const auto& y : c.complement.generators()) w += y.to_string() + " ";
                 return w + ">";
               },
               detail.str());
  return report;
}

VerificationReport sylow_meet_supplement(const GroupAnalysis& g, const PermGroup& supplement,
                                         const Permutation& element, std::uint64_t p) {
  const std::uint32_t a = g.index(element);
  require_prime(p, "sylow_meet_supplement");
  const ElementSet h = require_subgroup(g, supplement, "sylow_meet_supplement");
  if (!h.contains(a)) throw PreconditionError("sylow_meet_supplement: a is not in H");
  if (!is_supplement_set(g, h)) throw PreconditionError("sylow_meet_supplement: HG' != G");
  require_anticentral(g, a, "sylow_meet_supplement");

  VerificationReport report;
  report.suite = "sylow-hall";
  auto in_g = sylows_fixed_by(g, g.full(), a, p);
  auto in_h = sylows_fixed_by(g, h, a, p);
  const std::string detail = "p = " + std::to_string(p);
  report.check("meet.unique", "a fixes exactly one Sylow p-subgroup of G and of H",
               in_g.size() == 1 && in_h.size() == 1,
               [&] { return "G: " + describe_sets(g, in_g) + " | H: " + describe_sets(g, in_h); }, detail);
  if (in_g.size() == 1 && in_h.size() == 1) {
    const ElementSet meet = in_g.front() & h;
    report.check("meet.identity", "P & H = S", meet == in_h.front(),
                 [&] { return "P = " + g.describe(in_g.front()) + ", S = " + g.describe(in_h.front()); }, detail);
  }
  return report;
}

VerificationReport invariant_class_bijection(const GroupAnalysis& g, const Permutation& element) {
  const std::uint32_t a = g.index(element);
  require_anticentral(g, a, "invariant_class_bijection");
  const auto& t = g.table();
  VerificationReport report;
  report.suite = "invcls";
  const ElementSet d = c_chain_limit(g, a, nullptr);
  const ElementSet zd = g.center_of(d);
  const ElementSet cent = g.centralizer(a);
  const auto derived_gens = g.generators_of(g.derived_set());

  // G-classes that are single G'-classes.
  std::vector<std::uint32_t> invariant;
  for (std::uint32_t k = 0; k < g.classes().size(); ++k) {
    const auto& cls = g.classes()[k];
    std::uint32_t rep = g.index(cls.representative);
    std::vector<std::uint32_t> orbit{rep};
    ElementSet seen(g.order());
    seen.insert(rep);
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (auto y : derived_gens) {
        auto c = t.conj(orbit[i], y);
        if (!seen.contains(c)) {
          seen.insert(c);
          orbit.push_back(c);
        }
      }
    }
    if (orbit.size() == cls.size) invariant.push_back(k);
  }

  std::vector<std::uint32_t> image;
  for (auto x : zd.members()) image.push_back(g.class_of(x));
  std::vector<std::uint32_t> sorted_image(image);
  std::sort(sorted_image.begin(), sorted_image.end());
  const bool injective = std::adjacent_find(sorted_image.begin(), sorted_image.end()) == sorted_image.end();
  report.check("invcls.bijection", "x -> x^G is a bijection from Z(D) to the G-invariant G'-classes",
               injective && sorted_image == invariant,
               [&] {
                 return "|Z(D)| = " + std::to_string(zd.count()) + ", invariant classes = " +
                        std::to_string(invariant.size());
               },
               std::to_string(invariant.size()) + " classes");

  std::optional<std::uint32_t> bad;
  for (auto k : invariant) {
    std::size_t fixed = 0;
    for (const auto& m : *g.classes()[k].members) fixed += cent.contains(g.index(m)) ? 1 : 0;
    if (fixed != 1) {
      bad = k;
      break;
    }
  }
  report.check("invcls.unique_fixed", "a fixes exactly one element of each G-invariant G'-class", !bad,
               [&] { return g.classes()[*bad].representative.to_string(); });
  return report;
}

ChiefFactorConditions chief_factor_conditions(const GroupAnalysis& g, const Permutation& element) {
  const std::uint32_t a = g.index(element);
  if (!g.solvable()) throw UnsupportedError("chief_factor_criterion: group is not solvable");
  const auto& t = g.table();
  const auto& series = g.chief();
  const auto& quotients = g.chief_quotients();
  std::vector<ElementSet> terms;
  for (const auto& q : quotients) terms.push_back(g.set_of(q.kernel));

  ChiefFactorConditions c;
  c.anticentral = is_anticentral(g, a);
  // Preimage of C_{G/K}(aK) is {x : [a,x] in K}.
  auto centralizer_mod = [&](std::size_t i) {
    return quotients[i].centralizer_order[quotients[i].coset[a]] * terms[i].count();
  };
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    const ElementSet& lower = terms[i];
    const ElementSet& upper = terms[i + 1];
    const std::string factor = "factor " + std::to_string(i) + " of order " +
                               std::to_string(upper.count() / lower.count());
    std::uint64_t preimage = 0;
    for (std::uint32_t x = 0; x < g.order(); ++x) preimage += lower.contains(t.comm(a, x)) ? 1 : 0;
    if (preimage != centralizer_mod(i)) c.quotient_consistent = false;

    if (!series.central_factor[i]) {
      for (auto n : upper.members()) {
        if (!lower.contains(n) && lower.contains(t.comm(n, a))) {
          c.fixed_point_free = false;
          if (!c.offending_factor) c.offending_factor = factor + " (fixed coset of " + g.describe(n) + ")";
          break;
        }
      }
    } else if (upper.is_subset_of(g.derived_set())) {
      if (!(centralizer_mod(i) < centralizer_mod(i + 1))) {
        c.centralizer_growth = false;
        if (!c.offending_factor) c.offending_factor = factor + " (no centralizer growth)";
      }
    }
  }
  return c;
}

VerificationReport chief_factor_criterion(const GroupAnalysis& g, const Permutation& a) {
  auto c = chief_factor_conditions(g, a);
  VerificationReport report;
  report.suite = "charaz";
  std::ostringstream detail;
  detail << "fpf=" << c.fixed_point_free << " growth=" << c.centralizer_growth << " anticentral=" << c.anticentral;
  report.check("charaz.equivalence", "chief factor conditions hold iff a is anticentral",
               (c.fixed_point_free && c.centralizer_growth) == c.anticentral,
               [&] { return a.to_string() + (c.offending_factor ? " at " + *c.offending_factor : ""); },
               detail.str());
  report.check("charaz.quotient", "quotient centralizer orders match preimage counts", c.quotient_consistent,
               [&] { return a.to_string(); });
  return report;
}

VerificationReport solvability_contrapositive(const GroupAnalysis& g) {
  VerificationReport report;
  report.suite = "solvability";
  auto classes = find_anticentral_classes(g);
  const bool solvable = g.solvable();
  report.check("solvability.contrapositive", "a group with anticentral elements is solvable",
               classes.empty() || solvable,
               [&] { return classes.front().representative.to_string(); },
               "solvable=" + std::string(solvable ? "true" : "false") + " anticentral classes=" +
                   std::to_string(classes.size()));
  return report;
}

bool derived_is_minimal_normal(const GroupAnalysis& g) {
  const ElementSet& d = g.derived_set();
  if (d.count() == 1) return false;
  for (const auto& c : g.classes()) {
    const std::uint32_t x = g.index(c.representative);
    if (x == 0 || !d.contains(x)) continue;
    if (normal_closure(g.group(), std::vector<Permutation>{c.representative}).order() != d.count()) return false;
  }
  return true;
}

VerificationReport minimal_derived_dichotomy(const GroupAnalysis& g, bool with_characters) {
  if (!g.solvable() || !derived_is_minimal_normal(g)) {
    throw PreconditionError("minimal_derived_dichotomy: G must be solvable with G' minimal normal");
  }
  VerificationReport report;
  report.suite = "solvability";
  const ElementSet& d = g.derived_set();
  const ElementSet z = g.center_of(g.full());
  report.check("dichotomy.exists", "a solvable group with G' minimal normal has anticentral elements",
               !find_anticentral_classes(g).empty(), [] { return std::string("no anticentral class"); });

  std::vector<std::uint32_t> reps;
  for (const auto& c : g.classes()) reps.push_back(g.index(c.representative));

  if (d.is_subset_of(z)) {
    const std::uint64_t p = d.count();
    report.check("dichotomy.central.prime", "G' <= Z(G) has prime order", is_prime(p),
                 [&] { return std::to_string(p); }, "case G' <= Z(G)");
    std::optional<std::uint32_t> bad_power, bad_element;
    for (std::uint32_t x = 0; x < g.order() && is_prime(p); ++x) {
      if (!z.contains(g.index(g.element(x).pow(static_cast<std::int64_t>(p))))) {
        bad_power = x;
        break;
      }
    }
    report.check("dichotomy.central.quotient", "G/Z(G) is elementary abelian", !bad_power,
                 [&] { return g.describe(*bad_power); });
    for (auto x : reps) {
      if (!z.contains(x) && !is_anticentral(g, x)) {
        bad_element = x;
        break;
      }
    }
    report.check("dichotomy.central.anticentral", "every noncentral element is anticentral", !bad_element,
                 [&] { return g.describe(*bad_element); });
  } else if ((d & z).count() == 1) {
    ElementSet cd = g.full();
    for (auto x : g.generators_of(d)) cd = cd & g.centralizer(x);
    report.check("dichotomy.frobenius.kernel", "C_G(G') = Z(G) x G'", cd.count() == z.count() * d.count(),
                 [&] { return g.describe(cd); }, "case G' & Z(G) = 1");
    std::optional<std::string> bad;
    for (auto x : reps) {
      if (cd.contains(x) || bad) continue;
      const ElementSet c = g.centralizer(x);
      if (!is_anticentral(g, x)) {
        bad = g.describe(x) + " not anticentral";
      } else if ((c & d).count() != 1 || c.count() * d.count() != g.order()) {
        bad = g.describe(x) + " centralizer is not a complement of G'";
      } else if ((c & cd) != z) {
        bad = g.describe(x) + " does not act fixed point freely on the kernel";
      } else {
        const auto zgens = g.generators_of(z);
        bool cyclic = false;
        for (auto y : c.members()) {
          auto gens = zgens;
          gens.push_back(y);
          if (g.closure(gens).count() == c.count()) {
            cyclic = true;
            break;
          }
        }
        if (!cyclic) bad = g.describe(x) + " has C_G(g)/Z(G) not cyclic";
      }
    }
    report.check("dichotomy.frobenius.complements",
                 "elements outside C_G(G') are anticentral with C_G(g)/Z(G) a cyclic Frobenius complement", !bad,
                 [&] { return *bad; });
  } else {
    report.fail("dichotomy.case", "G' <= Z(G) or G' & Z(G) = 1", g.describe(d & z));
  }

  if (with_characters) {
    const auto& t = g.character_table();
    std::set<std::uint64_t> nonlinear(t.degrees.begin() + static_cast<std::ptrdiff_t>(t.linear_count), t.degrees.end());
    report.check("dichotomy.degrees", "all nonlinear characters have the same degree", nonlinear.size() <= 1, [&] {
      std::string s;
      for (auto x : nonlinear) s += std::to_string(x) + " ";
      return s;
    });
  }
  return report;
}

VerificationReport hereditary_checks(const GroupAnalysis& g, const Permutation& element) {
  const std::uint32_t a = g.index(element);
  VerificationReport report;
  report.suite = "hereditary";
  if (!is_anticentral(g, a)) {
    report.pass("hereditary.quotients", "aN is anticentral in G/N for normal N", "a is not anticentral");
    return report;
  }
  std::vector<PermGroup> normals;
  if (g.solvable()) {
    normals = g.chief().terms;
  } else {
    normals = series_report(g.group(), SeriesKind::derived).terms;
    normals.push_back(center(g.group()));
  }
  std::optional<std::string> witness;
  for (const auto& n : normals) {
    if (n.is_trivial() || n.order() == g.order()) continue;
    QuotientMap q = quotient_group(g.group(), n);
    if (!is_anticentral(q.image, q.project(element))) {
      witness = "N of order " + std::to_string(n.order()) + " generated by " + std::to_string(n.generators().size()) +
                " elements";
      break;
    }
  }
  report.check("hereditary.quotients", "aN is anticentral in G/N for normal N", !witness, [&] { return *witness; },
               std::to_string(normals.size()) + " normal subgroups");
  return report;
}

VerificationReport direct_product_check(const PermGroup& left, const Permutation& a, const PermGroup& right,
                                        const Permutation& b) {
  VerificationReport report;
  report.suite = "hereditary";
  const bool in_left = is_anticentral(left, a);
  const bool in_right = is_anticentral(right, b);
  PermGroup product = direct_product(left, right);
  const Permutation ab = direct_product_element(a, b);
  const bool in_product = is_anticentral(product, ab);
  report.check("hereditary.product", "(a,b) is anticentral in A x B iff a and b are anticentral",
               in_product == (in_left && in_right), [&] { return ab.to_string(); });
  return report;
}

}  // namespace acg
