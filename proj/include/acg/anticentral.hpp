#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "acg/analysis.hpp"
#include "acg/gset.hpp"
#include "acg/report.hpp"

namespace acg {

// An element a of G is anticentral when |C_G(a)| = |G:G'|.
//
// Operations returning a VerificationReport record failed claims in the
// report with a witness. Operations returning a value throw TheoremViolation
// when the value cannot be produced because a claim failed.

struct AnticentralCertificate {
  Permutation element;
  std::uint64_t centralizer_order = 0;
  std::uint64_t commutator_index = 0;  // |G:G'|
  bool cond_i = false;                  // |C_G(a)| = |G:G'|
  bool cond_ii = false;                 // a^G = aG'
  bool cond_iii = false;                // [a,G] = G'
  std::optional<bool> cond_iv;          // nonlinear characters vanish at a
  /// An element of the symmetric difference of a^G and aG', if nonempty.
  std::optional<Permutation> class_coset_witness;
};

/// C^0 = {1}, C^{i+1} = {x : [a,x] in C^i}, up to stabilization.
struct CChain {
  Permutation element;
  std::vector<ElementSet> levels;
  /// Subgroup generated by the last level.
  PermGroup limit;
  /// Whether the last level is itself closed under multiplication.
  bool limit_is_subgroup = false;
};

struct HallSystem {
  PermGroup owner;
  /// Keyed by the sorted prime set pi; the empty set maps to the trivial group.
  std::map<std::vector<std::uint64_t>, PermGroup> subgroups;
};

/// a = xk = kx with x of p-power order and k of p'-order, both powers of a.
struct DecomposedElement {
  Permutation a;
  Permutation p_part;
  Permutation p_prime_part;
};

DecomposedElement decompose(const Permutation& a, std::uint64_t p);

/// Class size times |G:G'| compared with |G|, via orbit-stabilizer.
bool is_anticentral(const PermGroup& group, const Permutation& a);
bool is_anticentral(const GroupAnalysis& group, std::uint32_t a);

/// Evaluates the four equivalent conditions independently; throws
/// TheoremViolation if they disagree or if |C_G(a)| < |G:G'|.
AnticentralCertificate equivalence_report(const GroupAnalysis& group, const Permutation& a,
                                          bool with_characters = true);

std::vector<ConjClass> find_anticentral_classes(const GroupAnalysis& group);

CChain c_chain(const GroupAnalysis& group, const Permutation& a);

/// Claims about D = C^inf(a): nilpotent and self-normalizing, DG' = G, every
/// supplement of G' through a contains D, every nilpotent subgroup through a
/// lies in D, and D is the only nilpotent supplement through a. Exhaustive
/// over the subgroup lattice for |G| <= kExhaustiveLatticeLimit, sampled above.
VerificationReport carter_verify(const GroupAnalysis& group, const Permutation& a);
inline constexpr std::uint64_t kExhaustiveLatticeLimit = 500;

/// The unique point of `omega` fixed by a. Requires G' transitive on omega.
std::size_t fixed_point_analysis(const GSet& omega, const Permutation& a);

VerificationReport supplement_properties(const GroupAnalysis& group, const PermGroup& supplement,
                                         const Permutation& a);

/// The unique a-invariant Sylow p-subgroup of the normal subgroup N.
PermGroup invariant_sylow(const GroupAnalysis& group, const PermGroup& normal, const Permutation& a,
                          std::uint64_t p);

/// The a-invariant Hall subgroups of a solvable normal subgroup N.
HallSystem hall_system(const GroupAnalysis& group, const PermGroup& normal, const Permutation& a);

/// C^inf(a) equals the intersection of N_G(P) over the a-invariant Sylow
/// subgroups; for solvable G also the normalizer of the a-invariant Hall system.
VerificationReport sylow_normalizer_identity(const GroupAnalysis& group, const Permutation& a);

/// N normal in G, N <= G', cyclic Sylow p-subgroup: N has a normal p-complement.
VerificationReport cyclic_sylow_complement_check(const GroupAnalysis& group, const Permutation& a,
                                                 const PermGroup& normal, std::uint64_t p);

struct NormalSylowConditions {
  DecomposedElement parts;
  PermGroup sylow;
  PermGroup complement;
  bool k_anticentral_in_k = false;       // (1)
  bool x_anticentral_in_cpk = false;     // (2)
  bool cpk_meet_derived = false;         // (3) C_P(k) & P' = C_P(k)'
  bool cpk_equals_cpk_full = false;      // (4) C_P(K) = C_P(k)
  bool anticentral = false;
  bool all() const { return k_anticentral_in_k && x_anticentral_in_cpk && cpk_meet_derived && cpk_equals_cpk_full; }
};

/// Requires a normal Sylow p-subgroup. When no complement is supplied, one
/// containing a_{p'} is found by greedy extension over p'-elements.
NormalSylowConditions normal_sylow_conditions(const GroupAnalysis& group, std::uint64_t p, const Permutation& a,
                                              const std::optional<PermGroup>& complement = std::nullopt);
VerificationReport normal_sylow_criteria(const GroupAnalysis& group, std::uint64_t p, const Permutation& a,
                                         const std::optional<PermGroup>& complement = std::nullopt);

/// For a supplement H through a: the a-invariant Sylow p of G meets H in the
/// a-invariant Sylow p of H.
VerificationReport sylow_meet_supplement(const GroupAnalysis& group, const PermGroup& supplement,
                                         const Permutation& a, std::uint64_t p);

VerificationReport invariant_class_bijection(const GroupAnalysis& group, const Permutation& a);

struct ChiefFactorConditions {
  bool fixed_point_free = true;  // on noncentral factors
  bool centralizer_growth = true;  // on central factors inside G'
  bool anticentral = false;
  /// Description of the first factor violating a condition.
  std::optional<std::string> offending_factor;
  /// Quotient centralizer orders agree with the preimage counts in G.
  bool quotient_consistent = true;
};

ChiefFactorConditions chief_factor_conditions(const GroupAnalysis& group, const Permutation& a);
VerificationReport chief_factor_criterion(const GroupAnalysis& group, const Permutation& a);

/// Anticentral elements exist only in solvable groups.
VerificationReport solvability_contrapositive(const GroupAnalysis& group);

/// If a is anticentral then so is its image in G/N for each normal N of the
/// chief series (the derived series and center when G is not solvable).
VerificationReport hereditary_checks(const GroupAnalysis& group, const Permutation& a);

/// Whether G' is a nontrivial minimal normal subgroup of G.
bool derived_is_minimal_normal(const GroupAnalysis& group);

/// For solvable G with G' minimal normal: anticentral elements exist, and
/// either G' <= Z(G), |G'| = p, G/Z(G) is elementary abelian and every
/// noncentral element is anticentral; or G' meets Z(G) trivially,
/// C_G(G') = Z(G) x G', and every g outside C_G(G') is anticentral with
/// G = C_G(g)G', C_G(g) & G' = 1 and C_G(g)/Z(G) cyclic. With characters,
/// all nonlinear degrees coincide. Throws PreconditionError otherwise.
VerificationReport minimal_derived_dichotomy(const GroupAnalysis& group, bool with_characters = true);

/// (a,b) is anticentral in A x B iff a and b are anticentral in their factors.
VerificationReport direct_product_check(const PermGroup& left, const Permutation& a, const PermGroup& right,
                                        const Permutation& b);

}  // namespace acg
