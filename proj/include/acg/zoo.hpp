#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "acg/perm_group.hpp"
#include "json.hpp"

namespace acg {

/// Expected properties of a constructed group. Every entry of `expected` is
/// recomputed when the group is built; a mismatch throws InternalError.
///
/// Recognised keys: order, abelian_index, derived_order, center_order,
/// nilpotency_class, designated_order, designated_centralizer_order,
/// designated_anticentral (0 or 1), anticentral_classes.
struct GroupManifest {
  std::string name;
  std::string family;
  nlohmann::json parameters = nlohmann::json::object();
  std::map<std::string, std::int64_t> expected;
  std::optional<Permutation> designated;
};

struct ZooGroup {
  PermGroup group;
  GroupManifest manifest;
};

/// Recomputes every expected entry; throws InternalError on mismatch.
void verify_manifest(const ZooGroup& z);

nlohmann::json manifest_to_json(const GroupManifest& m);
/// `degree` is needed to parse the designated element.
GroupManifest manifest_from_json(const nlohmann::json& j, std::size_t degree);

/// Direct product of cyclic groups on disjoint points; [] is the trivial group.
ZooGroup abelian_group(const std::vector<std::uint64_t>& factors);

enum class TwoGroupKind { dihedral, quaternion, semidihedral };
/// Dihedral groups act on order/2 points; the others act regularly.
ZooGroup two_generated_2group(TwoGroupKind kind, std::uint64_t order);

/// Extraspecial group of order p^3 or p^5. `type`: "plus"/"minus" for p = 2
/// (D8 or Q8 blocks), "p"/"p2" for odd p (exponent p or p^2).
ZooGroup extraspecial(std::uint64_t p, std::uint64_t order, const std::string& type);

/// Upper unitriangular n x n matrices over GF(q) acting on the q^n row
/// vectors. The designated element has a superdiagonal of ones.
ZooGroup unitriangular(std::uint64_t n, std::uint64_t q);
inline constexpr std::uint64_t kUnitriangularDegreeBudget = 4096;

/// (SL(2,3) x E)/<(-I, z)> with E = D8 or Q8, acting regularly on 96 points.
ZooGroup central_product_sl23_e(const std::string& e_kind);

/// <alpha> semidirect K with K abelian of odd order and alpha the inversion.
ZooGroup fpf_semidirect(const std::vector<std::uint64_t>& k_factors);

/// kind: symmetric (n), alternating (n), frobenius (p, d), wreath_pp (p),
/// psl27.
ZooGroup classical(const std::string& kind, std::uint64_t n = 0, std::uint64_t d = 0);

ZooGroup direct_product(const ZooGroup& a, const ZooGroup& b);

struct ConstructParams {
  std::optional<std::uint64_t> n, q, p, order, d;
  std::optional<std::string> kind, exponent;
  std::vector<std::uint64_t> factors;
};
/// Dispatch by family name: abelian, dihedral, quaternion, semidihedral,
/// extraspecial, unitriangular, sl23, fpf, classical.
ZooGroup construct(const std::string& family, const ConstructParams& params);

/// The fixed corpus used by `verify --builtin`, sorted by name.
std::vector<ZooGroup> builtin_corpus();

}  // namespace acg
