#include <random>

#include "gtest/gtest.h"

#include "acg/cayley.hpp"
#include "acg/config.hpp"
#include "acg/errors.hpp"
#include "acg/gset.hpp"
#include "acg/perm_group.hpp"
#include "acg/structure.hpp"
#include "oracle.hpp"
#include "test_helpers.hpp"

using namespace acg;
using namespace acg::testing;

TEST(PermGroup, BsgsOrderMatchesEnumerationOracle) {
  // Expected orders come from the closure oracle.
  auto s3_gens = s3();
  EXPECT_EQ(oracle::closure(3, s3_gens.generators()).size(), 6u);
  EXPECT_EQ(build_bsgs(s3_gens).order(), 6u);

  auto f20 = group(5, {"(1 2 3 4 5)", "(2 3 5 4)"});
  EXPECT_EQ(oracle::closure(5, f20.generators()).size(), 20u);
  EXPECT_EQ(f20.order(), 20u);

  EXPECT_EQ(PermGroup::trivial(3).order(), 1u);
  EXPECT_EQ(PermGroup(3, {Permutation(3)}).order(), 1u);
}

TEST(PermGroup, BsgsInvariantProductOfTransversals) {
  for (const auto& g : {s4(), a5(), group(8, {"(1 2 3 4 5 6 7 8)", "(1 2)"})}) {
    std::uint64_t product = 1;
    for (const auto& level : g.bsgs().levels) product *= level.transversal.size();
    EXPECT_EQ(product, g.order());
  }
  EXPECT_EQ(group(8, {"(1 2 3 4 5 6 7 8)", "(1 2)"}).order(), 40320u);
}

TEST(PermGroup, Membership) {
  auto a = a4();
  EXPECT_TRUE(membership_test(a, perm("(1 2 3)", 4)));
  EXPECT_FALSE(membership_test(a, perm("(1 2)", 4)));
  EXPECT_TRUE(membership_test(a, Permutation(4)));
  EXPECT_THROW(membership_test(a, Permutation(5)), DegreeMismatch);
}

TEST(PermGroup, MembershipAgreesWithOracle) {
  auto g = group(6, {"(1 2 3)(4 5)", "(1 4)(2 6)"});
  auto elems = oracle::closure(6, g.generators());
  ASSERT_EQ(elems.size(), g.order());
  std::vector<Point> images{0, 1, 2, 3, 4, 5};
  do {
    auto p = Permutation::from_images(images);
    EXPECT_EQ(g.contains(p), oracle::member(elems, p)) << p.to_string();
  } while (std::next_permutation(images.begin(), images.end()));
}

TEST(PermGroup, EnumerationIsSortedAndComplete) {
  auto elems = elements_enumerate(s3(), 1000);
  EXPECT_EQ(elems.size(), 6u);
  EXPECT_TRUE(std::is_sorted(elems.begin(), elems.end()));
  EXPECT_EQ(elements_enumerate(PermGroup::trivial(4), 1), std::vector<Permutation>{Permutation(4)});

  auto d = elements_enumerate(d8(), 8);
  EXPECT_EQ(d, oracle::closure(4, d8().generators()));
  EXPECT_THROW(elements_enumerate(d8(), 7), CapacityError);
}

TEST(PermGroup, EnumerationBoundIsRespected) {
  auto saved = enumeration_bound();
  set_enumeration_bound(50);
  EXPECT_THROW(a5().elements(), CapacityError);
  set_enumeration_bound(saved);
  EXPECT_EQ(a5().elements().size(), 60u);
}

TEST(PermGroup, EqualityIsSetEquality) {
  EXPECT_EQ(s3(), group(3, {"(1 2)", "(2 3)"}));
  EXPECT_FALSE(s3() == group(3, {"(1 2 3)"}));
}

TEST(PermGroup, SubgroupFromElements) {
  auto elems = a4().elements();
  auto h = subgroup_from_elements(4, elems);
  EXPECT_EQ(h.order(), 12u);
  EXPECT_LE(h.generators().size(), 3u);
}

TEST(CayleyTable, AgreesWithPermutationProducts) {
  auto g = s4();
  const auto& table = g.table();
  ASSERT_EQ(table.size(), 24u);
  EXPECT_TRUE(table.element(0).is_identity());
  std::mt19937 rng(3);
  for (int i = 0; i < 100; ++i) {
    auto x = static_cast<std::uint32_t>(rng() % 24);
    auto y = static_cast<std::uint32_t>(rng() % 24);
    EXPECT_EQ(table.element(table.mul(x, y)), table.element(x) * table.element(y));
    EXPECT_EQ(table.element(table.comm(x, y)), commutator(table.element(x), table.element(y)));
  }
  std::vector<std::uint32_t> gens{*table.index_of(perm("(1 2 3)", 4)), *table.index_of(perm("(2 3 4)", 4))};
  EXPECT_EQ(table.closure(gens).count(), 12u);
}

TEST(GSet, Orbits) {
  auto natural = GSet::natural(a4());
  EXPECT_EQ(orbit_of(natural, 0), (std::vector<std::size_t>{0, 1, 2, 3}));
  auto trivial = GSet::natural(PermGroup::trivial(3));
  EXPECT_EQ(orbit_of(trivial, 2), (std::vector<std::size_t>{2}));
  EXPECT_THROW(orbit_of(trivial, 5), PreconditionError);

  // Conjugation action on the eight 3-cycles of A4: orbit of (1 2 3) has
  // size |A4| / |C(1 2 3)| = 12 / 3.
  std::vector<Permutation> three_cycles;
  auto alt4 = a4();
  for (const auto& x : alt4.elements()) {
    if (x.order() == 3) three_cycles.push_back(x);
  }
  auto conj = GSet::conjugation_on_elements(a4(), three_cycles);
  auto start = static_cast<std::size_t>(
      std::find(three_cycles.begin(), three_cycles.end(), perm("(1 2 3)", 4)) - three_cycles.begin());
  EXPECT_EQ(orbit_of(conj, start).size(), 4u);
}

TEST(GSet, OrbitsPartitionPoints) {
  auto g = group(7, {"(1 2)(3 4)", "(3 5)", "(6 7)"});
  auto omega = GSet::natural(g);
  std::vector<int> hits(7, 0);
  for (std::size_t p = 0; p < 7; ++p) {
    auto orb = orbit_of(omega, p);
    if (orb.front() == p) {
      for (auto q : orb) ++hits[q];
    }
  }
  EXPECT_EQ(hits, std::vector<int>(7, 1));
}

TEST(CosetAction, OnCosetsOfSubgroups) {
  auto act = coset_action(s3(), group(3, {"(1 2)"}));
  EXPECT_EQ(act.gset.size(), 3u);
  EXPECT_EQ(act.image.order(), 6u);

  auto whole = coset_action(s3(), s3());
  EXPECT_EQ(whole.gset.size(), 1u);
  EXPECT_EQ(whole.image.order(), 1u);

  auto z = center(d8());
  ASSERT_EQ(z.order(), 2u);
  auto d8_mod_z = coset_action(d8(), z);
  EXPECT_EQ(d8_mod_z.gset.size(), 4u);
  EXPECT_EQ(d8_mod_z.image.order(), 4u);

  EXPECT_THROW(coset_action(a4(), group(4, {"(1 2)"})), PreconditionError);
}

TEST(CosetAction, PointCountIsIndexAndActionIsHomomorphic) {
  auto g = s4();
  for (const auto& h : {group(4, {"(1 2)"}), a4(), group(4, {"(1 2 3)"}), d8()}) {
    auto act = coset_action(g, h);
    EXPECT_EQ(act.gset.size(), g.order() / h.order());
    const auto& elems = g.elements();
    for (std::size_t i = 0; i < elems.size(); i += 5) {
      for (std::size_t j = 0; j < elems.size(); j += 7) {
        EXPECT_EQ(act.image_of(elems[i] * elems[j]), act.image_of(elems[i]) * act.image_of(elems[j]));
      }
    }
  }
}
