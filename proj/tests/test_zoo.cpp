#include <gtest/gtest.h>

#include <set>

#include "acg/analysis.hpp"
#include "acg/anticentral.hpp"
#include "acg/chartab.hpp"
#include "acg/errors.hpp"
#include "acg/structure.hpp"
#include "acg/zoo.hpp"
#include "oracle.hpp"
#include "test_helpers.hpp"

using namespace acg;
namespace fx = acg::testing;

namespace {

oracle::Elements elements_of(const PermGroup& g) { return oracle::closure(g.degree(), g.generators()); }

// Elements of g that are anticentral, by the oracle.
oracle::Elements anticentral_set(const oracle::Elements& g) {
  oracle::Elements out;
  for (const auto& x : g) {
    if (oracle::anticentral(g, x)) out.push_back(x);
  }
  return out;
}

oracle::Elements complement(const oracle::Elements& g, const oracle::Elements& sub) {
  oracle::Elements out;
  for (const auto& x : g) {
    if (!oracle::member(sub, x)) out.push_back(x);
  }
  return out;
}

}  // namespace

TEST(Abelian, CyclicAndKlein) {
  auto c6 = abelian_group({6});
  EXPECT_EQ(c6.group.degree(), 6U);
  EXPECT_EQ(c6.group.order(), 6U);
  EXPECT_EQ(c6.manifest.name, "C6");
  auto v4 = abelian_group({2, 2});
  EXPECT_EQ(v4.group.degree(), 4U);
  EXPECT_EQ(v4.group.order(), 4U);
  EXPECT_EQ(exponent(v4.group), 2U);
}

TEST(Abelian, EveryElementAnticentral) {
  auto g = abelian_group({4, 2});
  auto els = elements_of(g.group);
  EXPECT_EQ(els.size(), 8U);
  EXPECT_EQ(anticentral_set(els).size(), 8U);
}

TEST(Abelian, TrivialAndBadFactor) {
  auto t = abelian_group({});
  EXPECT_EQ(t.group.order(), 1U);
  EXPECT_THROW(abelian_group({1}), PreconditionError);
}

TEST(TwoGroups, DihedralAnticentralOutsideDerived) {
  auto d8 = two_generated_2group(TwoGroupKind::dihedral, 8);
  auto els = elements_of(d8.group);
  auto derived = oracle::derived(els);
  EXPECT_EQ(anticentral_set(els), complement(els, derived));
}

TEST(TwoGroups, MaximalClass) {
  auto q8 = two_generated_2group(TwoGroupKind::quaternion, 8);
  EXPECT_EQ(series_report(q8.group, SeriesKind::lower_central).nilpotency_class, 2U);
  for (auto kind : {TwoGroupKind::dihedral, TwoGroupKind::quaternion, TwoGroupKind::semidihedral}) {
    auto g = two_generated_2group(kind, 16);
    EXPECT_EQ(g.group.order(), 16U);
    EXPECT_EQ(series_report(g.group, SeriesKind::lower_central).nilpotency_class, 3U);
  }
  auto d32 = two_generated_2group(TwoGroupKind::dihedral, 32);
  EXPECT_EQ(series_report(d32.group, SeriesKind::lower_central).nilpotency_class, 4U);
}

TEST(TwoGroups, Dihedral16AnticentralOrdersSmall) {
  auto d16 = two_generated_2group(TwoGroupKind::dihedral, 16);
  auto ac = anticentral_set(elements_of(d16.group));
  ASSERT_FALSE(ac.empty());
  for (const auto& x : ac) EXPECT_LE(x.order(), 4U);
}

TEST(TwoGroups, QuaternionHasUniqueInvolution) {
  for (std::uint64_t n : {8, 16, 32}) {
    auto q = two_generated_2group(TwoGroupKind::quaternion, n);
    std::size_t involutions = 0;
    for (const auto& x : q.group.elements()) involutions += x.order() == 2 ? 1 : 0;
    EXPECT_EQ(involutions, 1U) << n;
  }
}

TEST(TwoGroups, InvalidOrders) {
  EXPECT_THROW(two_generated_2group(TwoGroupKind::dihedral, 12), PreconditionError);
  EXPECT_THROW(two_generated_2group(TwoGroupKind::dihedral, 4), PreconditionError);
  EXPECT_THROW(two_generated_2group(TwoGroupKind::semidihedral, 8), PreconditionError);
}

TEST(Extraspecial, OrderP3AnticentralOutsideDerived) {
  for (auto [p, type] : std::vector<std::pair<std::uint64_t, std::string>>{
           {2, "plus"}, {2, "minus"}, {3, "p"}, {3, "p2"}, {5, "p"}}) {
    auto g = extraspecial(p, p * p * p, type);
    auto els = elements_of(g.group);
    auto derived = oracle::derived(els);
    EXPECT_EQ(derived.size(), p);
    EXPECT_EQ(anticentral_set(els), complement(els, derived)) << p << type;
  }
}

TEST(Extraspecial, Heisenberg27) {
  auto g = extraspecial(3, 27, "p");
  EXPECT_EQ(exponent(g.group), 3U);
  EXPECT_EQ(anticentral_set(elements_of(g.group)).size(), 24U);
  EXPECT_EQ(exponent(extraspecial(3, 27, "p2").group), 9U);
}

TEST(Extraspecial, D8TypeMatchesDihedral) {
  auto a = extraspecial(2, 8, "plus");
  auto b = two_generated_2group(TwoGroupKind::dihedral, 8);
  EXPECT_EQ(a.group.elements(), b.group.elements());
}

TEST(Extraspecial, CenterDerivedAndFrattiniQuotient) {
  for (auto [p, order, type] : std::vector<std::tuple<std::uint64_t, std::uint64_t, std::string>>{
           {2, 8, "minus"}, {3, 27, "p"}, {2, 32, "plus"}, {2, 32, "minus"}, {3, 243, "p"}, {3, 243, "p2"}}) {
    auto g = extraspecial(p, order, type);
    EXPECT_EQ(g.group.order(), order);
    auto z = center(g.group);
    EXPECT_EQ(z.order(), p);
    EXPECT_EQ(derived_subgroup(g.group).elements(), z.elements());
    // G/Z elementary abelian: x^p central for all x.
    for (const auto& x : g.group.elements()) EXPECT_TRUE(z.contains(x.pow(p)));
  }
}

TEST(Extraspecial, Order32NotAnticentralInCentralizer) {
  for (auto [p, order, type] : std::vector<std::tuple<std::uint64_t, std::uint64_t, std::string>>{
           {2, 32, "plus"}, {2, 32, "minus"}, {3, 243, "p"}}) {
    auto g = extraspecial(p, order, type);
    const auto& a = *g.manifest.designated;
    auto z = center(g.group);
    EXPECT_FALSE(z.contains(a));
    EXPECT_TRUE(is_anticentral(g.group, a));
    auto c = centralizer(g.group, a);
    EXPECT_FALSE(is_abelian(c));
    EXPECT_FALSE(is_anticentral(c, a));
  }
}

TEST(Extraspecial, TwoIsomorphismTypesOf32) {
  // D8 o D8 has 19 involutions, D8 o Q8 has 11.
  auto involutions = [](const PermGroup& g) {
    std::size_t n = 0;
    for (const auto& x : g.elements()) n += x.order() == 2 ? 1 : 0;
    return n;
  };
  EXPECT_EQ(involutions(extraspecial(2, 32, "plus").group), 19U);
  EXPECT_EQ(involutions(extraspecial(2, 32, "minus").group), 11U);
}

TEST(Extraspecial, Errors) {
  EXPECT_THROW(extraspecial(4, 64, "p"), PreconditionError);
  EXPECT_THROW(extraspecial(2, 8, "p"), PreconditionError);
  EXPECT_THROW(extraspecial(2, 128, "plus"), UnsupportedError);
}

TEST(Unitriangular, Formulas) {
  for (auto [n, q] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{3, 2}, {3, 3}, {4, 2}, {3, 4}, {2, 5}}) {
    auto g = unitriangular(n, q);
    std::uint64_t order = 1, index = 1;
    for (std::uint64_t i = 0; i < n * (n - 1) / 2; ++i) order *= q;
    for (std::uint64_t i = 0; i + 1 < n; ++i) index *= q;
    EXPECT_EQ(g.group.order(), order);
    EXPECT_EQ(g.group.order() / derived_subgroup(g.group).order(), index);
    EXPECT_EQ(centralizer(g.group, *g.manifest.designated).order(), index);
  }
}

TEST(Unitriangular, SmallCasesAgainstOracle) {
  auto ut32 = unitriangular(3, 2);
  auto els = elements_of(ut32.group);
  EXPECT_EQ(els.size(), 8U);
  EXPECT_TRUE(oracle::anticentral(els, *ut32.manifest.designated));
  auto ut33 = unitriangular(3, 3);
  EXPECT_EQ(oracle::centralizer(elements_of(ut33.group), *ut33.manifest.designated).size(), 9U);
}

TEST(Unitriangular, DesignatedOrder) {
  EXPECT_EQ(unitriangular(3, 2).manifest.designated->order(), 4U);
  EXPECT_EQ(unitriangular(5, 2).manifest.designated->order(), 8U);
  EXPECT_EQ(unitriangular(4, 3).manifest.designated->order(), 9U);
  EXPECT_EQ(unitriangular(3, 3).manifest.designated->order(), 3U);
}

TEST(Unitriangular, Errors) {
  EXPECT_THROW(unitriangular(3, 6), PreconditionError);
  EXPECT_THROW(unitriangular(1, 2), PreconditionError);
  EXPECT_THROW(unitriangular(13, 2), CapacityError);
}

TEST(SL23, CentralProducts) {
  for (std::string kind : {"D8", "Q8"}) {
    auto g = central_product_sl23_e(kind);
    EXPECT_EQ(g.group.order(), 96U);
    auto d = derived_subgroup(g.group);
    EXPECT_EQ(d.order(), 8U);
    std::size_t involutions = 0;
    for (const auto& x : d.elements()) involutions += x.order() == 2 ? 1 : 0;
    EXPECT_EQ(involutions, 1U);
    EXPECT_EQ(g.group.order() / class_size(g.group, *g.manifest.designated), 12U);
    EXPECT_TRUE(is_anticentral(g.group, *g.manifest.designated));
  }
}

TEST(SL23, AnticentralImagePersistsModCenter) {
  auto g = central_product_sl23_e("D8");
  auto z = center(g.group);
  auto q = quotient_group(g.group, z);
  EXPECT_TRUE(is_anticentral(q.image, q.project(*g.manifest.designated)));
}

TEST(SL23, CharacterTable) {
  auto g = central_product_sl23_e("D8");
  auto t = character_table(g.group);
  EXPECT_EQ(t.linear_count, 12U);
  EXPECT_NE(std::find(t.degrees.begin(), t.degrees.end(), 4U), t.degrees.end());
}

TEST(Fpf, InversionAnticentral) {
  for (auto k : std::vector<std::vector<std::uint64_t>>{{3}, {5}, {3, 3}}) {
    auto g = fpf_semidirect(k);
    auto els = elements_of(g.group);
    const auto& alpha = *g.manifest.designated;
    EXPECT_TRUE(oracle::anticentral(els, alpha));
    EXPECT_EQ(oracle::centralizer(els, alpha).size(), 2U);
  }
  EXPECT_EQ(fpf_semidirect({3, 3}).group.order(), 18U);
  EXPECT_THROW(fpf_semidirect({4}), PreconditionError);
  EXPECT_THROW(fpf_semidirect({}), PreconditionError);
}

TEST(Classical, Examples) {
  auto a5 = classical("alternating", 5);
  EXPECT_EQ(a5.group.order(), 60U);
  EXPECT_TRUE(anticentral_set(elements_of(a5.group)).empty());

  auto f21 = classical("frobenius", 7, 3);
  auto els = elements_of(f21.group);
  EXPECT_EQ(els.size(), 21U);
  for (const auto& x : els) {
    if (x.order() == 3) EXPECT_TRUE(oracle::anticentral(els, x));
  }

  auto w = classical("wreath_pp", 3);
  EXPECT_EQ(w.group.order(), 81U);
  EXPECT_EQ(series_report(w.group, SeriesKind::lower_central).nilpotency_class, 3U);
  EXPECT_FALSE(anticentral_set(elements_of(w.group)).empty());

  EXPECT_EQ(classical("psl27").group.order(), 168U);
  EXPECT_EQ(classical("symmetric", 1).group.order(), 1U);
  EXPECT_EQ(classical("alternating", 6).group.order(), 360U);
  EXPECT_THROW(classical("frobenius", 7, 4), PreconditionError);
  EXPECT_THROW(classical("frobenius", 8, 1), PreconditionError);
  EXPECT_THROW(classical("affine", 3), PreconditionError);
}

TEST(DirectProduct, Examples) {
  auto s3 = classical("symmetric", 3);
  auto s3s3 = direct_product(s3, s3);
  EXPECT_EQ(s3s3.group.order(), 36U);
  EXPECT_EQ(s3s3.group.degree(), 6U);
  auto a4 = classical("alternating", 4);
  auto s3a4 = direct_product(s3, a4);
  EXPECT_EQ(s3a4.group.order(), 72U);
  EXPECT_TRUE(is_anticentral(s3a4.group, direct_product_element(fx::perm("(1 2)", 3), fx::perm("(1 2 3)", 4))));
  auto trivial = abelian_group({});
  EXPECT_EQ(direct_product(a4, trivial).group.order(), 12U);
}

TEST(DirectProduct, ComponentCriterion) {
  auto d8 = two_generated_2group(TwoGroupKind::dihedral, 8);
  auto s3 = classical("symmetric", 3);
  auto g = direct_product(d8, s3);
  for (const auto& a : d8.group.elements()) {
    for (const auto& b : s3.group.elements()) {
      EXPECT_EQ(is_anticentral(g.group, direct_product_element(a, b)),
                is_anticentral(d8.group, a) && is_anticentral(s3.group, b));
    }
  }
}

TEST(Manifest, MismatchThrows) {
  auto g = abelian_group({6});
  g.manifest.expected["order"] = 7;
  EXPECT_THROW(verify_manifest(g), InternalError);
  g.manifest.expected = {{"designated_order", 6}};
  g.manifest.designated.reset();
  EXPECT_THROW(verify_manifest(g), InternalError);
}

TEST(Manifest, JsonRoundTrip) {
  auto g = unitriangular(4, 2);
  auto j = manifest_to_json(g.manifest);
  auto back = manifest_from_json(j, g.group.degree());
  EXPECT_EQ(back.name, "UT4_2");
  EXPECT_EQ(back.expected, g.manifest.expected);
  EXPECT_EQ(back.designated, g.manifest.designated);
  EXPECT_EQ(back.parameters, g.manifest.parameters);
  EXPECT_THROW(manifest_from_json(nlohmann::json::object(), 4), FormatError);
}

TEST(Construct, Dispatch) {
  ConstructParams p;
  p.n = 4;
  p.q = 2;
  auto ut = construct("unitriangular", p);
  EXPECT_EQ(ut.group.order(), 64U);
  EXPECT_EQ(ut.manifest.expected.at("designated_centralizer_order"), 8);

  ConstructParams e;
  e.p = 3;
  e.order = 27;
  e.exponent = "p";
  EXPECT_EQ(exponent(construct("extraspecial", e).group), 3U);

  ConstructParams f;
  f.kind = "frobenius";
  f.p = 7;
  f.d = 3;
  EXPECT_EQ(construct("classical", f).group.order(), 21U);

  EXPECT_THROW(construct("unitriangular", ConstructParams{}), PreconditionError);
  EXPECT_THROW(construct("nonsense", ConstructParams{}), PreconditionError);
}

TEST(Corpus, SortedUniqueAndVerified) {
  auto corpus = builtin_corpus();
  EXPECT_GE(corpus.size(), 30U);
  std::set<std::string> names;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    names.insert(corpus[i].manifest.name);
    if (i > 0) EXPECT_LT(corpus[i - 1].manifest.name, corpus[i].manifest.name);
    EXPECT_NO_THROW(verify_manifest(corpus[i]));
  }
  EXPECT_EQ(names.size(), corpus.size());
}

TEST(ChiefSeries, PassesThroughDerivedSubgroup) {
  for (auto [n, q] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{4, 2}, {5, 2}, {4, 3}}) {
    auto g = unitriangular(n, q);
    auto derived = derived_subgroup(g.group);
    auto chief = chief_series(g.group);
    bool found = false;
    for (const auto& term : chief.terms) found = found || term.order() == derived.order();
    EXPECT_TRUE(found) << g.manifest.name;
  }
}

TEST(ChiefSeries, FactorCriterionOnUnitriangular) {
  auto g = unitriangular(4, 2);
  GroupAnalysis ga(g.group);
  for (const auto& c : ga.classes()) {
    auto cf = chief_factor_conditions(ga, c.representative);
    EXPECT_EQ(cf.fixed_point_free && cf.centralizer_growth, cf.anticentral) << c.representative.to_string();
    EXPECT_EQ(cf.anticentral, oracle::anticentral(elements_of(g.group), c.representative));
  }
}
