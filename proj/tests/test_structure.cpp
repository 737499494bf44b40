#include <map>

#include "gtest/gtest.h"

#include "acg/errors.hpp"
#include "acg/structure.hpp"
#include "oracle.hpp"
#include "test_helpers.hpp"

using namespace acg;
using namespace acg::testing;

namespace {

std::multiset<std::uint64_t> class_sizes(const PermGroup& g) {
  std::multiset<std::uint64_t> out;
  for (const auto& c : conjugacy_classes(g)) out.insert(c.size);
  return out;
}

PermGroup q8() { return group(8, {"(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"}); }
PermGroup d16() { return group(8, {"(1 2 3 4 5 6 7 8)", "(2 8)(3 7)(4 6)"}); }
PermGroup c6() { return group(6, {"(1 2 3 4 5 6)"}); }
PermGroup s3xs3() { return group(6, {"(1 2)", "(1 2 3)", "(4 5)", "(4 5 6)"}); }

std::vector<PermGroup> small_corpus() {
  return {s3(), s4(), a4(), d8(), q8(), d16(), c6(), a5(), s3xs3(),
          group(5, {"(1 2 3 4 5)", "(2 3 5 4)"}), group(7, {"(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)"})};
}

}  // namespace

TEST(Centralizer, Examples) {
  EXPECT_EQ(centralizer(s3(), perm("(1 2)", 3)).order(), 2u);
  EXPECT_EQ(centralizer(a4(), perm("(1 2 3)", 4)).order(), 3u);
  auto z = perm("(1 3)(2 4)", 4);  // central in D8
  EXPECT_EQ(centralizer(d8(), z), d8());
  EXPECT_THROW(centralizer(a4(), perm("(1 2)", 4)), PreconditionError);
}

TEST(Centralizer, BothPathsAgreeWithOracle) {
  for (const auto& g : small_corpus()) {
    auto elems = oracle::closure(g.degree(), g.generators());
    for (std::size_t i = 0; i < elems.size(); i += 3) {
      auto expected = oracle::centralizer(elems, elems[i]).size();
      EXPECT_EQ(centralizer_exhaustive(g, elems[i]).order(), expected);
      EXPECT_EQ(centralizer_orbit_stabilizer(g, elems[i]).order(), expected);
      EXPECT_EQ(centralizer_exhaustive(g, elems[i]), centralizer_orbit_stabilizer(g, elems[i]));
    }
  }
}

TEST(ConjugacyClasses, Examples) {
  EXPECT_EQ(class_sizes(s3()), (std::multiset<std::uint64_t>{1, 2, 3}));
  EXPECT_EQ(class_sizes(a4()), (std::multiset<std::uint64_t>{1, 3, 4, 4}));
  auto c = conjugacy_classes(c6());
  EXPECT_EQ(c.size(), 6u);
  for (const auto& cls : c) EXPECT_EQ(cls.size, 1u);
}

TEST(ConjugacyClasses, RepresentativeIsLeastAndPartitionMatchesOracle) {
  for (const auto& g : small_corpus()) {
    auto classes = conjugacy_classes(g);
    auto elems = oracle::closure(g.degree(), g.generators());
    auto expected = oracle::classes(elems);
    ASSERT_EQ(classes.size(), expected.size());
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      total += classes[i].size;
      ASSERT_TRUE(classes[i].members.has_value());
      EXPECT_EQ(classes[i].representative, classes[i].members->front());
      EXPECT_EQ(*classes[i].members, expected[i]);
      EXPECT_EQ(classes[i].size * centralizer(g, classes[i].representative).order(), g.order());
    }
    EXPECT_EQ(total, g.order());
  }
}

TEST(DerivedSubgroup, Examples) {
  EXPECT_EQ(derived_subgroup(s3()), group(3, {"(1 2 3)"}));
  EXPECT_TRUE(derived_subgroup(c6()).is_trivial());
  for (const auto& g : small_corpus()) {
    auto elems = oracle::closure(g.degree(), g.generators());
    auto d = derived_subgroup(g);
    EXPECT_EQ(d.order(), oracle::derived(elems).size());
    EXPECT_TRUE(is_normal(g, d));
    EXPECT_TRUE(is_abelian(quotient_group(g, d).image));
  }
}

TEST(Center, Examples) {
  EXPECT_EQ(center(d8()).order(), 2u);
  EXPECT_EQ(center(c6()), c6());
  EXPECT_TRUE(center(a4()).is_trivial());
  for (const auto& g : small_corpus()) {
    auto elems = oracle::closure(g.degree(), g.generators());
    EXPECT_EQ(center(g).order(), oracle::center(elems).size());
  }
}

TEST(Normalizer, Examples) {
  auto h = group(3, {"(1 2)"});
  EXPECT_EQ(normalizer(s3(), h), h);
  EXPECT_EQ(normalizer(s3(), group(3, {"(1 2 3)"})), s3());
  EXPECT_EQ(normalizer(a4(), group(4, {"(1 2 3)"})).order(), 3u);
  EXPECT_THROW(normalizer(a4(), group(4, {"(1 2)"})), PreconditionError);
}

TEST(Normalizer, AgreesWithOracle) {
  auto g = s4();
  auto elems = oracle::closure(4, g.generators());
  for (const auto& h : {group(4, {"(1 2)"}), group(4, {"(1 2)(3 4)"}), group(4, {"(1 2 3 4)"}), d8(),
                        group(4, {"(1 2 3)"})}) {
    auto sub = oracle::closure(4, h.generators());
    EXPECT_EQ(normalizer(g, h).order(), oracle::normalizer(elems, sub).size());
  }
}

TEST(NormalClosure, Examples) {
  std::vector<Permutation> seed{perm("(1 2 3)", 3)};
  EXPECT_EQ(normal_closure(s3(), seed), group(3, {"(1 2 3)"}));
  std::vector<Permutation> id{Permutation(3)};
  EXPECT_TRUE(normal_closure(s3(), id).is_trivial());
  std::vector<Permutation> dt{perm("(1 2)(3 4)", 4)};
  EXPECT_EQ(normal_closure(a4(), dt).order(), 4u);
  std::vector<Permutation> outside{perm("(1 2)", 4)};
  EXPECT_THROW(normal_closure(a4(), outside), PreconditionError);
}

TEST(QuotientGroup, Examples) {
  EXPECT_EQ(quotient_group(s3(), group(3, {"(1 2 3)"})).image.order(), 2u);
  EXPECT_EQ(quotient_group(s3(), s3()).image.order(), 1u);
  auto q = quotient_group(d8(), center(d8()));
  EXPECT_EQ(q.image.order(), 4u);
  EXPECT_TRUE(is_abelian(q.image));
  EXPECT_EQ(exponent(q.image), 2u);
  EXPECT_THROW(quotient_group(s3(), group(3, {"(1 2)"})), PreconditionError);
}

TEST(QuotientGroup, ProjectionIsHomomorphismWithKernelN) {
  auto g = s4();
  auto v4 = group(4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  auto q = quotient_group(g, v4);
  EXPECT_EQ(q.image.order(), 6u);
  for (const auto& x : g.elements()) {
    EXPECT_EQ(q.project(x).is_identity(), v4.contains(x));
    for (const auto& y : g.generators()) EXPECT_EQ(q.project(x * y), q.project(x) * q.project(y));
  }
}

TEST(SylowSubgroup, Examples) {
  EXPECT_EQ(sylow_subgroup(s3(), 3), group(3, {"(1 2 3)"}));
  EXPECT_TRUE(sylow_subgroup(s3(), 5).is_trivial());
  EXPECT_EQ(sylow_subgroup(a4(), 2), group(4, {"(1 2)(3 4)", "(1 3)(2 4)"}));
  EXPECT_THROW(sylow_subgroup(s3(), 4), PreconditionError);
}

TEST(SylowSubgroup, OrderIsPPartAndCountIsOneModP) {
  for (const auto& g : small_corpus()) {
    auto elems = oracle::closure(g.degree(), g.generators());
    for (auto p : prime_divisors(g.order())) {
      auto s = sylow_subgroup(g, p);
      EXPECT_EQ(s.order(), oracle::p_part(g.order(), p));
      auto sub = oracle::closure(g.degree(), s.generators());
      EXPECT_TRUE(oracle::is_subgroup(sub));
      // Number of Sylow p-subgroups = |G : N_G(P)|.
      auto count = elems.size() / oracle::normalizer(elems, sub).size();
      EXPECT_EQ(count % p, 1u);
    }
  }
}

TEST(SeriesReport, DerivedSeriesOfS4) {
  auto r = series_report(s4(), SeriesKind::derived);
  ASSERT_EQ(r.terms.size(), 4u);
  EXPECT_EQ(r.terms[0].order(), 24u);
  EXPECT_EQ(r.terms[1], a4());
  EXPECT_EQ(r.terms[2].order(), 4u);
  EXPECT_TRUE(r.terms[3].is_trivial());
  EXPECT_TRUE(r.is_solvable);
  EXPECT_FALSE(r.is_nilpotent);
}

TEST(SeriesReport, AbelianAndMaximalClass) {
  auto r = series_report(c6(), SeriesKind::lower_central);
  EXPECT_TRUE(r.is_solvable);
  EXPECT_TRUE(r.is_nilpotent);
  EXPECT_EQ(r.nilpotency_class, 1u);

  auto d = series_report(d16(), SeriesKind::lower_central);
  EXPECT_EQ(d.nilpotency_class, 3u);
  ASSERT_EQ(d.terms.size(), 4u);
  EXPECT_EQ(d.terms[1].order(), 4u);
  EXPECT_EQ(d.terms[2].order(), 2u);

  auto u = series_report(d16(), SeriesKind::upper_central);
  ASSERT_EQ(u.terms.size(), 4u);
  EXPECT_EQ(u.terms.back(), d16());

  auto a = series_report(a5(), SeriesKind::derived);
  EXPECT_FALSE(a.is_solvable);
}

TEST(ChiefSeries, Examples) {
  auto r = chief_series(a4());
  ASSERT_EQ(r.terms.size(), 3u);
  EXPECT_EQ(r.terms[1].order(), 4u);
  EXPECT_EQ(r.central_factor, (std::vector<bool>{false, true}));

  auto c = chief_series(group(5, {"(1 2 3 4 5)"}));
  ASSERT_EQ(c.terms.size(), 2u);
  EXPECT_EQ(c.central_factor, std::vector<bool>{true});

  auto d = chief_series(d8());
  ASSERT_EQ(d.terms.size(), 4u);
  EXPECT_EQ(d.terms[1], center(d8()));
  EXPECT_TRUE(d.central_factor[0]);

  EXPECT_THROW(chief_series(a5()), UnsupportedError);
}

TEST(ChiefSeries, FactorsAreElementaryAbelianAndNormal) {
  for (const auto& g : small_corpus()) {
    if (!is_solvable(g)) continue;
    auto r = chief_series(g);
    for (std::size_t i = 0; i + 1 < r.terms.size(); ++i) {
      EXPECT_TRUE(is_normal(g, r.terms[i + 1]));
      auto factor = quotient_group(r.terms[i + 1], r.terms[i]).image;
      auto primes = prime_divisors(factor.order());
      ASSERT_EQ(primes.size(), 1u);
      EXPECT_TRUE(is_abelian(factor));
      EXPECT_EQ(exponent(factor), primes[0]);
    }
  }
}

TEST(IsSupplement, Examples) {
  EXPECT_TRUE(is_supplement(s3(), group(3, {"(1 2)"})));
  EXPECT_TRUE(is_supplement(a4(), a4()));
  EXPECT_FALSE(is_supplement(a4(), group(4, {"(1 2)(3 4)", "(1 3)(2 4)"})));
  EXPECT_THROW(is_supplement(a4(), group(4, {"(1 2)"})), PreconditionError);
}

TEST(AllSubgroups, CountsMatchKnownLattices) {
  // Subgroup counts: S3 has 6, A4 has 10, D8 has 10, S4 has 30, A5 has 59.
  EXPECT_EQ(all_subgroups(s3()).size(), 6u);
  EXPECT_EQ(all_subgroups(a4()).size(), 10u);
  EXPECT_EQ(all_subgroups(d8()).size(), 10u);
  EXPECT_EQ(all_subgroups(s4()).size(), 30u);
  EXPECT_EQ(all_subgroups(a5()).size(), 59u);
}

TEST(AllSubgroups, EveryEntryIsClosed) {
  auto g = s4();
  const auto& table = g.table();
  for (const auto& sub : all_subgroups(g)) {
    auto members = sub.members();
    for (auto x : members) {
      for (auto y : members) EXPECT_TRUE(sub.contains(table.mul(x, y)));
    }
  }
}
