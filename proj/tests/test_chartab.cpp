#include <gtest/gtest.h>

#include <numeric>

#include "acg/chartab.hpp"
#include "acg/errors.hpp"
#include "oracle.hpp"
#include "test_helpers.hpp"

using namespace acg;
namespace fx = acg::testing;
using fx::group;
using fx::perm;

namespace {

std::size_t nonlinear_index(const CharacterTable& t, std::uint64_t degree) {
  for (std::size_t c = 0; c < t.character_count(); ++c) {
    if (t.degrees[c] == degree) return c;
  }
  return t.character_count();
}

}  // namespace

TEST(Cyclotomic, PolynomialCoefficients) {
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<std::int64_t>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (std::vector<std::int64_t>{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<std::int64_t>{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<std::int64_t>{1, 0, -1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(30).size(), euler_phi(30) + 1);
}

TEST(Cyclotomic, RootsOfUnitySumToZero) {
  for (unsigned m : {2U, 3U, 5U, 6U, 8U, 12U, 15U}) {
    Cyclotomic sum(m);
    for (unsigned k = 0; k < m; ++k) sum += Cyclotomic::root_power(m, k);
    EXPECT_TRUE(sum.is_zero()) << m;
  }
}

TEST(Cyclotomic, ConjugateGivesModulus) {
  // |1 + zeta_4|^2 = 2.
  auto x = Cyclotomic::integer(4, 1) + Cyclotomic::root_power(4, 1);
  EXPECT_EQ((x * x.conjugate()).to_integer(), 2);
  // zeta_3 + zeta_3^2 = -1.
  EXPECT_EQ((Cyclotomic::root_power(3, 1) + Cyclotomic::root_power(3, 2)).to_integer(), -1);
  EXPECT_THROW(Cyclotomic::root_power(3, 1).to_integer(), InternalError);
}

TEST(Cyclotomic, ParseRoundTrip) {
  auto x = Cyclotomic::integer(12, 3) - Cyclotomic::root_power(12, 2) + Cyclotomic::root_power(12, 3);
  auto text = x.to_string();
  EXPECT_EQ(Cyclotomic::parse(12, text), x);
  EXPECT_EQ(Cyclotomic::parse(5, Cyclotomic(5).to_string()), Cyclotomic(5));
}

TEST(CharacterTable, SymmetricGroupS3) {
  auto t = character_table(fx::s3());
  EXPECT_EQ(t.degrees, (std::vector<std::uint64_t>{1, 1, 2}));
  EXPECT_EQ(t.linear_count, 2U);
  std::size_t chi2 = nonlinear_index(t, 2);
  std::size_t transposition = t.class_of(perm("(1 2)", 3));
  EXPECT_TRUE(is_zero_at(t, chi2, transposition));
}

TEST(CharacterTable, AbelianGroupsAreLinear) {
  auto g = group(7, {"(1 2 3 4)", "(5 6 7)"});
  auto t = character_table(g);
  EXPECT_EQ(t.character_count(), 12U);
  for (auto d : t.degrees) EXPECT_EQ(d, 1U);
}

TEST(CharacterTable, TrivialCharacterNeverVanishes) {
  auto t = character_table(fx::s4());
  for (std::size_t k = 0; k < t.class_count(); ++k) {
    EXPECT_FALSE(is_zero_at(t, 0, k));
    EXPECT_EQ(t.irreducibles[0][k].to_integer(), 1);
  }
}

TEST(CharacterTable, DihedralDegreeTwoVanishesOffCenter) {
  auto d8 = fx::d8();
  auto t = character_table(d8);
  std::size_t chi = nonlinear_index(t, 2);
  auto z = center(d8);
  for (std::size_t k = 0; k < t.class_count(); ++k) {
    bool central = z.contains(t.classes[k].representative);
    EXPECT_EQ(is_zero_at(t, chi, k), !central) << k;
  }
}

TEST(CharacterTable, IndexOutOfRange) {
  auto t = character_table(fx::s3());
  EXPECT_THROW(is_zero_at(t, 3, 0), PreconditionError);
  EXPECT_THROW(is_zero_at(t, 0, 3), PreconditionError);
}

TEST(CharacterTable, SecondOrthogonality) {
  auto s3 = fx::s3();
  auto t = character_table(s3);
  EXPECT_EQ(orthogonality_check(t, 0, 0), 6);
  std::size_t tr = t.class_of(perm("(1 2)", 3));
  std::size_t three = t.class_of(perm("(1 2 3)", 3));
  EXPECT_EQ(orthogonality_check(t, tr, tr), 2);
  EXPECT_EQ(orthogonality_check(t, tr, three), 0);
  EXPECT_EQ(orthogonality_check(t, 0, tr), 0);
}

TEST(CharacterTable, SecondOrthogonalityMatchesCentralizers) {
  for (const auto& g : {fx::a4(), fx::a5(), fx::d8(),
                        group(7, {"(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)"})}) {
    auto t = character_table(g);
    for (std::size_t i = 0; i < t.class_count(); ++i) {
      auto c = oracle::centralizer(oracle::closure(g.degree(), g.generators()), t.classes[i].representative);
      EXPECT_EQ(orthogonality_check(t, i, i), static_cast<std::int64_t>(c.size()));
    }
  }
}

TEST(CharacterTable, A5DegreesAndIrrationalities) {
  auto t = character_table(fx::a5());
  EXPECT_EQ(t.degrees, (std::vector<std::uint64_t>{1, 3, 3, 4, 5}));
  EXPECT_EQ(t.conductor, 30U);
  std::size_t five = t.class_of(perm("(1 2 3 4 5)", 5));
  EXPECT_FALSE(t.irreducibles[1][five].is_integer());
}

TEST(CharacterTable, LinearCountIsIndexOfDerived) {
  for (const auto& g : {fx::s4(), fx::a4(), fx::d8(), fx::a5()}) {
    auto t = character_table(g);
    auto derived = oracle::derived(oracle::closure(g.degree(), g.generators()));
    EXPECT_EQ(t.linear_count, g.order() / derived.size());
  }
}

TEST(RestrictionNorm, DihedralToCenter) {
  auto d8 = fx::d8();
  auto t = character_table(d8);
  auto z = center(d8);
  EXPECT_EQ(restriction_norm(t, d8, z, nonlinear_index(t, 2)), Rational(4));
  for (std::size_t c = 0; c < t.linear_count; ++c) EXPECT_EQ(restriction_norm(t, d8, z, c), Rational(1));
}

TEST(RestrictionNorm, A4DegreeThreeToKlein) {
  auto a4 = fx::a4();
  auto t = character_table(a4);
  auto v4 = derived_subgroup(a4);
  EXPECT_EQ(v4.order(), 4U);
  EXPECT_GT(restriction_norm(t, a4, v4, nonlinear_index(t, 3)), Rational(1));
}

TEST(RestrictionNorm, RejectsNonNormal) {
  auto s3 = fx::s3();
  auto t = character_table(s3);
  EXPECT_THROW(restriction_norm(t, s3, group(3, {"(1 2)"}), 0), PreconditionError);
}

TEST(CharacterTable, ExportFormat) {
  auto t = character_table(fx::s3());
  auto text = export_character_table(t);
  EXPECT_EQ(text.rfind("# conductor 6\n1,", 0), 0U) << text;
  std::size_t lines = std::count(text.begin(), text.end(), '\n');
  EXPECT_EQ(lines, 5U);
}

TEST(CharacterTable, DixonPrime) {
  EXPECT_EQ(dixon_prime(6, 6), 7U);
  EXPECT_EQ(dixon_prime(60, 30), 31U);
  // q^2 > 4|G| forces q > 2 sqrt(|G|).
  EXPECT_EQ(dixon_prime(96, 12), 37U);
}
