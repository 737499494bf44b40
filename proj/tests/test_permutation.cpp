#include <random>

#include "gtest/gtest.h"

#include "acg/errors.hpp"
#include "acg/permutation.hpp"

using namespace acg;

namespace {

Permutation random_permutation(std::size_t degree, std::mt19937& rng) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(images);
}

}  // namespace

TEST(Permutation, ParsesCycleNotation) {
  auto p = parse_permutation("(1 2 3)", 4);
  EXPECT_EQ(p.images(), (std::vector<Point>{1, 2, 0, 3}));
  EXPECT_TRUE(parse_permutation("", 5).is_identity());
  EXPECT_EQ(parse_permutation("", 5).degree(), 5u);
  EXPECT_TRUE(parse_permutation("()", 3).is_identity());
  EXPECT_EQ(parse_permutation("(1,2)(3,4)", 4), parse_permutation("(1 2) (3 4)", 4));
}

TEST(Permutation, ParseErrorsNameTheOffset) {
  try {
    parse_permutation("(1 2)(1 3)", 3);
    FAIL() << "repeated point accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 6u);
    EXPECT_NE(std::string(e.what()).find("repeated point 1"), std::string::npos);
  }
  EXPECT_THROW(parse_permutation("(1 5)", 4), ParseError);
  EXPECT_THROW(parse_permutation("(0 1)", 4), ParseError);
  EXPECT_THROW(parse_permutation("(1 2", 4), ParseError);
  EXPECT_THROW(parse_permutation("1 2)", 4), ParseError);
  EXPECT_THROW(parse_permutation("(1 x)", 4), ParseError);
}

TEST(Permutation, ComposesWithRightAction) {
  auto p = parse_permutation("(1 2)", 3);
  auto q = parse_permutation("(2 3)", 3);
  EXPECT_EQ(compose(p, q), parse_permutation("(1 3 2)", 3));
  EXPECT_EQ(compose(p, Permutation(3)), p);
  EXPECT_TRUE(compose(q, q.inverse()).is_identity());
  EXPECT_THROW(compose(p, Permutation(4)), DegreeMismatch);
}

TEST(Permutation, CommutatorConvention) {
  auto a = parse_permutation("(1 2)", 3);
  auto g = parse_permutation("(1 3)", 3);
  EXPECT_EQ(commutator(a, g), parse_permutation("(1 3 2)", 3));
  EXPECT_TRUE(commutator(a, a).is_identity());
  // a [a,g] = a^g
  EXPECT_EQ(a * commutator(a, g), conjugate(a, g));
}

TEST(Permutation, CanonicalStringRoundTrips) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto p = random_permutation(12, rng);
    EXPECT_EQ(parse_permutation(p.to_string(), 12), p);
  }
  EXPECT_EQ(parse_permutation("(3 1 2)(5 4)", 5).to_string(), "(1 2 3)(4 5)");
  EXPECT_EQ(Permutation(4).to_string(), "()");
}

TEST(Permutation, RightActionLaw) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto p = random_permutation(9, rng);
    auto q = random_permutation(9, rng);
    for (Point w = 0; w < 9; ++w) EXPECT_EQ((p * q)[w], q[p[w]]);
  }
}

TEST(Permutation, OrderAndPowers) {
  auto p = parse_permutation("(1 2 3)(4 5)", 6);
  EXPECT_EQ(p.order(), 6u);
  EXPECT_TRUE(p.pow(6).is_identity());
  EXPECT_EQ(p.pow(-1), p.inverse());
  EXPECT_EQ(p.pow(7), p);
  EXPECT_EQ(Permutation(3).order(), 1u);
}

TEST(Permutation, RejectsNonBijection) {
  EXPECT_THROW(Permutation::from_images({0, 0, 1}), PreconditionError);
  EXPECT_THROW(Permutation::from_images({0, 3, 1}), PreconditionError);
}
