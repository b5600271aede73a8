#include <gtest/gtest.h>

#include <algorithm>

#include "goodsg/goodsg.hpp"

using namespace goodsg;

namespace {

GoodSemigroup sample() { return read_semigroup(GOODSG_SAMPLES "/three_branch.gs"); }

std::vector<ExtPoint> without(const GoodSemigroup& s, const char* drop) {
  std::vector<ExtPoint> v = s.small();
  v.erase(std::find(v.begin(), v.end(), parse_point(drop)));
  return v;
}

}  // namespace

TEST(Semigroup, ThreeBranchSampleIsGood) {
  const auto s = sample();
  EXPECT_EQ(s.dim(), 3U);
  EXPECT_EQ(s.conductor(), parse_point("(3,5,9)"));
  EXPECT_EQ(s.small().size(), 17U);
  EXPECT_TRUE(s.is_local());
  EXPECT_TRUE(s.validate().ok());
  EXPECT_EQ(s.gamma(), parse_point("(2,4,8)"));
}

TEST(Semigroup, MembershipBeyondConductor) {
  const auto s = sample();
  EXPECT_TRUE(s.contains(parse_point("(1,2,8)")));
  EXPECT_FALSE(s.contains(parse_point("(1,2,100)")));
  EXPECT_TRUE(s.contains(parse_point("(50,60,70)")));
  EXPECT_FALSE(s.contains(parse_point("(1,3,3)")));
  EXPECT_FALSE(s.contains(parse_point("(2,4,5)")));
  EXPECT_TRUE(s.contains(parse_point("(2,4,9)")));
  EXPECT_THROW(s.contains(parse_point("(1,inf,2)")), Error);
}

TEST(Semigroup, MissingMeetIsG1Failure) {
  const auto s = sample();
  auto rep = GoodSemigroup::validate_small(3, without(s, "(2,3,3)"));
  const auto* f = rep.first_failure();
  ASSERT_NE(f, nullptr);
  EXPECT_EQ(f->kind, ErrorKind::G1Violation);
  EXPECT_EQ(f->witness, "(2,3,6) meet (2,4,3) = (2,3,3) missing");

  rep = GoodSemigroup::validate_small(3, without(s, "(3,3,3)"));
  f = rep.first_failure();
  ASSERT_NE(f, nullptr);
  EXPECT_EQ(f->kind, ErrorKind::G1Violation);
  EXPECT_EQ(f->witness, "(3,3,6) meet (3,5,3) = (3,3,3) missing");
}

TEST(Semigroup, ConstructionThrowsFirstFailure) {
  const auto s = sample();
  try {
    GoodSemigroup::from_small_elements(3, without(s, "(2,3,3)"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::G1Violation);
  }
}

TEST(Semigroup, MissingZeroAndNotMonoid) {
  auto rep = GoodSemigroup::validate_small(2, {parse_point("(1,1)"), parse_point("(2,2)")});
  EXPECT_EQ(rep.first_failure()->kind, ErrorKind::MissingZero);
  // 2 + 2 = 4 stays below the maximum 5 and is absent.
  rep = GoodSemigroup::validate_small(1, {parse_point("(0)"), parse_point("(2)"), parse_point("(3)"), parse_point("(5)")});
  ASSERT_NE(rep.first_failure(), nullptr);
  EXPECT_EQ(rep.first_failure()->kind, ErrorKind::NotAMonoid);
  EXPECT_EQ(rep.first_failure()->witness, "(2) + (2) = (4) missing");
}

TEST(Semigroup, G2Failure) {
  // (1,1) and (1,2) agree on the first coordinate, and (>1, 1) is missing.
  const std::vector<ExtPoint> pts = {parse_point("(0,0)"), parse_point("(1,1)"), parse_point("(1,2)"),
                                     parse_point("(2,2)")};
  const auto rep = GoodSemigroup::validate_small(2, pts);
  const auto* f = rep.first_failure();
  ASSERT_NE(f, nullptr);
  EXPECT_EQ(f->kind, ErrorKind::G2Violation);
  EXPECT_FALSE(f->witness.empty());
}

TEST(Semigroup, ProductOfNumericalSemigroupsIsNonLocal) {
  const auto s = product_semigroup({{1}, {1, 2, 5}});
  EXPECT_EQ(s.conductor(), parse_point("(2,6)"));
  EXPECT_FALSE(s.is_local());
  EXPECT_FALSE(s.minimal_nonzero());
}

TEST(Semigroup, ConductorNotMinimal) {
  // N^2 written with conductor (1,1): (0,1) present already gives everything above it.
  const std::vector<ExtPoint> pts = {parse_point("(0,0)"), parse_point("(0,1)"), parse_point("(1,0)"),
                                     parse_point("(1,1)")};
  const auto rep = GoodSemigroup::validate_small(2, pts);
  ASSERT_NE(rep.first_failure(), nullptr);
  EXPECT_EQ(rep.first_failure()->kind, ErrorKind::ConductorNotMinimal);
}

TEST(Semigroup, NaturalsAreGoodAndNonLocal) {
  const auto s = GoodSemigroup::from_small_elements(2, {parse_point("(0,0)")});
  EXPECT_EQ(s.conductor(), parse_point("(0,0)"));
  EXPECT_TRUE(s.contains(parse_point("(5,0)")));
  EXPECT_FALSE(s.is_local());
  EXPECT_FALSE(s.minimal_nonzero());
  const auto rep = GoodSemigroup::validate_small(3, {parse_point("(0,0,0)")});
  EXPECT_TRUE(rep.ok());
  EXPECT_FALSE(rep.local);
}

TEST(Semigroup, FileRoundTrip) {
  const auto s = sample();
  const auto text = serialize_semigroup(s);
  EXPECT_EQ(parse_semigroup(text), s);
  EXPECT_EQ(serialize_semigroup(parse_semigroup(text)), text);
}

TEST(Semigroup, ParseErrors) {
  auto kind_of = [](const std::string& text) {
    try {
      parse_semigroup(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Usage;
  };
  EXPECT_EQ(kind_of("(0,0)\n"), ErrorKind::Parse);
  EXPECT_EQ(kind_of("d 2\n(0,0,0)\n"), ErrorKind::Parse);
  EXPECT_EQ(kind_of("d 2\n(0,inf)\n"), ErrorKind::Parse);
  EXPECT_EQ(kind_of("d x\n"), ErrorKind::Parse);
  EXPECT_EQ(kind_of("d 2\n(0,0)\nc (1,1)\n"), ErrorKind::Parse);
  EXPECT_EQ(kind_of("d 2\nc (2,2)\n(0,0)\n(1,1)\n"), ErrorKind::ConductorMismatch);
}

TEST(Semigroup, MinimalNonzero) {
  EXPECT_EQ(sample().minimal_nonzero(), parse_point("(1,2,3)"));
}
