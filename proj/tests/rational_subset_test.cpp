#include <gtest/gtest.h>

#include "fo/errors.hpp"
#include "fo/rational.hpp"
#include "fo/subset.hpp"
#include "test_support.hpp"

namespace fo {
namespace {

using testing::Q;

TEST(RationalTest, ParsesFractionsAndIntegers) {
  EXPECT_EQ(parse_rational("7/2"), Q(7, 2));
  EXPECT_EQ(parse_rational("14/4"), Q(7, 2));
  EXPECT_EQ(parse_rational("-1/7"), Q(-1, 7));
  EXPECT_EQ(parse_rational(" 6 "), Q(6));
  EXPECT_EQ(parse_rational("+3"), Q(3));
}

TEST(RationalTest, RejectsMalformedText) {
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_THROW(parse_rational("3.5"), ParseError);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("1/-2"), ParseError);
  EXPECT_THROW(parse_rational("a/b"), ParseError);
  EXPECT_THROW(parse_rational("1/2/3"), ParseError);
}

TEST(RationalTest, SerializesInLowestTerms) {
  EXPECT_EQ(to_string(Q(7, 2)), "7/2");
  EXPECT_EQ(to_string(Q(12, 2)), "6");
  EXPECT_EQ(to_string(Q(-2, 14)), "-1/7");
  EXPECT_EQ(to_string(Q(0)), "0");
  for (long n = -20; n <= 20; ++n) {
    for (long d = 1; d <= 12; ++d) {
      EXPECT_EQ(parse_rational(to_string(Q(n, d))), Q(n, d));
    }
  }
}

TEST(SubsetTest, BasicAlgebra) {
  const Subset a = testing::S({1, 2});
  const Subset b = testing::S({2, 3});
  EXPECT_EQ((a | b), testing::S({1, 2, 3}));
  EXPECT_EQ((a & b), testing::S({2}));
  EXPECT_EQ((a - b), testing::S({1}));
  EXPECT_EQ(a.size(), 2);
  EXPECT_TRUE(testing::S({2}).is_subset_of(a));
  EXPECT_FALSE(a.is_subset_of(b));
  EXPECT_EQ(a.first(), 0);
  EXPECT_EQ(a.positions(), (std::vector<int>{0, 1}));
}

TEST(SubsetTest, ForEachSubsetVisitsAllInMaskOrder) {
  std::vector<Subset::Mask> seen;
  for_each_subset(Subset(0b1011), [&](Subset x) { seen.push_back(x.mask()); });
  EXPECT_EQ(seen, (std::vector<Subset::Mask>{0b0000, 0b0001, 0b0010, 0b0011, 0b1000, 0b1001,
                                             0b1010, 0b1011}));
  int count = 0;
  for_each_subset(Subset{}, [&](Subset) { ++count; });
  EXPECT_EQ(count, 1);
}

TEST(GroundSetTest, ValidatesUsers) {
  EXPECT_THROW(GroundSet({}), DomainError);
  EXPECT_THROW(GroundSet({1, 1}), DomainError);
  EXPECT_THROW(GroundSet({0}), DomainError);
  EXPECT_THROW(GroundSet::range(kMaxUsers + 1), CapacityError);
  EXPECT_NO_THROW(GroundSet::range(kMaxUsers));
}

TEST(GroundSetTest, MapsUsersAndPositions) {
  const GroundSet g({5, 2, 9});
  EXPECT_EQ(g.position(9), 2);
  EXPECT_THROW(g.position(3), DomainError);
  EXPECT_EQ(g.user_ids(Subset(0b101)), (std::vector<int>{5, 9}));
  EXPECT_EQ(g.format(Subset(0b011)), "{5,2}");
  EXPECT_THROW(g.check(Subset(0b1000)), DomainError);
  EXPECT_EQ(g.restrict(Subset(0b110)).users(), (std::vector<int>{2, 9}));
}

TEST(SubsetTest, LiftAndProjectAreInverse) {
  const std::vector<int> parent{1, 4, 6};
  for_each_subset(Subset::full(3), [&](Subset local) {
    EXPECT_EQ(project(lift(local, parent), parent), local);
  });
  EXPECT_EQ(lift(Subset(0b101), parent), Subset((1U << 1) | (1U << 6)));
}

}  // namespace
}  // namespace fo
