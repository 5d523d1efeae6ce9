#include "fsx/lattice.h"

#include <vector>

#include "fsx/errors.h"
#include "gtest/gtest.h"

namespace fsx {
namespace {

TEST(ExceptionalSet, Examples) {
  EXPECT_TRUE(in_exceptional_set(8, 3));
  EXPECT_FALSE(in_exceptional_set(8, 4));
  EXPECT_TRUE(in_exceptional_set(pow2(128), 100));
  EXPECT_TRUE(in_exceptional_set(3, 8));
  EXPECT_FALSE(in_exceptional_set(2, 2));
  EXPECT_FALSE(in_exceptional_set(1, 1));  // 1 > log2(1)
  EXPECT_TRUE(in_exceptional_set(2, 1));
}

TEST(ExceptionalSet, MatchesDefinition) {
  for (std::uint64_t a = 1; a <= 70; ++a) {
    for (std::uint64_t b = 1; b <= 70; ++b) {
      const bool expected = (b < 64 && (std::uint64_t{1} << b) <= a) ||
                            (a < 64 && (std::uint64_t{1} << a) <= b);
      ASSERT_EQ(in_exceptional_set(a, b), expected) << a << "," << b;
    }
  }
}

TEST(Coverage, Empty) {
  EXPECT_TRUE(verify_complement_coverage(2).empty());
  EXPECT_TRUE(verify_complement_coverage(64).empty());
  EXPECT_TRUE(verify_complement_coverage(256).empty());
}

TEST(EmptySquare, Examples) {
  const auto d2 = empty_square(2);
  EXPECT_EQ(d2.square.x0, 24);
  EXPECT_EQ(d2.square.y0, 1);
  EXPECT_EQ(d2.per_point_rank, (std::vector<std::uint64_t>{3, 3}));
  EXPECT_TRUE(d2.all_excluded);
  EXPECT_TRUE(d2.inside_exceptional_set);

  const auto d1 = empty_square(1);
  EXPECT_EQ(d1.square.x0, 4);
  EXPECT_EQ(d1.per_point_rank, (std::vector<std::uint64_t>{2}));
}

TEST(EmptySquare, AllSidesToEight) {
  for (std::uint64_t d = 1; d <= 8; ++d) {
    const auto c = empty_square(d);
    EXPECT_TRUE(c.all_excluded) << d;
    for (auto r : c.per_point_rank) EXPECT_GT(r, d);
  }
}

TEST(EmptySquare, OracleConfirms) {
  for (std::uint64_t d = 1; d <= 4; ++d) {
    EXPECT_TRUE(empty_square_oracle_check(empty_square(d))) << d;
  }
}

TEST(EmptySquare, ZeroSideRejected) { EXPECT_THROW(empty_square(0), ContractViolation); }

TEST(DenseSquare, FrozenCounts) {
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> expected{
      {6, 306}, {7, 713}, {8, 1638}, {9, 3715}, {10, 8324}, {11, 18445}, {12, 40479}};
  for (const auto& [r, count] : expected) {
    const auto c = dense_square_count(r);
    EXPECT_EQ(c.exact_count, count) << r;
    EXPECT_EQ(c.enumerated_count, count) << r;
    EXPECT_TRUE(c.routes_agree);
    EXPECT_TRUE(c.meets_bound);
    EXPECT_EQ(c.paper_bound, pow2(r) * r / 4);
  }
  EXPECT_EQ(dense_square_count(6).paper_bound, 96);
  EXPECT_EQ(dense_square_count(10).paper_bound, 2560);
}

TEST(DenseSquare, KOneSummand) { EXPECT_EQ(floor_r_minus_log2(6, 1) + 1, 7); }

TEST(DenseSquare, FloorLog) {
  EXPECT_EQ(floor_r_minus_log2(6, 2), 5);
  EXPECT_EQ(floor_r_minus_log2(6, 3), 4);
  EXPECT_EQ(floor_r_minus_log2(6, 4), 4);
  EXPECT_EQ(floor_r_minus_log2(6, 5), 3);
  EXPECT_EQ(floor_r_minus_log2(2, 7), -1);
}

TEST(DenseSquare, SmallRRejected) { EXPECT_THROW(dense_square_count(5), ContractViolation); }

TEST(DenseSquare, OffsetIdentity) {
  EXPECT_TRUE(dense_offset_identity_holds(6));
  EXPECT_TRUE(dense_offset_identity_holds(8));
}

TEST(HorizontalWitness, SumsAndDistinct) {
  const BigInt n = pow2(128) + 11;
  const auto w = horizontal_witness(n, 2);
  ASSERT_EQ(w.size(), 4u);
  BigInt x = 0, y = 0;
  for (const auto& p : w) {
    x += p[0];
    y += p[1];
    EXPECT_EQ(p[1], 4);
  }
  EXPECT_EQ(x, n);
  EXPECT_EQ(y, 16);
}

}  // namespace
}  // namespace fsx
