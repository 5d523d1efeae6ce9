#include "fsx/membership.h"

#include <random>
#include <set>
#include <vector>

#include "fsx/errors.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace fsx {
namespace {

using Seqs = std::vector<GrowthSequence>;

Seqs two_powers() { return {GrowthSequence::powers_of_two(), GrowthSequence::powers_of_two()}; }
Seqs pow_fib() { return {GrowthSequence::powers_of_two(), GrowthSequence::fibonacci()}; }
GrowthSequence thirteen() { return GrowthSequence::custom(thirteen_doubling_terms(208)); }

LatticePoint pt(std::initializer_list<int> xs) {
  return LatticePoint(std::vector<BigInt>(xs.begin(), xs.end()));
}

TEST(LatticePoint, ParseAndPrint) {
  const auto p = LatticePoint::parse("15, 257");
  EXPECT_EQ(p.dimension(), 2u);
  EXPECT_EQ(p.to_string(), "(15, 257)");
  EXPECT_THROW(LatticePoint::parse("15,x"), ParseError);
  EXPECT_THROW(LatticePoint::parse("0,3"), ContractViolation);
  EXPECT_THROW(LatticePoint::parse(""), ParseError);
}

TEST(ClosedForm, AnchorPoints) {
  const auto no = decide_closed_form(two_powers(), pt({15, 1}));
  EXPECT_FALSE(no.member);
  EXPECT_EQ(no.ranks, (std::vector<std::uint64_t>{4, 1}));
  EXPECT_TRUE(decide_closed_form(two_powers(), pt({15, 257})).member);
  const auto one = decide_closed_form(two_powers(), pt({1, 1}), true);
  EXPECT_TRUE(one.member);
  ASSERT_TRUE(one.witness.has_value());
  EXPECT_EQ(*one.witness, (std::vector<LatticePoint>{pt({1, 1})}));
}

TEST(ClosedForm, NonRegularRejected) {
  const Seqs seqs{thirteen(), thirteen()};
  EXPECT_THROW(decide_closed_form(seqs, pt({3, 50})), RegularityRequired);
}

TEST(ClosedForm, DimensionMismatch) {
  EXPECT_THROW(decide_closed_form(two_powers(), pt({1, 1, 1})), ContractViolation);
}

TEST(ClosedForm, HugeCoordinates) {
  const BigInt a = pow2(300) - 1;  // rank 300
  const LatticePoint p({a, BigInt(300)});
  EXPECT_TRUE(decide_closed_form(two_powers(), p).member);
  const LatticePoint q({a, BigInt(299)});
  EXPECT_FALSE(decide_closed_form(two_powers(), q).member);
}

TEST(Witness, Examples) {
  const auto w = construct_witness(two_powers(), pt({15, 257}));
  ASSERT_EQ(w.size(), 4u);
  std::multiset<BigInt> firsts;
  for (const auto& q : w) firsts.insert(q[0]);
  EXPECT_EQ(firsts, (std::multiset<BigInt>{8, 4, 2, 1}));
  EXPECT_FALSE(check_witness(two_powers(), pt({15, 257}), w).has_value());

  const auto w2 = construct_witness(pow_fib(), pt({3, 5}));
  ASSERT_EQ(w2.size(), 2u);
  EXPECT_EQ(w2, (std::vector<LatticePoint>{pt({2, 3}), pt({1, 2})}));
}

TEST(Witness, NonMemberThrows) {
  EXPECT_THROW(construct_witness(two_powers(), pt({15, 1})), ContractViolation);
}

TEST(Witness, CheckerCatchesBadWitnesses) {
  const auto seqs = two_powers();
  const std::vector<LatticePoint> dup{pt({1, 1}), pt({1, 1})};
  EXPECT_TRUE(check_witness(seqs, pt({2, 2}), dup).has_value());
  const std::vector<LatticePoint> wrong_sum{pt({2, 1})};
  EXPECT_TRUE(check_witness(seqs, pt({2, 2}), wrong_sum).has_value());
  const std::vector<LatticePoint> not_elem{pt({3, 1})};
  EXPECT_TRUE(check_witness(seqs, pt({3, 1}), not_elem).has_value());
}

TEST(Witness, SoundOverBox) {
  for (const auto& seqs : {two_powers(), pow_fib()}) {
    const ClosedFormDecider decider(seqs, 40);
    for (int a = 1; a <= 40; ++a) {
      for (int b = 1; b <= 40; ++b) {
        const auto p = pt({a, b});
        const auto v = decider.decide(p, true);
        ASSERT_EQ(v.member, v.witness.has_value());
        if (v.member) {
          ASSERT_FALSE(check_witness(seqs, p, *v.witness).has_value()) << p.to_string();
        }
      }
    }
  }
}

TEST(Oracle, Examples) {
  EXPECT_FALSE(oracle_membership(two_powers(), pt({15, 1})));
  const Seqs t{thirteen(), thirteen()};
  EXPECT_FALSE(oracle_membership(t, pt({3, 50})));
  EXPECT_TRUE(oracle_membership(two_powers(), pt({2, 2})));
  EXPECT_TRUE(oracle_membership(two_powers(), pt({15, 257})));
}

TEST(Oracle, MatchesSetExpansion) {
  const auto a = testing::powers_upto(24);
  const auto b = testing::fibonacci_upto(24);
  const OracleGrid grid(pow_fib(), {24, 24});
  const auto reach = testing::brute_fs_box(a, b, 24, 24);
  for (std::uint64_t x = 0; x <= 24; ++x) {
    for (std::uint64_t y = 0; y <= 24; ++y) {
      const std::uint64_t c[] = {x, y};
      ASSERT_EQ(grid.reachable(c), reach.count({x, y}) > 0) << x << "," << y;
    }
  }
}

TEST(Oracle, ThirteenMatchesSetExpansion) {
  std::vector<std::uint64_t> e{1, 2, 3, 6, 12, 13, 26, 52};
  const Seqs t{thirteen(), thirteen()};
  const OracleGrid grid(t, {30, 30});
  const auto reach = testing::brute_fs_box(e, e, 30, 30);
  for (std::uint64_t x = 1; x <= 30; ++x) {
    for (std::uint64_t y = 1; y <= 30; ++y) {
      const std::uint64_t c[] = {x, y};
      ASSERT_EQ(grid.reachable(c), reach.count({x, y}) > 0) << x << "," << y;
    }
  }
}

TEST(Oracle, Budget) {
  EXPECT_THROW(OracleGrid(two_powers(), {5000, 5000}, 1000), BudgetExceeded);
  const Seqs four(4, GrowthSequence::powers_of_two());
  EXPECT_THROW(OracleGrid(four, {3, 3, 3, 3}), ContractViolation);
}

TEST(ScanBox, SmallGrid) {
  const auto grid = scan_box(two_powers(), Box{2, 8});
  const std::uint64_t c11[] = {1, 1};
  EXPECT_TRUE(grid.at(c11));
  const std::uint64_t c71[] = {7, 1};
  EXPECT_FALSE(grid.at(c71));
}

TEST(ScanBox, CrossCheck64) {
  for (const auto& seqs : {two_powers(), pow_fib()}) {
    const auto grid = scan_box(seqs, Box{2, 64}, true);
    EXPECT_TRUE(grid.cross_checked);
    EXPECT_TRUE(grid.mismatches.empty());
  }
}

TEST(ScanBox, CrossCheckThreeDimensions) {
  const Seqs seqs{GrowthSequence::powers_of_two(), GrowthSequence::fibonacci(),
                  GrowthSequence::powers_of_two()};
  const auto grid = scan_box(seqs, Box{3, 16}, true);
  EXPECT_TRUE(grid.mismatches.empty());
  EXPECT_GT(grid.member_count(), 0u);
}

TEST(ClosedForm, RandomPointsAgreeWithBruteForce) {
  std::mt19937 gen(5);
  std::uniform_int_distribution<int> d(1, 30);
  const auto a = testing::powers_upto(30);
  const auto b = testing::fibonacci_upto(30);
  for (int trial = 0; trial < 200; ++trial) {
    const int x = d(gen), y = d(gen);
    EXPECT_EQ(decide_closed_form(pow_fib(), pt({x, y})).member,
              testing::brute_fs_member(a, b, x, y))
        << x << "," << y;
  }
}

}  // namespace
}  // namespace fsx
