#include "fsx/nonregular.h"

#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "fsx/errors.h"
#include "fsx/membership.h"
#include "gtest/gtest.h"

namespace fsx {
namespace {

GrowthSequence thirteen() { return GrowthSequence::custom(thirteen_doubling_terms(208)); }

std::vector<std::uint64_t> random_partition(std::mt19937& gen, std::uint64_t total) {
  const auto cap = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(total)));
  std::vector<std::uint64_t> out;
  std::uint64_t left = total;
  while (left > 0) {
    const std::uint64_t s =
        std::uniform_int_distribution<std::uint64_t>(1, std::min(cap, left))(gen);
    out.push_back(s);
    left -= s;
  }
  return out;
}

TEST(BlockMatching, Examples) {
  // [2,1] x [1,1,1] breaks the size hypothesis (2 > floor(sqrt(3))) but its
  // margins are feasible.
  const std::uint64_t r21[] = {2, 1};
  const std::uint64_t c111[] = {1, 1, 1};
  const auto m = realize_margins(r21, c111);
  EXPECT_EQ(m.row_sums(), (std::vector<std::uint64_t>{2, 1}));
  EXPECT_EQ(m.col_sums(), (std::vector<std::uint64_t>{1, 1, 1}));
  EXPECT_EQ(m.to_bit_rows(), (std::vector<std::string>{"110", "001"}));

  EXPECT_EQ(block_matching(BlockPartition({1}), BlockPartition({1})).to_bit_rows(),
            std::vector<std::string>{"1"});

  EXPECT_EQ(block_matching(BlockPartition({3, 3, 3}), BlockPartition({3, 3, 3})).to_bit_rows(),
            (std::vector<std::string>{"111", "111", "111"}));
}

TEST(BlockMatching, HypothesisEnforced) {
  EXPECT_THROW(block_matching(BlockPartition({4}), BlockPartition({2, 2})), ContractViolation);
  EXPECT_THROW(block_matching(BlockPartition({1, 1}), BlockPartition({1})), ContractViolation);
  EXPECT_THROW(block_matching(BlockPartition({2, 1}), BlockPartition({1, 1, 1})),
               ContractViolation);
  EXPECT_THROW(BlockPartition({1, 0}), ContractViolation);
}

TEST(RealizeMargins, InfeasibleNamesPrefix) {
  const std::uint64_t rows[] = {3, 1};
  const std::uint64_t cols[] = {2, 2};
  try {
    realize_margins(rows, cols);
    FAIL() << "expected Infeasible";
  } catch (const Infeasible& e) {
    EXPECT_NE(std::string(e.what()).find("k = 1"), std::string::npos) << e.what();
  }
}

TEST(BlockMatching, RandomPartitionsProperty) {
  std::mt19937 gen(2024);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::uint64_t total = std::uniform_int_distribution<std::uint64_t>(1, 400)(gen);
    const BlockPartition rows(random_partition(gen, total));
    const BlockPartition cols(random_partition(gen, total));
    const auto m = block_matching(rows, cols);
    ASSERT_EQ(m.row_sums(), rows.sizes());
    ASSERT_EQ(m.col_sums(), cols.sizes());
    const auto edges = expand_matching(m);
    ASSERT_EQ(edges.size(), total);
    std::set<std::pair<std::size_t, std::uint64_t>> left, right;
    for (const auto& e : edges) {
      ASSERT_TRUE(left.insert({e.row_block, e.row_item}).second);
      ASSERT_TRUE(right.insert({e.col_block, e.col_item}).second);
    }
  }
}

TEST(BlockMatrix, BitRows) {
  const std::vector<std::string> rows{"101", "010"};
  const auto m = BlockMatrix::from_bit_rows(rows);
  EXPECT_TRUE(m.at(0, 2));
  EXPECT_FALSE(m.at(1, 0));
  EXPECT_EQ(m.to_bit_rows(), rows);
  const std::vector<std::string> ragged{"10", "1"};
  EXPECT_THROW(BlockMatrix::from_bit_rows(ragged), ParseError);
}

TEST(Sufficient, CounterexampleIsAbsent) {
  const auto r = sufficient_membership(thirteen(), thirteen(), 3, 50);
  EXPECT_EQ(r.rank1, 1u);
  EXPECT_EQ(r.rank2, 3u);
  EXPECT_EQ(r.l_value, 1u);
  EXPECT_GE(r.k_value, 2u);
  EXPECT_FALSE(r.condition_holds);
  EXPECT_FALSE(r.witness.has_value());
}

TEST(Sufficient, LargePowers) {
  const BigInt p = pow2(30) - 1;
  const auto seq = GrowthSequence::powers_of_two();
  const auto r = sufficient_membership(seq, seq, p, p);
  EXPECT_TRUE(r.condition_holds);
  EXPECT_EQ(r.k_value, 1u);
  EXPECT_EQ(r.l_value, 30u);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->size(), 30u);
  std::set<std::pair<BigInt, BigInt>> distinct(r.witness->begin(), r.witness->end());
  EXPECT_EQ(distinct.size(), 30u);
}

TEST(Sufficient, DiagonalRankFour) {
  const auto seq = GrowthSequence::powers_of_two();
  const auto r = sufficient_membership(seq, seq, 15, 15);
  EXPECT_TRUE(r.condition_holds);
  ASSERT_TRUE(r.witness.has_value());
  std::set<std::pair<BigInt, BigInt>> expected{{8, 8}, {4, 4}, {2, 2}, {1, 1}};
  std::set<std::pair<BigInt, BigInt>> got(r.witness->begin(), r.witness->end());
  EXPECT_EQ(got, expected);
}

TEST(Sufficient, CapUnreachableStillBuildsWitness) {
  // K = 1, L = 4, but 15 has no length-5 split with multiplicity <= 2.
  const auto seq = GrowthSequence::powers_of_two();
  EXPECT_FALSE(split_with_cap(seq, Representation::from_terms(std::vector<BigInt>{8, 4, 2, 1}),
                              5, 2)
                   .has_value());
  const auto r = sufficient_membership(seq, seq, 15, 31);
  EXPECT_TRUE(r.condition_holds);
  EXPECT_TRUE(r.cap_relaxed);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->size(), 5u);
  std::set<std::pair<BigInt, BigInt>> distinct(r.witness->begin(), r.witness->end());
  EXPECT_EQ(distinct.size(), 5u);
}

TEST(Sufficient, WitnessesAgreeWithOracle) {
  const auto seq = thirteen();
  const std::vector<GrowthSequence> seqs{seq, seq};
  const OracleGrid grid(seqs, {120, 120});
  int built = 0;
  for (std::uint64_t a = 1; a <= 120; ++a) {
    for (std::uint64_t b = 1; b <= 120; ++b) {
      const auto r = sufficient_membership(seq, seq, a, b);
      if (!r.condition_holds) continue;
      ASSERT_TRUE(r.witness.has_value());
      ++built;
      const std::uint64_t c[] = {a, b};
      ASSERT_TRUE(grid.reachable(c)) << a << "," << b;
      BigInt sx = 0, sy = 0;
      for (const auto& [x, y] : *r.witness) {
        sx += x;
        sy += y;
      }
      ASSERT_EQ(sx, a);
      ASSERT_EQ(sy, b);
    }
  }
  EXPECT_GT(built, 0);
}

TEST(SplitWithCap, RespectsCap) {
  const auto seq = GrowthSequence::powers_of_two();
  const auto rep = Representation::from_terms(std::vector<BigInt>{8, 4, 2, 1});
  const auto r = split_with_cap(seq, rep, 6, 3);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->value(), 15);
  EXPECT_EQ(r->length(), 6u);
  EXPECT_LE(r->mult(), 3u);
  // odd 15 keeps a single 1, and 14 = 8+4+2 is the only cap-2 split of the rest
  EXPECT_FALSE(split_with_cap(seq, rep, 5, 2).has_value());
}

TEST(PreferredShortest, MinimalMultiplicity) {
  const auto seq = GrowthSequence::fibonacci();
  EXPECT_EQ(preferred_shortest(seq, 10).to_string(), "8+2");
}

}  // namespace
}  // namespace fsx
