#include "fsx/reduction.h"

#include <cmath>
#include <vector>

#include "fsx/errors.h"
#include "fsx/membership.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace fsx {
namespace {

std::vector<BigInt> big(std::initializer_list<int> xs) {
  return std::vector<BigInt>(xs.begin(), xs.end());
}

const GrowthSequence kPow = GrowthSequence::powers_of_two();

TEST(Prefix, Examples) {
  EXPECT_EQ(prefix_within(kPow, 16), big({1, 2, 4, 8}));
  EXPECT_EQ(prefix_within(GrowthSequence::fibonacci(), 7), big({1, 2, 3}));
  EXPECT_EQ(prefix_within(kPow, 1), big({1}));
}

TEST(BuildInstance, Examples) {
  const auto inst = build_reduced_instance(kPow, kPow, 16, 5, 3);
  EXPECT_EQ(inst.b1, big({1, 2, 4, 8}));
  EXPECT_EQ(inst.z.size(), 16u);
  EXPECT_EQ(inst.target, 83);
  EXPECT_EQ(inst.z.back(), 136);

  const auto one = build_reduced_instance(kPow, kPow, 1, 1, 1);
  EXPECT_EQ(one.z, big({2}));
  EXPECT_EQ(one.target, 2);
}

TEST(BuildInstance, Errors) {
  EXPECT_THROW(build_reduced_instance(kPow, kPow, 16, 17, 1), ContractViolation);
  EXPECT_THROW(build_reduced_instance(kPow, kPow, 16, 0, 1), ContractViolation);
}

TEST(Decide, Examples) {
  EXPECT_TRUE(decide_via_reduction(build_reduced_instance(kPow, kPow, 16, 5, 3)));
  for (int m : {1, 7, 16, 33}) {
    EXPECT_TRUE(decide_via_reduction(build_reduced_instance(kPow, kPow, m, 1, 1))) << m;
  }
}

TEST(Decide, CarryCounterexample) {
  // 241 = 16*15 + 1 is hit by z-values (8,8), (4,8), (2,1): 136+72+33.
  const auto prefix = build_reduced_instance(kPow, kPow, 16, 15, 1, ReductionMode::kPrefix);
  EXPECT_EQ(prefix.target, 241);
  EXPECT_TRUE(decide_via_reduction(prefix));
  const auto safe = build_reduced_instance(kPow, kPow, 16, 15, 1, ReductionMode::kSafe);
  EXPECT_FALSE(decide_via_reduction(safe));
  EXPECT_FALSE(oracle_membership(std::vector<GrowthSequence>{kPow, kPow},
                                 LatticePoint(big({15, 1}))));
}

TEST(Decode, SafeModeRecoversPairs) {
  const auto inst = build_reduced_instance(kPow, kPow, 16, 5, 3, ReductionMode::kSafe);
  // subset {(8,4), (1,2)}
  const BigInt s = inst.multiplier * 8 + 4 + inst.multiplier * 1 + 2;
  EXPECT_EQ(decode_sum(inst, s), (std::pair<BigInt, BigInt>{9, 6}));
}

TEST(Density, Examples) {
  std::vector<BigInt> pows;
  for (int i = 0; i < 10; ++i) pows.push_back(pow2(i));
  EXPECT_NEAR(knapsack_density(pows), 10.0 / 9.0, 1e-12);
  EXPECT_NEAR(knapsack_density(big({2})), 1.0, 1e-12);
  const auto inst = build_reduced_instance(kPow, kPow, 16, 1, 1);
  EXPECT_NEAR(knapsack_density(inst.z), 16.0 / std::log2(136.0), 1e-12);
  EXPECT_THROW(knapsack_density(big({1})), UndefinedDensity);
}

TEST(Sweep, PrefixModeCounterexamplesAt40) {
  const auto prefix = reduction_sweep(kPow, kPow, 40, ReductionMode::kPrefix);
  EXPECT_EQ(prefix.cells, 1600u);
  EXPECT_EQ(prefix.mismatches.size(), 78u);
  std::size_t carries = 0, dropped = 0;
  for (const auto& m : prefix.mismatches) {
    EXPECT_NE(m.reduction, m.oracle);
    if (m.reduction) {
      ++carries;
    } else {
      ++dropped;
      // the prefix {1,...,16} loses 32 <= M
      EXPECT_GE(m.p2 > m.p1 ? m.p2 : m.p1, 32u);
    }
  }
  EXPECT_EQ(carries, 60u);
  EXPECT_EQ(dropped, 18u);
  EXPECT_EQ(reduction_sweep(kPow, kPow, 40, ReductionMode::kShifted).mismatches.size(), 78u);
}

TEST(Sweep, SafeModeAgrees) {
  EXPECT_TRUE(reduction_sweep(kPow, kPow, 40, ReductionMode::kSafe).mismatches.empty());
  const auto fib = GrowthSequence::fibonacci();
  EXPECT_TRUE(reduction_sweep(kPow, fib, 40, ReductionMode::kSafe).mismatches.empty());
}

TEST(Mode, Parse) {
  EXPECT_EQ(parse_reduction_mode("safe"), ReductionMode::kSafe);
  EXPECT_EQ(to_string(ReductionMode::kShifted), "shifted");
  EXPECT_THROW(parse_reduction_mode("nope"), ParseError);
}

}  // namespace
}  // namespace fsx
