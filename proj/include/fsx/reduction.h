#ifndef FSX_REDUCTION_H_
#define FSX_REDUCTION_H_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fsx/bigint.h"
#include "fsx/sequences.h"

namespace fsx {

inline constexpr std::uint64_t kDefaultSubsetSumBudget = std::uint64_t{1} << 28;

// kPrefix: B1, B2 are the longest prefixes with sum <= M, z = M*x + y.
// kShifted: same prefixes, multiplier M + 1.
// kSafe: every element <= M, multiplier 1 + |B1| * sum(B2), which exceeds
//        the y-part of any subset of Z and so decodes exactly.
enum class ReductionMode { kPrefix, kShifted, kSafe };

std::string to_string(ReductionMode mode);
ReductionMode parse_reduction_mode(std::string_view text);

struct ReducedInstance {
  ReductionMode mode = ReductionMode::kPrefix;
  BigInt m;
  BigInt multiplier;
  BigInt p1;
  BigInt p2;
  std::vector<BigInt> b1;
  std::vector<BigInt> b2;
  std::vector<BigInt> z;  // i-major: multiplier * b1[i] + b2[j]
  BigInt target;

  bool operator==(const ReducedInstance&) const = default;
};

// Longest prefix of the sequence whose total stays <= bound.
std::vector<BigInt> prefix_within(const GrowthSequence& seq, const BigInt& bound);

// Throws ContractViolation when p is outside [1, M]^2 or Z has duplicates.
ReducedInstance build_reduced_instance(const GrowthSequence& seq1,
                                       const GrowthSequence& seq2, const BigInt& m,
                                       const BigInt& p1, const BigInt& p2,
                                       ReductionMode mode = ReductionMode::kPrefix);

// 0/1 subset-sum: is target a sum of distinct elements of Z?
bool decide_via_reduction(const ReducedInstance& instance,
                          std::uint64_t budget = kDefaultSubsetSumBudget);

// (quotient, remainder) of a Z-subset sum by the multiplier.
std::pair<BigInt, BigInt> decode_sum(const ReducedInstance& instance, const BigInt& sum);

// n / log2(max element). Throws UndefinedDensity when the maximum is 1.
double knapsack_density(std::span<const BigInt> elements);

struct SweepMismatch {
  std::uint64_t p1 = 0;
  std::uint64_t p2 = 0;
  bool reduction = false;
  bool oracle = false;
  bool operator==(const SweepMismatch&) const = default;
};

struct SweepReport {
  std::uint64_t m = 0;
  ReductionMode mode = ReductionMode::kPrefix;
  std::uint64_t cells = 0;
  std::vector<SweepMismatch> mismatches;
  bool operator==(const SweepReport&) const = default;
};

// Compares decide_via_reduction against the FS oracle for all
// 1 <= p1, p2 <= M.
SweepReport reduction_sweep(const GrowthSequence& seq1, const GrowthSequence& seq2,
                            std::uint64_t m, ReductionMode mode);

}  // namespace fsx

#endif  // FSX_REDUCTION_H_
