#ifndef FSX_REPRESENTATIONS_H_
#define FSX_REPRESENTATIONS_H_

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "fsx/bigint.h"
#include "fsx/representation.h"
#include "fsx/sequences.h"

namespace fsx {

inline constexpr std::uint64_t kDefaultRankBudget = 1'000'000;
inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000;

// Ranks (repetitions allowed) and shortest distinct lengths for every
// n in [0, bound], from an unbounded min-coin DP and a 0/1 min-count DP
// over the elements <= bound.
class RankTable {
 public:
  static constexpr std::uint32_t kUnreachable =
      std::numeric_limits<std::uint32_t>::max();

  // Throws BudgetExceeded if bound > budget, PrefixIncomplete if a custom
  // sequence ends below bound.
  RankTable(const GrowthSequence& seq, std::uint64_t bound,
            std::uint64_t budget = kDefaultRankBudget);

  std::uint64_t bound() const { return bound_; }
  std::span<const std::uint64_t> elements() const { return elements_; }

  // kUnreachable when n has no representation.
  std::uint32_t rank(std::uint64_t n) const;
  std::uint32_t min_distinct_length(std::uint64_t n) const;
  bool regular_at(std::uint64_t n) const {
    return rank(n) != kUnreachable && rank(n) == min_distinct_length(n);
  }
  // A shortest representation; each step takes the largest element that
  // keeps the remainder on a shortest path.
  Representation shortest(std::uint64_t n) const;

 private:
  void check(std::uint64_t n) const;

  std::uint64_t bound_;
  std::vector<std::uint64_t> elements_;
  std::vector<std::uint32_t> rank_;
  std::vector<std::uint32_t> distinct_;
};

enum class RankMethod { kDynamicProgram, kBinaryDigitSum, kZeckendorf };

struct RankInfo {
  std::uint64_t rank = 0;
  RankMethod method = RankMethod::kDynamicProgram;
};

// rank(0) = 0. Up to `budget` the min-coin DP is used. Above it, powers of
// two use the binary digit sum and Fibonacci uses the Zeckendorf term count
// (both provably shortest); custom sequences raise BudgetExceeded.
RankInfo rank_info(const GrowthSequence& seq, const BigInt& n,
                   std::uint64_t budget = kDefaultRankBudget);
std::uint64_t rank(const GrowthSequence& seq, const BigInt& n,
                   std::uint64_t budget = kDefaultRankBudget);

// Every representation of length rank(n), sorted. Above the budget only
// powers of two are answered (the binary expansion is the unique one).
std::vector<Representation> shortest_representations(
    const GrowthSequence& seq, const BigInt& n,
    std::uint64_t budget = kDefaultEnumerationBudget);

// A distinct representation of length rank(n), preferring larger elements.
std::optional<Representation> mult1_shortest(
    const GrowthSequence& seq, const BigInt& n,
    std::uint64_t budget = kDefaultRankBudget);

// Repeatedly replaces one copy of the largest element > 1 by its witness
// pair until the length is exactly target_length. Throws Infeasible when
// target_length > value and ContractViolation when it is below the
// current length.
Representation split_to_length(const GrowthSequence& seq,
                               const Representation& rep,
                               std::uint64_t target_length);

std::uint64_t binary_digit_sum(const BigInt& n);

// Zeckendorf expansion over 1,2,3,5,8,...
Representation zeckendorf(const BigInt& n);

}  // namespace fsx

#endif  // FSX_REPRESENTATIONS_H_
