#ifndef FSX_MEMBERSHIP_H_
#define FSX_MEMBERSHIP_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fsx/bigint.h"
#include "fsx/representations.h"
#include "fsx/sequences.h"

namespace fsx {

inline constexpr std::uint64_t kDefaultOracleBudget = std::uint64_t{1} << 24;

// A point of N^k; every coordinate is >= 1.
class LatticePoint {
 public:
  explicit LatticePoint(std::vector<BigInt> coords);
  // "15,257"
  static LatticePoint parse(std::string_view text);

  std::size_t dimension() const { return coords_.size(); }
  const BigInt& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<BigInt>& coords() const { return coords_; }
  std::string to_string() const;

  auto operator<=>(const LatticePoint&) const = default;

 private:
  std::vector<BigInt> coords_;
};

// B_k(N) = [1, N]^k.
struct Box {
  std::size_t k = 2;
  std::uint64_t n = 1;
};

struct Verdict {
  bool member = false;
  std::vector<std::uint64_t> ranks;
  std::optional<std::vector<LatticePoint>> witness;
  std::string reason;

  bool operator==(const Verdict&) const = default;
};

// Decides membership in FS(A_1 x ... x A_k) for regular sequences:
// p is a member iff min_i p_i >= max_j rank(p_j).
//
// Rank tables are built once up to `bound`; every sequence must be regular
// on [1, bound] (RegularityRequired otherwise). Above the rank budget only
// builtin kinds are accepted, with their closed-form ranks.
class ClosedFormDecider {
 public:
  ClosedFormDecider(std::vector<GrowthSequence> seqs, const BigInt& bound,
                    std::uint64_t budget = kDefaultRankBudget);

  const std::vector<GrowthSequence>& sequences() const { return seqs_; }
  std::uint64_t rank_of(std::size_t axis, const BigInt& value) const;

  Verdict decide(const LatticePoint& p, bool with_witness = false) const;
  // Pairwise distinct points of the product set summing to p.
  // Throws ContractViolation when p is not a member.
  std::vector<LatticePoint> witness(const LatticePoint& p) const;

 private:
  void check_dimension(const LatticePoint& p) const;

  std::vector<GrowthSequence> seqs_;
  std::vector<std::optional<RankTable>> tables_;
  std::uint64_t budget_;
};

Verdict decide_closed_form(std::span<const GrowthSequence> seqs,
                           const LatticePoint& p, bool with_witness = false);
std::vector<LatticePoint> construct_witness(std::span<const GrowthSequence> seqs,
                                            const LatticePoint& p);

// Empty when `witness` is pairwise distinct, draws coordinate j from A_j,
// and sums to p; otherwise a description of the first defect.
std::optional<std::string> check_witness(std::span<const GrowthSequence> seqs,
                                         const LatticePoint& p,
                                         std::span<const LatticePoint> witness);

// Exact FS membership for every point of the box [0, e_1] x ... x [0, e_k]:
// a 0/1 DP that adds each product-set element (lexicographic order) at most
// once. Supports k in {2, 3}.
class OracleGrid {
 public:
  OracleGrid(std::span<const GrowthSequence> seqs,
             std::vector<std::uint64_t> extents,
             std::uint64_t budget = kDefaultOracleBudget);

  const std::vector<std::uint64_t>& extents() const { return extents_; }
  bool reachable(std::span<const std::uint64_t> coords) const;
  bool contains(const LatticePoint& p) const;

 private:
  std::size_t flat_index(std::span<const std::uint64_t> coords) const;

  std::vector<std::uint64_t> extents_;
  std::vector<std::uint64_t> strides_;
  std::vector<std::uint8_t> cells_;
};

bool oracle_membership(std::span<const GrowthSequence> seqs, const LatticePoint& p,
                       std::uint64_t budget = kDefaultOracleBudget);

struct MembershipGrid {
  std::size_t k = 2;
  std::uint64_t n = 1;
  // Row-major over [1, n]^k, first coordinate slowest.
  std::vector<std::uint8_t> member;
  bool cross_checked = false;
  std::vector<LatticePoint> mismatches;

  bool at(std::span<const std::uint64_t> coords) const;
  std::uint64_t member_count() const;
};

// Closed-form verdicts over B_k(N). With cross_check the oracle is run on
// the same box and every disagreement is recorded.
MembershipGrid scan_box(std::span<const GrowthSequence> seqs, const Box& box,
                        bool cross_check = false,
                        std::uint64_t budget = kDefaultOracleBudget);

}  // namespace fsx

#endif  // FSX_MEMBERSHIP_H_
