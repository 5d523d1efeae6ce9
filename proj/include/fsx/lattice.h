#ifndef FSX_LATTICE_H_
#define FSX_LATTICE_H_

#include <cstdint>
#include <vector>

#include "fsx/bigint.h"
#include "fsx/membership.h"

// Geometry of FS({2^m} x {2^k}).
namespace fsx {

// E = {(a,b): 2^b <= a} U {(a,b): 2^a <= b}, with exact integer tests.
bool in_exceptional_set(const BigInt& a, const BigInt& b);

// Points of B(N) outside E that fail the closed-form criterion (expected
// to be none).
std::vector<LatticePoint> verify_complement_coverage(std::uint64_t n);

struct SquareSpec {
  BigInt x0;
  BigInt y0;
  std::uint64_t side = 1;

  bool operator==(const SquareSpec&) const = default;
};

// Square (x0 + k, j), 1 <= k, j <= D with x0 = 2^(D+1) + ... + 2^(2D).
struct EmptySquareCertificate {
  SquareSpec square;
  std::vector<std::uint64_t> per_point_rank;  // rank(x0 + k), k = 1..D
  bool all_excluded = false;    // every rank(x0 + k) > D
  bool inside_exceptional_set = false;

  bool operator==(const EmptySquareCertificate&) const = default;
};

EmptySquareCertificate empty_square(std::uint64_t d);

// Runs the FS oracle on [0, x0 + D] x [0, D] and confirms none of the D^2
// square points is reachable.
bool empty_square_oracle_check(const EmptySquareCertificate& certificate,
                               std::uint64_t budget = kDefaultOracleBudget);

struct DenseSquareCount {
  std::uint64_t r = 0;
  BigInt m;                 // 2^R
  BigInt exact_count;       // binomial-sum route
  BigInt enumerated_count;  // offset enumeration route
  BigInt paper_bound;       // M log2(M) / 4 = 2^R * R / 4
  bool routes_agree = false;
  bool meets_bound = false;

  bool operator==(const DenseSquareCount&) const = default;
};

// floor(R - log2 k) for k >= 1, computed as R - ceil(log2 k) on integers.
// Returns a signed value; negative when k > 2^R.
std::int64_t floor_r_minus_log2(std::uint64_t r, std::uint64_t k);

// Counts points (n, s(n) * 2^f), f >= 0, with
// 2^(2^(R+1)) <= n <= 2^(2^(R+1)) + 2^R - 1 and s(n) * 2^f <= 2^R.
// Throws ContractViolation for R < 6.
DenseSquareCount dense_square_count(std::uint64_t r);
BigInt dense_count_by_binomials(std::uint64_t r);
BigInt dense_count_by_enumeration(std::uint64_t r);

// Materializes n = 2^(2^(R+1)) + kappa and checks s(n) = 1 + s(kappa) for
// every offset kappa < 2^R.
bool dense_offset_identity_holds(std::uint64_t r);

// Distinct points (2^i, 2^f), one per binary digit i of n, summing to
// (n, s(n) * 2^f).
std::vector<LatticePoint> horizontal_witness(const BigInt& n, std::uint64_t f);

}  // namespace fsx

#endif  // FSX_LATTICE_H_
