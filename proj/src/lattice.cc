#include "fsx/lattice.h"

#include <bit>

#include "fsx/errors.h"
#include "fsx/representations.h"

namespace fsx {

namespace {

// 2^b <= a, for a, b >= 1.
bool power_below(const BigInt& b, const BigInt& a) {
  // 2^b <= a  <=>  b <= floor(log2 a) = bit_length(a) - 1
  return b <= BigInt(bit_length(a) - 1);
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt dense_offset_base(std::uint64_t r) { return pow2(std::uint64_t{1} << (r + 1)); }

}  // namespace

bool in_exceptional_set(const BigInt& a, const BigInt& b) {
  if (a < 1 || b < 1) throw ContractViolation("exceptional set is defined on N^2");
  return power_below(b, a) || power_below(a, b);
}

std::vector<LatticePoint> verify_complement_coverage(std::uint64_t n) {
  const GrowthSequence powers = GrowthSequence::powers_of_two(BigInt(n));
  const ClosedFormDecider decider({powers, powers}, BigInt(n));
  std::vector<LatticePoint> violations;
  for (std::uint64_t a = 1; a <= n; ++a) {
    for (std::uint64_t b = 1; b <= n; ++b) {
      if (in_exceptional_set(a, b)) continue;
      LatticePoint p({BigInt(a), BigInt(b)});
      if (!decider.decide(p).member) violations.push_back(std::move(p));
    }
  }
  return violations;
}

EmptySquareCertificate empty_square(std::uint64_t d) {
  if (d < 1) throw ContractViolation("empty_square: D must be >= 1");
  EmptySquareCertificate cert;
  cert.square.side = d;
  cert.square.y0 = 1;
  cert.square.x0 = 0;
  for (std::uint64_t i = d + 1; i <= 2 * d; ++i) cert.square.x0 += pow2(i);

  cert.all_excluded = true;
  cert.inside_exceptional_set = true;
  for (std::uint64_t k = 1; k <= d; ++k) {
    const BigInt x = cert.square.x0 + k;
    const std::uint64_t r = binary_digit_sum(x);
    cert.per_point_rank.push_back(r);
    // rank(x) > D >= j rules out (x, j) for every j <= D.
    if (r <= d) cert.all_excluded = false;
    for (std::uint64_t j = 1; j <= d; ++j) {
      if (!in_exceptional_set(x, BigInt(j))) cert.inside_exceptional_set = false;
    }
  }
  return cert;
}

bool empty_square_oracle_check(const EmptySquareCertificate& certificate,
                               std::uint64_t budget) {
  const std::uint64_t d = certificate.square.side;
  const std::uint64_t x_max = to_u64(certificate.square.x0 + d, "square corner");
  const std::uint64_t y0 = to_u64(certificate.square.y0, "square corner");
  const std::uint64_t y_max = y0 + d - 1;
  const GrowthSequence powers = GrowthSequence::powers_of_two(BigInt(x_max));
  const std::vector<GrowthSequence> seqs{powers, powers};
  const OracleGrid grid(seqs, {x_max, y_max}, budget);
  const std::uint64_t x0 = to_u64(certificate.square.x0, "square corner");
  for (std::uint64_t k = 1; k <= d; ++k) {
    for (std::uint64_t j = y0; j <= y_max; ++j) {
      const std::uint64_t coords[] = {x0 + k, j};
      if (grid.reachable(coords)) return false;
    }
  }
  return true;
}

std::int64_t floor_r_minus_log2(std::uint64_t r, std::uint64_t k) {
  if (k < 1) throw ContractViolation("floor_r_minus_log2: k must be >= 1");
  // ceil(log2 k) = bit_width(k - 1)
  const auto ceil_log2 = static_cast<std::int64_t>(std::bit_width(k - 1));
  return static_cast<std::int64_t>(r) - ceil_log2;
}

BigInt dense_count_by_binomials(std::uint64_t r) {
  BigInt total = 0;
  for (std::uint64_t k = 1; k <= r + 1; ++k) {
    const std::int64_t top = floor_r_minus_log2(r, k);
    if (top < 0) continue;
    total += binomial(r, k - 1) * (top + 1);
  }
  return total;
}

BigInt dense_count_by_enumeration(std::uint64_t r) {
  if (r >= 63) throw BudgetExceeded("dense_count_by_enumeration: R too large");
  const std::uint64_t side = std::uint64_t{1} << r;
  BigInt total = 0;
  for (std::uint64_t kappa = 0; kappa < side; ++kappa) {
    // s(2^(2^(R+1)) + kappa) = 1 + s(kappa) since kappa < 2^R.
    const std::uint64_t s = 1 + static_cast<std::uint64_t>(std::popcount(kappa));
    std::uint64_t count = 0;
    for (std::uint64_t height = s; height <= side; height <<= 1) ++count;
    total += count;
  }
  return total;
}

DenseSquareCount dense_square_count(std::uint64_t r) {
  if (r < 6) {
    throw ContractViolation("dense_square_count: R = " + std::to_string(r) +
                            " < 6, where the lower bound is not guaranteed");
  }
  DenseSquareCount out;
  out.r = r;
  out.m = pow2(r);
  out.exact_count = dense_count_by_binomials(r);
  out.enumerated_count = dense_count_by_enumeration(r);
  out.paper_bound = out.m * r / 4;
  out.routes_agree = out.exact_count == out.enumerated_count;
  out.meets_bound = out.exact_count >= out.paper_bound;
  return out;
}

bool dense_offset_identity_holds(std::uint64_t r) {
  const BigInt base = dense_offset_base(r);
  const std::uint64_t side = std::uint64_t{1} << r;
  for (std::uint64_t kappa = 0; kappa < side; ++kappa) {
    if (popcount(base + kappa) !=
        1 + static_cast<std::uint64_t>(std::popcount(kappa))) {
      return false;
    }
  }
  return true;
}

std::vector<LatticePoint> horizontal_witness(const BigInt& n, std::uint64_t f) {
  if (n < 1) throw ContractViolation("horizontal_witness: n must be >= 1");
  std::vector<LatticePoint> points;
  const BigInt height = pow2(f);
  for (std::uint64_t i = bit_length(n); i-- > 0;) {
    if (boost::multiprecision::bit_test(n, i)) {
      points.emplace_back(std::vector<BigInt>{pow2(i), height});
    }
  }
  return points;
}

}  // namespace fsx
