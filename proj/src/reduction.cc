#include "fsx/reduction.h"

#include <set>

#include <boost/dynamic_bitset.hpp>

#include "fsx/errors.h"
#include "fsx/membership.h"

namespace fsx {

std::string to_string(ReductionMode mode) {
  switch (mode) {
    case ReductionMode::kPrefix:
      return "prefix";
    case ReductionMode::kShifted:
      return "shifted";
    case ReductionMode::kSafe:
      return "safe";
  }
  return "unknown";
}

ReductionMode parse_reduction_mode(std::string_view text) {
  if (text == "prefix") return ReductionMode::kPrefix;
  if (text == "shifted") return ReductionMode::kShifted;
  if (text == "safe") return ReductionMode::kSafe;
  throw ParseError("unknown reduction mode '" + std::string(text) +
                   "' (expected prefix, shifted or safe)");
}

std::vector<BigInt> prefix_within(const GrowthSequence& seq, const BigInt& bound) {
  seq.require_covers(bound);
  std::vector<BigInt> out;
  BigInt total = 0;
  for (const BigInt& x : seq.elements_upto(bound)) {
    if (total + x > bound) break;
    total += x;
    out.push_back(x);
  }
  return out;
}

ReducedInstance build_reduced_instance(const GrowthSequence& seq1,
                                       const GrowthSequence& seq2, const BigInt& m,
                                       const BigInt& p1, const BigInt& p2,
                                       ReductionMode mode) {
  if (p1 < 1 || p2 < 1 || p1 > m || p2 > m) {
    throw ContractViolation("reduction requires 1 <= p1, p2 <= M, got (" + p1.str() +
                            ", " + p2.str() + ") with M = " + m.str());
  }
  ReducedInstance inst;
  inst.mode = mode;
  inst.m = m;
  inst.p1 = p1;
  inst.p2 = p2;
  if (mode == ReductionMode::kSafe) {
    seq1.require_covers(m);
    seq2.require_covers(m);
    inst.b1 = seq1.elements_upto(m);
    inst.b2 = seq2.elements_upto(m);
    BigInt y_total = 0;
    for (const BigInt& y : inst.b2) y_total += y;
    inst.multiplier = 1 + BigInt(inst.b1.size()) * y_total;
  } else {
    inst.b1 = prefix_within(seq1, m);
    inst.b2 = prefix_within(seq2, m);
    inst.multiplier = mode == ReductionMode::kPrefix ? m : m + 1;
  }

  std::set<BigInt> seen;
  for (const BigInt& x : inst.b1) {
    for (const BigInt& y : inst.b2) {
      BigInt z = inst.multiplier * x + y;
      if (!seen.insert(z).second) {
        throw ContractViolation("Z contains the duplicate value " + z.str() +
                                " (from x = " + x.str() + ", y = " + y.str() +
                                "); subset sums over a multiset are not FS");
      }
      inst.z.push_back(std::move(z));
    }
  }
  inst.target = inst.multiplier * p1 + p2;
  return inst;
}

bool decide_via_reduction(const ReducedInstance& instance, std::uint64_t budget) {
  if (instance.target > budget) {
    throw BudgetExceeded("subset-sum target " + instance.target.str() +
                         " exceeds the budget " + std::to_string(budget));
  }
  const std::uint64_t target = instance.target.convert_to<std::uint64_t>();
  boost::dynamic_bitset<> reach(target + 1);
  reach.set(0);
  for (const BigInt& z : instance.z) {
    if (z > target) continue;
    reach |= reach << z.convert_to<std::uint64_t>();
  }
  return reach.test(target);
}

std::pair<BigInt, BigInt> decode_sum(const ReducedInstance& instance, const BigInt& sum) {
  return {sum / instance.multiplier, sum % instance.multiplier};
}

double knapsack_density(std::span<const BigInt> elements) {
  if (elements.empty()) throw ContractViolation("knapsack_density: empty instance");
  BigInt largest = 0;
  for (const BigInt& e : elements) {
    if (e < 1) throw ContractViolation("knapsack elements must be positive");
    largest = std::max(largest, e);
  }
  if (largest == 1) throw UndefinedDensity("density undefined: max element is 1");
  return static_cast<double>(elements.size()) / log2_of(largest);
}

SweepReport reduction_sweep(const GrowthSequence& seq1, const GrowthSequence& seq2,
                            std::uint64_t m, ReductionMode mode) {
  SweepReport report;
  report.m = m;
  report.mode = mode;
  const std::vector<GrowthSequence> seqs{seq1, seq2};
  const OracleGrid oracle(seqs, {m, m});
  for (std::uint64_t p1 = 1; p1 <= m; ++p1) {
    for (std::uint64_t p2 = 1; p2 <= m; ++p2) {
      const auto inst = build_reduced_instance(seq1, seq2, BigInt(m), BigInt(p1),
                                               BigInt(p2), mode);
      const bool reduced = decide_via_reduction(inst);
      const std::uint64_t coords[] = {p1, p2};
      const bool exact = oracle.reachable(coords);
      ++report.cells;
      if (reduced != exact) report.mismatches.push_back({p1, p2, reduced, exact});
    }
  }
  return report;
}

}  // namespace fsx
