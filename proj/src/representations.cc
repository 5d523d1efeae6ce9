#include "fsx/representations.h"

#include <algorithm>
#include <functional>

#include "fsx/errors.h"

namespace fsx {

namespace {

constexpr std::uint32_t kInf = RankTable::kUnreachable;

Representation binary_expansion(const BigInt& n) {
  Representation rep;
  const std::uint64_t bits = bit_length(n);
  for (std::uint64_t i = 0; i < bits; ++i) {
    if (boost::multiprecision::bit_test(n, i)) rep.add(pow2(i));
  }
  return rep;
}

void check_budget(const BigInt& n, std::uint64_t budget, const char* what) {
  if (n > budget) {
    throw BudgetExceeded(std::string(what) + ": n = " + n.str() +
                         " exceeds budget " + std::to_string(budget));
  }
}

}  // namespace

RankTable::RankTable(const GrowthSequence& seq, std::uint64_t bound,
                     std::uint64_t budget)
    : bound_(bound) {
  if (bound > budget) {
    throw BudgetExceeded("rank table bound " + std::to_string(bound) +
                         " exceeds budget " + std::to_string(budget));
  }
  seq.require_covers(BigInt(bound));
  elements_ = seq.small_elements_upto(bound);

  rank_.assign(bound + 1, kInf);
  rank_[0] = 0;
  for (std::uint64_t n = 1; n <= bound; ++n) {
    std::uint32_t best = kInf;
    for (std::uint64_t a : elements_) {
      if (a > n) break;
      const std::uint32_t r = rank_[n - a];
      if (r != kInf && r + 1 < best) best = r + 1;
    }
    rank_[n] = best;
  }

  distinct_.assign(bound + 1, kInf);
  distinct_[0] = 0;
  for (std::uint64_t a : elements_) {
    for (std::uint64_t s = bound; s >= a; --s) {
      const std::uint32_t r = distinct_[s - a];
      if (r != kInf && r + 1 < distinct_[s]) distinct_[s] = r + 1;
    }
  }
}

void RankTable::check(std::uint64_t n) const {
  if (n > bound_) {
    throw ContractViolation("rank table queried at " + std::to_string(n) +
                            " beyond its bound " + std::to_string(bound_));
  }
}

std::uint32_t RankTable::rank(std::uint64_t n) const {
  check(n);
  return rank_[n];
}

std::uint32_t RankTable::min_distinct_length(std::uint64_t n) const {
  check(n);
  return distinct_[n];
}

Representation RankTable::shortest(std::uint64_t n) const {
  check(n);
  if (rank_[n] == kInf) {
    throw Unrepresentable(std::to_string(n) + " has no representation");
  }
  Representation rep;
  while (n > 0) {
    for (auto it = elements_.rbegin(); it != elements_.rend(); ++it) {
      if (*it <= n && rank_[n - *it] + 1 == rank_[n]) {
        rep.add(BigInt(*it));
        n -= *it;
        break;
      }
    }
  }
  return rep;
}

RankInfo rank_info(const GrowthSequence& seq, const BigInt& n,
                   std::uint64_t budget) {
  if (n < 0) throw ContractViolation("rank of a negative number");
  if (n == 0) return {0, RankMethod::kDynamicProgram};
  if (n <= budget) {
    const std::uint64_t small = n.convert_to<std::uint64_t>();
    const RankTable table(seq, small, budget);
    const std::uint32_t r = table.rank(small);
    if (r == RankTable::kUnreachable) {
      throw Unrepresentable(n.str() + " has no representation in '" +
                            seq.label() + "'");
    }
    return {r, RankMethod::kDynamicProgram};
  }
  switch (seq.kind()) {
    case SequenceKind::kPowersOfTwo:
      return {popcount(n), RankMethod::kBinaryDigitSum};
    case SequenceKind::kFibonacci:
      return {zeckendorf(n).length(), RankMethod::kZeckendorf};
    case SequenceKind::kCustom:
      break;
  }
  check_budget(n, budget, "rank");
  return {};
}

std::uint64_t rank(const GrowthSequence& seq, const BigInt& n,
                   std::uint64_t budget) {
  return rank_info(seq, n, budget).rank;
}

std::vector<Representation> shortest_representations(const GrowthSequence& seq,
                                                     const BigInt& n,
                                                     std::uint64_t budget) {
  if (n < 1) throw ContractViolation("shortest_representations: n must be >= 1");
  if (n > budget && seq.kind() == SequenceKind::kPowersOfTwo) {
    return {binary_expansion(n)};
  }
  check_budget(n, budget, "shortest_representations");

  const std::uint64_t target = n.convert_to<std::uint64_t>();
  const RankTable table(seq, target, std::max(budget, target));
  if (table.rank(target) == RankTable::kUnreachable) {
    throw Unrepresentable(n.str() + " has no representation");
  }
  const auto elements = table.elements();
  std::vector<Representation> out;
  std::vector<std::uint64_t> chosen;

  // Nonincreasing element order; every prefix of a shortest representation
  // leaves a remainder whose rank is exactly the number of terms still due.
  std::function<void(std::uint64_t, std::uint32_t, std::size_t)> walk =
      [&](std::uint64_t remaining, std::uint32_t terms_left, std::size_t limit) {
        if (remaining == 0) {
          Representation rep;
          for (std::uint64_t c : chosen) rep.add(BigInt(c));
          out.push_back(std::move(rep));
          return;
        }
        for (std::size_t i = limit; i-- > 0;) {
          const std::uint64_t a = elements[i];
          if (a > remaining) continue;
          if (table.rank(remaining - a) + 1 != terms_left) continue;
          chosen.push_back(a);
          walk(remaining - a, terms_left - 1, i + 1);
          chosen.pop_back();
        }
      };
  walk(target, table.rank(target), elements.size());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Representation> mult1_shortest(const GrowthSequence& seq,
                                             const BigInt& n,
                                             std::uint64_t budget) {
  if (n < 1) throw ContractViolation("mult1_shortest: n must be >= 1");
  if (n > budget) {
    if (seq.kind() == SequenceKind::kPowersOfTwo) return binary_expansion(n);
    if (seq.kind() == SequenceKind::kFibonacci) return zeckendorf(n);
    check_budget(n, budget, "mult1_shortest");
  }
  const std::uint64_t target = n.convert_to<std::uint64_t>();
  const std::uint64_t r = rank(seq, n, budget);
  const std::vector<std::uint64_t> elements = seq.small_elements_upto(target);

  // 0/1 min-count DP with a per-element "taken" flag for reconstruction.
  // Ties prefer taking, so the backward walk favours larger elements.
  std::vector<std::uint32_t> best(target + 1, kInf);
  best[0] = 0;
  std::vector<std::vector<bool>> taken(elements.size(),
                                       std::vector<bool>(target + 1, false));
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const std::uint64_t a = elements[i];
    for (std::uint64_t s = target; s >= a; --s) {
      const std::uint32_t via = best[s - a];
      if (via != kInf && via + 1 <= best[s]) {
        best[s] = via + 1;
        taken[i][s] = true;
      }
    }
  }
  if (best[target] != r) return std::nullopt;
  Representation rep;
  std::uint64_t s = target;
  for (std::size_t i = elements.size(); i-- > 0 && s > 0;) {
    if (taken[i][s]) {
      rep.add(BigInt(elements[i]));
      s -= elements[i];
    }
  }
  if (s != 0 || rep.length() != r) {
    throw ConstructionFailed("mult1_shortest reconstruction failed for " + n.str());
  }
  return rep;
}

Representation split_to_length(const GrowthSequence& seq,
                               const Representation& rep,
                               std::uint64_t target_length) {
  if (target_length < rep.length()) {
    throw ContractViolation("split_to_length: target " +
                            std::to_string(target_length) +
                            " is below current length " +
                            std::to_string(rep.length()));
  }
  if (BigInt(target_length) > rep.value()) {
    throw Infeasible("split_to_length: target " + std::to_string(target_length) +
                     " exceeds the all-ones length " + rep.value().str());
  }
  Representation out = rep;
  while (out.length() < target_length) {
    const BigInt largest = out.terms().begin()->first;
    const auto d = seq.decompose(largest);
    if (!d) {
      throw ContractViolation("split_to_length: " + largest.str() +
                              " has no decomposition in '" + seq.label() + "'");
    }
    out.remove_one(largest);
    out.add(d->first);
    out.add(d->second);
  }
  return out;
}

std::uint64_t binary_digit_sum(const BigInt& n) {
  if (n < 1) throw ContractViolation("binary_digit_sum: n must be >= 1");
  return popcount(n);
}

Representation zeckendorf(const BigInt& n) {
  std::vector<BigInt> fibs;
  BigInt before = 1;
  BigInt current = 2;
  fibs.push_back(1);
  while (current <= n) {
    fibs.push_back(current);
    BigInt next = before + current;
    before = current;
    current = next;
  }
  Representation rep;
  BigInt rest = n;
  for (auto it = fibs.rbegin(); it != fibs.rend() && rest > 0; ++it) {
    if (*it <= rest) {
      rep.add(*it);
      rest -= *it;
    }
  }
  return rep;
}

}  // namespace fsx
