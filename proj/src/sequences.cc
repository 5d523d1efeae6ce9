#include "fsx/sequences.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <boost/dynamic_bitset.hpp>

#include "fsx/errors.h"
#include "fsx/representations.h"

namespace fsx {

namespace {

Rational ratio(const BigInt& hi, const BigInt& lo) { return Rational(hi, lo); }

// Next builtin term after `last` given the one before it (0 if none).
BigInt next_builtin(SequenceKind kind, const BigInt& before, const BigInt& last) {
  if (kind == SequenceKind::kPowersOfTwo) return last * 2;
  if (last == 1) return 2;
  return before + last;
}

// Exact minimum consecutive ratio, capped at 2.
Rational max_admissible_rho(const std::vector<BigInt>& terms) {
  Rational best = 2;
  for (std::size_t i = 1; i < terms.size(); ++i) {
    best = std::min(best, ratio(terms[i], terms[i - 1]));
  }
  return best;
}

}  // namespace

std::string to_string(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::kPowersOfTwo:
      return "powers-of-two";
    case SequenceKind::kFibonacci:
      return "fibonacci";
    case SequenceKind::kCustom:
      return "custom";
  }
  return "unknown";
}

GrowthSequence::GrowthSequence(SequenceKind kind, Rational rho, std::string label)
    : kind_(kind), rho_(std::move(rho)), label_(std::move(label)) {}

GrowthSequence GrowthSequence::powers_of_two(const BigInt& bound) {
  GrowthSequence seq(SequenceKind::kPowersOfTwo, Rational(2), "powers-of-two");
  seq.materialize(bound);
  return seq;
}

GrowthSequence GrowthSequence::fibonacci(const BigInt& bound) {
  GrowthSequence seq(SequenceKind::kFibonacci, Rational(3, 2), "fibonacci");
  seq.materialize(bound);
  return seq;
}

GrowthSequence GrowthSequence::custom(std::vector<BigInt> terms,
                                      std::optional<Rational> rho,
                                      std::string label) {
  if (terms.empty()) throw ParseError("custom sequence is empty");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i] <= 0) {
      throw ParseError("term " + std::to_string(i + 1) + " is not positive");
    }
    if (i > 0 && terms[i] <= terms[i - 1]) {
      throw ParseError("term " + std::to_string(i + 1) + " (" + terms[i].str() +
                       ") does not exceed its predecessor");
    }
  }
  Rational r = rho ? *rho : admissible_rho(terms);
  GrowthSequence seq(SequenceKind::kCustom, std::move(r), std::move(label));
  seq.source_ = std::make_shared<const std::vector<BigInt>>(std::move(terms));
  seq.materialize(seq.source_->back());
  return seq;
}

GrowthSequence GrowthSequence::with_rho(Rational rho) const {
  GrowthSequence copy = *this;
  copy.rho_ = std::move(rho);
  return copy;
}

void GrowthSequence::materialize(const BigInt& bound) {
  elements_ = elements_upto(bound);
  decompositions_.clear();
  for (const BigInt& y : elements_) {
    if (auto d = decompose(y)) decompositions_.emplace(y, *d);
  }
}

std::vector<BigInt> GrowthSequence::elements_upto(const BigInt& bound) const {
  std::vector<BigInt> out;
  if (kind_ == SequenceKind::kCustom) {
    for (const BigInt& t : *source_) {
      if (t > bound) break;
      out.push_back(t);
    }
    return out;
  }
  BigInt before = 0;
  BigInt current = 1;
  while (current <= bound) {
    out.push_back(current);
    BigInt next = next_builtin(kind_, before, current);
    before = current;
    current = next;
  }
  return out;
}

std::vector<std::uint64_t> GrowthSequence::small_elements_upto(
    std::uint64_t bound) const {
  std::vector<std::uint64_t> out;
  for (const BigInt& e : elements_upto(BigInt(bound))) {
    out.push_back(e.convert_to<std::uint64_t>());
  }
  return out;
}

bool GrowthSequence::covers(const BigInt& bound) const {
  return kind_ != SequenceKind::kCustom || source_->back() >= bound;
}

void GrowthSequence::require_covers(const BigInt& bound) const {
  if (!covers(bound)) {
    throw PrefixIncomplete("sequence '" + label_ + "' ends at " +
                           source_->back().str() +
                           ", below the required bound " + bound.str());
  }
}

bool GrowthSequence::contains(const BigInt& value) const {
  if (value <= 0) return false;
  switch (kind_) {
    case SequenceKind::kPowersOfTwo:
      return popcount(value) == 1;
    case SequenceKind::kFibonacci: {
      BigInt before = 0;
      BigInt current = 1;
      while (current < value) {
        BigInt next = next_builtin(kind_, before, current);
        before = current;
        current = next;
      }
      return current == value;
    }
    case SequenceKind::kCustom:
      return std::binary_search(source_->begin(), source_->end(), value);
  }
  return false;
}

std::optional<Decomposition> GrowthSequence::decompose(const BigInt& element) const {
  if (element <= 1 || !contains(element)) return std::nullopt;
  if (kind_ == SequenceKind::kPowersOfTwo) {
    return Decomposition{element / 2, element / 2};
  }
  if (kind_ == SequenceKind::kFibonacci) {
    if (element == 2) return Decomposition{1, 1};
    BigInt before = 0;
    BigInt current = 1;
    while (current < element) {
      BigInt next = next_builtin(kind_, before, current);
      before = current;
      current = next;
    }
    return Decomposition{before, element - before};
  }
  // Custom: scan candidate first addends from the largest down.
  const auto& terms = *source_;
  auto upper = std::lower_bound(terms.begin(), terms.end(), element);
  for (auto it = upper; it != terms.begin();) {
    --it;
    const BigInt rest = element - *it;
    if (std::binary_search(terms.begin(), terms.end(), rest)) {
      return Decomposition{*it, rest};
    }
  }
  return std::nullopt;
}

std::vector<Decomposition> GrowthSequence::all_decompositions(
    const BigInt& element) const {
  std::vector<Decomposition> out;
  if (element <= 1) return out;
  const std::vector<BigInt> below = elements_upto(element - 1);
  for (auto it = below.rbegin(); it != below.rend(); ++it) {
    const BigInt rest = element - *it;
    if (rest > *it) break;
    if (std::binary_search(below.begin(), below.end(), rest)) {
      out.push_back(Decomposition{*it, rest});
    }
  }
  return out;
}

GrowthSequence extend_to(const GrowthSequence& seq, const BigInt& bound) {
  if (bound < 1) throw ContractViolation("extend_to: bound must be >= 1");
  seq.require_covers(bound);
  GrowthSequence out = seq;
  out.materialize(bound);
  return out;
}

Rational admissible_rho(const std::vector<BigInt>& terms,
                        std::uint64_t max_denominator) {
  if (terms.size() < 2) return Rational(2);
  Rational min_ratio = ratio(terms[1], terms[0]);
  for (std::size_t i = 2; i < terms.size(); ++i) {
    min_ratio = std::min(min_ratio, ratio(terms[i], terms[i - 1]));
  }
  if (min_ratio >= 2) return Rational(2);
  Rational best = 0;
  const BigInt num = boost::multiprecision::numerator(min_ratio);
  const BigInt den = boost::multiprecision::denominator(min_ratio);
  for (std::uint64_t q = 1; q <= max_denominator; ++q) {
    const BigInt p = (num * q) / den;  // floor(min_ratio * q)
    best = std::max(best, Rational(p, q));
  }
  if (best <= 1) return min_ratio;
  return best;
}

ValidationReport validate(const GrowthSequence& seq) {
  const auto& e = seq.elements();
  if (e.empty()) throw ContractViolation("validate: empty sequence");
  ValidationReport report;
  report.rho = seq.rho();
  report.max_rho = max_admissible_rho(e);

  report.condition_i = e.front() == 1;
  if (!report.condition_i) {
    report.failures.push_back({"i", e.front(), "first element is not 1"});
  }

  report.condition_ii = true;
  std::set<BigInt> earlier;
  for (const BigInt& y : e) {
    if (y > 1) {
      bool found = false;
      for (const BigInt& a : earlier) {
        if (earlier.count(y - a)) {
          found = true;
          break;
        }
      }
      if (!found) {
        report.condition_ii = false;
        report.failures.push_back(
            {"ii", y, "no two earlier elements sum to " + y.str()});
      }
    }
    earlier.insert(y);
  }

  report.condition_iii = seq.rho() > 1 && seq.rho() <= 2;
  if (!report.condition_iii) {
    report.failures.push_back(
        {"iii", 0, "rho = " + to_string(seq.rho()) + " outside (1, 2]"});
  }
  for (std::size_t j = 0; j + 1 < e.size(); ++j) {
    if (Rational(e[j + 1]) < seq.rho() * e[j]) {
      report.condition_iii = false;
      report.failures.push_back({"iii", e[j + 1],
                                 e[j + 1].str() + " < rho * " + e[j].str()});
    }
  }

  report.growth_bound = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] > pow2(i)) {
      report.growth_bound = false;
      report.failures.push_back({"growth_bound", e[i],
                                 "element " + std::to_string(i) + " exceeds 2^" +
                                     std::to_string(i)});
    }
  }
  return report;
}

bool verify_completeness(const GrowthSequence& seq, std::uint64_t n_max) {
  boost::dynamic_bitset<> reach(n_max + 1);
  reach.set(0);
  for (std::uint64_t a : seq.small_elements_upto(n_max)) {
    reach |= reach << a;
  }
  return reach.count() == n_max + 1;
}

std::vector<RegularityViolation> check_regularity(const GrowthSequence& seq,
                                                  std::uint64_t n_max) {
  const RankTable table(seq, n_max);
  std::vector<RegularityViolation> out;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    if (table.rank(n) == RankTable::kUnreachable) {
      throw Unrepresentable(std::to_string(n) + " has no representation in '" +
                            seq.label() + "'");
    }
    if (!table.regular_at(n)) {
      const std::uint32_t distinct = table.min_distinct_length(n);
      out.push_back({n, table.rank(n),
                     distinct == RankTable::kUnreachable ? 0 : distinct,
                     table.shortest(n)});
    }
  }
  return out;
}

GrowthSequence load_custom_sequence(std::istream& in, std::optional<Rational> rho,
                                    std::string label) {
  std::vector<BigInt> terms;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    BigInt value;
    try {
      value = parse_bigint(line);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (terms.empty() && value != 1) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": first term must be 1, got " + value.str());
    }
    if (!terms.empty() && value <= terms.back()) {
      throw ParseError("line " + std::to_string(line_no) + ": " + value.str() +
                       " does not exceed previous term " + terms.back().str());
    }
    terms.push_back(std::move(value));
  }
  if (terms.empty()) throw ParseError("sequence file contains no terms");
  return GrowthSequence::custom(std::move(terms), std::move(rho), std::move(label));
}

GrowthSequence load_custom_sequence_file(const std::string& path,
                                         std::optional<Rational> rho) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open sequence file '" + path + "'");
  return load_custom_sequence(in, std::move(rho), path);
}

std::vector<BigInt> thirteen_doubling_terms(const BigInt& bound) {
  std::vector<BigInt> out;
  for (int head : {1, 2, 3, 6, 12}) {
    if (head > bound) return out;
    out.emplace_back(head);
  }
  for (BigInt t = 13; t <= bound; t *= 2) out.push_back(t);
  return out;
}

std::vector<BigInt> short_nonregular_terms() { return {1, 2, 3, 5, 6, 12}; }

}  // namespace fsx
