#ifndef FSX_SEQUENCES_H_
#define FSX_SEQUENCES_H_

#include <cstdint>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fsx/bigint.h"
#include "fsx/representation.h"

namespace fsx {

enum class SequenceKind { kPowersOfTwo, kFibonacci, kCustom };

std::string to_string(SequenceKind kind);

// y = first + second with first >= second, both elements smaller than y.
struct Decomposition {
  BigInt first;
  BigInt second;

  bool operator==(const Decomposition&) const = default;
};

// A strictly increasing integer sequence starting at 1 together with a growth
// ratio rho and, for every materialized element y > 1, a witness y = a + b
// with a, b earlier elements.
//
// Builtin kinds (powers of two, Fibonacci 1,2,3,5,...) are infinite and can
// be extended to any bound. A custom sequence is the finite list it was built
// from; elements above its last term are unknown, so operations that need
// every element below some bound raise PrefixIncomplete past the end.
//
// Values are immutable; extension returns a new value.
class GrowthSequence {
 public:
  static GrowthSequence powers_of_two(const BigInt& bound = 1024);
  static GrowthSequence fibonacci(const BigInt& bound = 1024);
  // Terms must be positive and strictly increasing (checked, ParseError
  // otherwise). Conditions (i)-(iii) are not enforced here; see validate().
  // Without an explicit rho, the largest admissible small-denominator rho is
  // derived from the terms.
  static GrowthSequence custom(std::vector<BigInt> terms,
                               std::optional<Rational> rho = std::nullopt,
                               std::string label = "custom");

  SequenceKind kind() const { return kind_; }
  const Rational& rho() const { return rho_; }
  const std::string& label() const { return label_; }
  // Materialized prefix, ascending.
  const std::vector<BigInt>& elements() const { return elements_; }
  const std::map<BigInt, Decomposition>& decompositions() const {
    return decompositions_;
  }

  GrowthSequence with_rho(Rational rho) const;

  // Every known element <= bound. Never throws; for custom sequences this
  // is a truncation of the supplied list.
  std::vector<BigInt> elements_upto(const BigInt& bound) const;
  // Same, as machine words. Throws BudgetExceeded if bound exceeds 64 bits.
  std::vector<std::uint64_t> small_elements_upto(std::uint64_t bound) const;
  // True when every element <= bound is known.
  bool covers(const BigInt& bound) const;
  // Throws PrefixIncomplete unless covers(bound).
  void require_covers(const BigInt& bound) const;

  bool contains(const BigInt& value) const;
  // The deterministic condition-(ii) witness: largest first addend. Empty for
  // 1, for values outside the sequence, and for elements with no witness.
  std::optional<Decomposition> decompose(const BigInt& element) const;
  // Every two-term split into smaller elements, first >= second.
  std::vector<Decomposition> all_decompositions(const BigInt& element) const;

 private:
  friend GrowthSequence extend_to(const GrowthSequence& seq, const BigInt& bound);

  GrowthSequence(SequenceKind kind, Rational rho, std::string label);
  void materialize(const BigInt& bound);

  SequenceKind kind_;
  Rational rho_;
  std::string label_;
  std::shared_ptr<const std::vector<BigInt>> source_;  // custom only
  std::vector<BigInt> elements_;
  std::map<BigInt, Decomposition> decompositions_;
};

// Exactly the elements <= bound. Throws PrefixIncomplete when a custom list
// ends below bound, ContractViolation when bound < 1.
GrowthSequence extend_to(const GrowthSequence& seq, const BigInt& bound);

// Largest rational p/q with q <= max_denominator not exceeding the minimum
// consecutive ratio of terms, capped at 2. Falls back to the exact minimum
// ratio when no such approximation exceeds 1; returns 2 for a single term.
Rational admissible_rho(const std::vector<BigInt>& terms,
                        std::uint64_t max_denominator = 64);

struct ValidationFailure {
  std::string condition;  // "i", "ii", "iii" or "growth_bound"
  BigInt element;
  std::string detail;

  bool operator==(const ValidationFailure&) const = default;
};

struct ValidationReport {
  bool condition_i = false;
  bool condition_ii = false;
  bool condition_iii = false;
  bool growth_bound = false;
  Rational rho;      // the ratio condition (iii) was checked against
  Rational max_rho;  // largest admissible ratio for this prefix
  std::vector<ValidationFailure> failures;

  bool ok() const {
    return condition_i && condition_ii && condition_iii && growth_bound;
  }
  bool operator==(const ValidationReport&) const = default;
};

// Checks the materialized prefix. Condition (iii) is tested non-strictly:
// a[j+1] >= rho * a[j]. The growth bound is a[i] <= 2^i (0-based).
ValidationReport validate(const GrowthSequence& seq);

// True iff every n in [1, N] is a sum of distinct known elements.
bool verify_completeness(const GrowthSequence& seq, std::uint64_t n_max);

struct RegularityViolation {
  std::uint64_t n = 0;
  std::uint64_t rank = 0;
  std::uint64_t min_distinct_length = 0;  // shortest distinct representation
  Representation evidence;                // one shortest representation

  bool operator==(const RegularityViolation&) const = default;
};

// Every n <= n_max with no distinct representation of length rank(n).
std::vector<RegularityViolation> check_regularity(const GrowthSequence& seq,
                                                  std::uint64_t n_max);

// One decimal integer per line; '#' starts a comment; blank lines ignored.
// The first integer must be 1 and values strictly increase. Violations are
// reported with their line number as ParseError.
GrowthSequence load_custom_sequence(std::istream& in,
                                    std::optional<Rational> rho = std::nullopt,
                                    std::string label = "custom");
GrowthSequence load_custom_sequence_file(const std::string& path,
                                         std::optional<Rational> rho = std::nullopt);

// 1,2,3,6,12 followed by 13*2^t: the non-regular example used to show that
// equal-length representations need not pair up. Returns the terms <= bound.
std::vector<BigInt> thirteen_doubling_terms(const BigInt& bound);
// 1,2,3,5,6,12: the irregular listed prefix (10 = 5+5 is shorter than 2+3+5).
std::vector<BigInt> short_nonregular_terms();

}  // namespace fsx

#endif  // FSX_SEQUENCES_H_
