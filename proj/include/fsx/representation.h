#ifndef FSX_REPRESENTATION_H_
#define FSX_REPRESENTATION_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "fsx/bigint.h"

namespace fsx {

// A multiset of sequence elements. Keys are kept in descending order, which
// is also the canonical display and comparison order.
class Representation {
 public:
  using Terms = std::map<BigInt, std::uint64_t, std::greater<>>;

  Representation() = default;
  explicit Representation(Terms terms);
  static Representation from_terms(std::span<const BigInt> terms);

  void add(const BigInt& element, std::uint64_t count = 1);
  // Removes one occurrence; throws ContractViolation if absent.
  void remove_one(const BigInt& element);

  const Terms& terms() const { return terms_; }
  const BigInt& value() const { return value_; }
  std::uint64_t length() const { return length_; }
  std::uint64_t mult() const;
  std::uint64_t multiplicity(const BigInt& element) const;
  bool empty() const { return terms_.empty(); }

  // Descending list with repetitions.
  std::vector<BigInt> expanded() const;
  // "8+4+4+1", or "0" for the empty sum.
  std::string to_string() const;

  bool operator==(const Representation& other) const {
    return terms_ == other.terms_;
  }
  // Lexicographic on the descending expansion.
  bool operator<(const Representation& other) const;

 private:
  Terms terms_;
  BigInt value_ = 0;
  std::uint64_t length_ = 0;
};

}  // namespace fsx

#endif  // FSX_REPRESENTATION_H_
