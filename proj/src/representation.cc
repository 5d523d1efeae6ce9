#include "fsx/representation.h"

#include <algorithm>

#include "fsx/errors.h"

namespace fsx {

Representation::Representation(Terms terms) {
  for (const auto& [element, count] : terms) add(element, count);
}

Representation Representation::from_terms(std::span<const BigInt> terms) {
  Representation rep;
  for (const BigInt& t : terms) rep.add(t);
  return rep;
}

void Representation::add(const BigInt& element, std::uint64_t count) {
  if (count == 0) return;
  if (element <= 0) {
    throw ContractViolation("representation terms must be positive, got " +
                            element.str());
  }
  terms_[element] += count;
  value_ += element * count;
  length_ += count;
}

void Representation::remove_one(const BigInt& element) {
  auto it = terms_.find(element);
  if (it == terms_.end()) {
    throw ContractViolation("element " + element.str() +
                            " not present in representation");
  }
  if (--it->second == 0) terms_.erase(it);
  value_ -= element;
  --length_;
}

std::uint64_t Representation::mult() const {
  std::uint64_t best = 0;
  for (const auto& [element, count] : terms_) best = std::max(best, count);
  return best;
}

std::uint64_t Representation::multiplicity(const BigInt& element) const {
  auto it = terms_.find(element);
  return it == terms_.end() ? 0 : it->second;
}

std::vector<BigInt> Representation::expanded() const {
  std::vector<BigInt> out;
  out.reserve(length_);
  for (const auto& [element, count] : terms_) {
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(element);
  }
  return out;
}

std::string Representation::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [element, count] : terms_) {
    for (std::uint64_t i = 0; i < count; ++i) {
      if (!out.empty()) out += '+';
      out += element.str();
    }
  }
  return out;
}

bool Representation::operator<(const Representation& other) const {
  const auto a = expanded();
  const auto b = other.expanded();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace fsx
