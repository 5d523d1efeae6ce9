#include "fsx/bigint.h"

#include <bit>
#include <cctype>
#include <cmath>
#include <limits>

#include "fsx/errors.h"

namespace fsx {

namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  return text;
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  const std::string_view digits = trim(text);
  if (digits.empty()) throw ParseError("empty integer literal");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("not a decimal integer: '" + std::string(text) + "'");
    }
  }
  return BigInt(std::string(digits));
}

std::string to_decimal(const BigInt& value) { return value.str(); }

Rational parse_rational(std::string_view text) {
  const std::string_view body = trim(text);
  const auto slash = body.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(body));
  const BigInt num = parse_bigint(body.substr(0, slash));
  const BigInt den = parse_bigint(body.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::uint64_t bit_length(const BigInt& value) {
  if (value == 0) return 0;
  return boost::multiprecision::msb(boost::multiprecision::abs(value)) + 1;
}

std::uint64_t popcount(const BigInt& value) {
  const auto& backend = value.backend();
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < backend.size(); ++i) {
    count += static_cast<std::uint64_t>(std::popcount(backend.limbs()[i]));
  }
  return count;
}

BigInt pow2(std::uint64_t exponent) {
  BigInt result = 1;
  result <<= exponent;
  return result;
}

double log2_of(const BigInt& value) {
  const std::uint64_t bits = bit_length(value);
  if (bits <= 53) return std::log2(value.convert_to<double>());
  // Keep the top 53 bits and add back the shifted-out exponent.
  const std::uint64_t shift = bits - 53;
  const BigInt top = value >> shift;
  return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

bool fits_u64(const BigInt& value) {
  return value >= 0 && value <= std::numeric_limits<std::uint64_t>::max();
}

std::uint64_t to_u64(const BigInt& value, std::string_view what) {
  if (!fits_u64(value)) {
    throw BudgetExceeded(std::string(what) + " = " + value.str() +
                         " does not fit in 64 bits");
  }
  return value.convert_to<std::uint64_t>();
}

}  // namespace fsx
