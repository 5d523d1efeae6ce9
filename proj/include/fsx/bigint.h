#ifndef FSX_BIGINT_H_
#define FSX_BIGINT_H_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace fsx {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Decimal digits only, optional surrounding whitespace. Throws ParseError.
BigInt parse_bigint(std::string_view text);
std::string to_decimal(const BigInt& value);

// Accepts "p/q" or a plain integer.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);

// Number of bits needed to write |value|; 0 for 0.
std::uint64_t bit_length(const BigInt& value);
std::uint64_t popcount(const BigInt& value);
BigInt pow2(std::uint64_t exponent);

// log2 of a positive integer, accurate to double precision even when the
// value does not fit a double.
double log2_of(const BigInt& value);

bool fits_u64(const BigInt& value);
// Throws BudgetExceeded naming `what` when value is negative or > 2^64-1.
std::uint64_t to_u64(const BigInt& value, std::string_view what);

}  // namespace fsx

#endif  // FSX_BIGINT_H_
