#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace insdel {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// Binomial coefficient with an arbitrary-precision top argument.
BigInt binomial(const BigInt& n, std::int64_t k);

/// Parses "p/q", an integer, or a plain decimal such as "0.875" into an exact rational.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// Largest integer not exceeding value.
BigInt floor(const Rational& value);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

}  // namespace insdel
