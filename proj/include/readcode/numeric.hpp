#pragma once

#include <cstdint>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

namespace readcode {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient; zero when k < 0 or k > n (n may be negative).
BigInt binomial(std::int64_t n, std::int64_t k);

/// Binomial coefficient in 64 bits; nullopt on overflow or k outside [0, n].
std::optional<std::uint64_t> binomial_u64(std::uint64_t n, std::uint64_t k);

/// base^exp with 0^0 = 1.
BigInt ipow(const BigInt& base, unsigned exp);

/// Overflow-checked 64-bit helpers.
std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b);
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp);

/// Deterministic trial division.
bool is_prime(std::uint64_t v);
std::uint64_t smallest_prime_at_least(std::uint64_t v);

/// Logarithm in base q, real-valued.
double log_base(double value, double q);

/// Values within 1e-9 of an integer are snapped to it before rounding, so
/// exact cases such as log_2 log_2 16 = 2 round identically on every platform.
double snap(double value);
std::int64_t ceil_snapped(double value);
std::int64_t floor_snapped(double value);

} // namespace readcode
