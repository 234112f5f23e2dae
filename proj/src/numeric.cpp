#include "readcode/numeric.hpp"

#include <cmath>
#include <limits>

namespace readcode {

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;
    }
    return result;
}

std::optional<std::uint64_t> binomial_u64(std::uint64_t n, std::uint64_t k) {
    if (k > n) return std::nullopt;
    BigInt exact = binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k));
    if (exact > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
    return exact.convert_to<std::uint64_t>();
}

BigInt ipow(const BigInt& base, unsigned exp) {
    BigInt result = 1;
    for (unsigned i = 0; i < exp; ++i) result *= base;
    return result;
}

std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) return std::nullopt;
    return r;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        auto next = checked_mul(r, base);
        if (!next) return std::nullopt;
        r = *next;
    }
    return r;
}

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    if (v < 4) return true;
    if (v % 2 == 0) return false;
    for (std::uint64_t d = 3; d <= v / d; d += 2)
        if (v % d == 0) return false;
    return true;
}

std::uint64_t smallest_prime_at_least(std::uint64_t v) {
    while (!is_prime(v)) ++v;
    return v;
}

double log_base(double value, double q) { return std::log(value) / std::log(q); }

double snap(double value) {
    const double nearest = std::round(value);
    return std::fabs(value - nearest) < 1e-9 ? nearest : value;
}

std::int64_t ceil_snapped(double value) { return static_cast<std::int64_t>(std::ceil(snap(value))); }

std::int64_t floor_snapped(double value) { return static_cast<std::int64_t>(std::floor(snap(value))); }

} // namespace readcode
