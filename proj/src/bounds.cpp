#include "readcode/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "readcode/error.hpp"

namespace readcode {

Word g_sequence(std::size_t i, std::size_t t, unsigned q) {
    if (t < 1 || i > 2 * t)
        throw Error(ErrorCode::IndexOutOfRange, "g_{i,t} needs t >= 1 and 0 <= i <= 2t, got i=" + std::to_string(i) +
                                                    ", t=" + std::to_string(t));
    std::vector<Symbol> s(2 * t);
    for (std::size_t k = 0; k < 2 * t; ++k) {
        // alpha(01)[k+1] = k even ? 0 : 1, alpha(10) the complement.
        const Symbol a01 = static_cast<Symbol>(k % 2);
        s[k] = k < i ? a01 : static_cast<Symbol>(1 - a01);
    }
    return Word(q, std::move(s));
}

CliqueCover build_clique_cover(std::size_t n, unsigned q, std::size_t t, std::uint64_t budget) {
    if (t < 1) throw Error(ErrorCode::IndexOutOfRange, "clique cover needs t >= 1");
    const std::uint64_t total = space_size(q, n, budget);
    CliqueCover cover;
    cover.n = n;
    cover.q = q;
    cover.t = t;
    cover.m = n / (2 * t);
    cover.n_prime = n % (2 * t);
    std::vector<Word> lambda;
    for (std::size_t i = 0; i <= 2 * t; ++i) lambda.push_back(g_sequence(i, t, q));
    auto lambda_index = [&](const std::vector<Symbol>& s, std::size_t block) -> std::ptrdiff_t {
        for (std::size_t i = 0; i < lambda.size(); ++i)
            if (std::equal(lambda[i].vec().begin(), lambda[i].vec().end(), s.begin() + static_cast<std::ptrdiff_t>(block * 2 * t)))
                return static_cast<std::ptrdiff_t>(i);
        return -1;
    };
    std::vector<Symbol> s;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        word_at(q, n, idx, s);
        std::ptrdiff_t hit = -1;
        std::size_t k = 0;
        for (; k < cover.m; ++k)
            if ((hit = lambda_index(s, k)) >= 0) break;
        if (hit < 0) {
            cover.cliques.push_back({Word(q, s)});
            continue;
        }
        // Emit Q_z once, from its lexicographically first member.
        std::vector<std::vector<Symbol>> members;
        for (const Word& g : lambda) {
            std::vector<Symbol> z(s);
            std::copy(g.vec().begin(), g.vec().end(), z.begin() + static_cast<std::ptrdiff_t>(k * 2 * t));
            members.push_back(std::move(z));
        }
        std::sort(members.begin(), members.end());
        if (members.front() != s) continue;
        std::vector<Word> clique;
        for (auto& z : members) clique.emplace_back(q, std::move(z));
        cover.cliques.push_back(std::move(clique));
    }
    return cover;
}

BigInt clique_cover_count(std::size_t n, unsigned q, std::size_t t) {
    if (t < 1) throw Error(ErrorCode::IndexOutOfRange, "clique cover needs t >= 1");
    const std::size_t m = n / (2 * t);
    const BigInt block = ipow(BigInt(q), static_cast<unsigned>(2 * t)) - (2 * t + 1);
    BigInt count = ipow(block, static_cast<unsigned>(m)) * ipow(BigInt(q), static_cast<unsigned>(n - 2 * t * m));
    for (std::size_t k = 1; k <= m; ++k)
        count += ipow(block, static_cast<unsigned>(k - 1)) * ipow(BigInt(q), static_cast<unsigned>(n - 2 * t * k));
    return count;
}

Rational clique_cover_size(std::size_t n, unsigned q, std::size_t t) {
    if (t < 1) throw Error(ErrorCode::IndexOutOfRange, "clique cover needs t >= 1");
    const std::size_t m = n / (2 * t);
    const BigInt qn = ipow(BigInt(q), static_cast<unsigned>(n));
    const BigInt q2t = ipow(BigInt(q), static_cast<unsigned>(2 * t));
    const Rational ratio = Rational(1) - Rational(BigInt(2 * t + 1), q2t);
    Rational power = 1;
    for (std::size_t k = 0; k < m; ++k) power *= ratio;
    return Rational(qn, BigInt(2 * t + 1)) * (Rational(1) + Rational(BigInt(2 * t)) * power);
}

std::size_t prescribed_t(std::size_t n, unsigned q) {
    const double L = n >= 1 ? log_base(static_cast<double>(n), q) : -1;
    const double inner = 2 * std::log(L);
    if (!(L > 0) || !(inner > 0))
        throw Error(ErrorCode::PrescribedTNonpositive, "t* is undefined for n=" + std::to_string(n) + ", q=" +
                                                           std::to_string(q) + " (needs 2 ln log_q n > 0)");
    const std::int64_t t = floor_snapped((L - log_base(inner, q)) / 2);
    if (t < 1)
        throw Error(ErrorCode::PrescribedTNonpositive, "t* = " + std::to_string(t) + " for n=" + std::to_string(n) +
                                                           ", q=" + std::to_string(q) + "; the bound needs t >= 1");
    return static_cast<std::size_t>(t);
}

namespace {

double log2_big(const BigInt& v) {
    if (v <= 0) return -INFINITY;
    const std::size_t bits = boost::multiprecision::msb(v);
    if (bits < 60) return std::log2(v.convert_to<double>());
    const std::size_t shift = bits - 52;
    return std::log2(BigInt(v >> shift).convert_to<double>()) + static_cast<double>(shift);
}

} // namespace

double log_q_rational(const Rational& value, unsigned q) {
    return (log2_big(boost::multiprecision::numerator(value)) - log2_big(boost::multiprecision::denominator(value))) /
           std::log2(static_cast<double>(q));
}

double redundancy_lower_bound_d3(std::size_t n, unsigned q) {
    const std::size_t t = prescribed_t(n, q);
    return static_cast<double>(n) - log_q_rational(clique_cover_size(n, q, t), q);
}

double hamming_bound_redundancy(std::size_t n, unsigned q) {
    return log_base(static_cast<double>((q - 1) * n + 1), q);
}

BigInt levenshtein_N(std::int64_t n, std::uint64_t q, std::int64_t t, std::int64_t d) {
    if (d < 1 || t < (d + 1) / 2)
        throw Error(ErrorCode::PreconditionViolated, "levenshtein_N needs d >= 1 and t >= ceil(d/2), got t=" +
                                                         std::to_string(t) + ", d=" + std::to_string(d));
    auto pow_big = [](std::int64_t base, std::int64_t e) -> BigInt {
        return e < 0 ? BigInt(0) : ipow(BigInt(base), static_cast<unsigned>(e));
    };
    BigInt total = 0;
    for (std::int64_t i = 0; i <= t - (d + 1) / 2; ++i) {
        const BigInt outer = binomial(n - d, i) * pow_big(static_cast<std::int64_t>(q) - 1, i);
        if (outer == 0) continue;
        BigInt inner = 0;
        for (std::int64_t k = d - t + i; k <= t - i; ++k)
            for (std::int64_t l = d - t + i; l <= t - i; ++l) {
                const BigInt c = binomial(d, k) * binomial(d - k, l);
                if (c == 0) continue;
                inner += c * pow_big(static_cast<std::int64_t>(q) - 2, d - k - l);
            }
        total += outer * inner;
    }
    return total;
}

BigInt read_recon_upper(std::int64_t n, unsigned ell, unsigned q, std::int64_t t, std::int64_t d) {
    if (ell < 2) throw Error(ErrorCode::InvalidReadLength, "read length must be at least 2");
    const BigInt ql = binomial(static_cast<std::int64_t>(q) + ell - 1, ell);
    return levenshtein_N(n + ell - 1, ql.convert_to<std::uint64_t>(), t, d);
}

std::string bound_csv_header() { return "name,n,q,t,d,value,provenance"; }

std::string to_csv(const BoundReport& r) {
    return r.name + "," + std::to_string(r.n) + "," + std::to_string(r.q) + "," + r.t + "," + r.d + "," + r.value +
           "," + r.provenance;
}

std::string format_rational(const Rational& v) {
    const BigInt num = boost::multiprecision::numerator(v);
    const BigInt den = boost::multiprecision::denominator(v);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

} // namespace readcode
