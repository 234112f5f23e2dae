#include "readcode/seqcore.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "readcode/error.hpp"

namespace readcode {

namespace {

void require_ell(unsigned ell, unsigned minimum) {
    if (ell < minimum)
        throw Error(ErrorCode::InvalidReadLength,
                    "read length must be at least " + std::to_string(minimum) + ", got " + std::to_string(ell));
}

std::uint64_t small_binomial(std::uint64_t n, std::uint64_t k) {
    auto v = binomial_u64(n, k);
    if (!v) throw Error(ErrorCode::RankOutOfRange, "multiset count overflows 64 bits");
    return *v;
}

// Number of non-decreasing tuples of the given length over [lo, q-1].
std::uint64_t tail_count(unsigned q, unsigned lo, unsigned length) {
    if (length == 0) return 1;
    return small_binomial(q - lo + length - 1, length);
}

std::uint64_t rank_sorted(std::span<const Symbol> elems, unsigned q) {
    const unsigned ell = static_cast<unsigned>(elems.size());
    std::uint64_t rank = 0;
    unsigned prev = 0;
    for (unsigned k = 0; k < ell; ++k) {
        for (unsigned v = prev; v < elems[k]; ++v) rank += tail_count(q, v, ell - k - 1);
        prev = elems[k];
    }
    return rank;
}

} // namespace

ReadVector read_vector(const Word& x, unsigned ell) {
    require_ell(ell, 2);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(x.size());
    std::vector<Multiset> entries;
    entries.reserve(x.size() + ell - 1);
    std::vector<Symbol> window(ell);
    for (std::ptrdiff_t i = 1; i <= n + static_cast<std::ptrdiff_t>(ell) - 1; ++i) {
        for (unsigned k = 0; k < ell; ++k) window[k] = x.entry(i - static_cast<std::ptrdiff_t>(ell) + 1 + k);
        entries.emplace_back(x.q(), window);
    }
    return ReadVector(x.q(), ell, std::move(entries));
}

Word read_to_word(const ReadVector& r) {
    const unsigned ell = r.ell();
    const std::size_t n = r.source_length();
    std::vector<Symbol> out;
    out.reserve(n);
    auto at = [&](std::ptrdiff_t i) -> Symbol {
        return (i >= 1 && static_cast<std::size_t>(i) <= out.size()) ? out[i - 1] : 0;
    };
    for (std::size_t i = 1; i <= n; ++i) {
        std::vector<Symbol> rest(r[i - 1].elems().begin(), r[i - 1].elems().end());
        for (unsigned k = 1; k < ell; ++k) {
            const Symbol known = at(static_cast<std::ptrdiff_t>(i) - static_cast<std::ptrdiff_t>(k));
            auto it = std::find(rest.begin(), rest.end(), known);
            if (it == rest.end())
                throw Error(ErrorCode::NotARealization,
                            "entry " + std::to_string(i) + " is inconsistent with the recovered prefix");
            rest.erase(it);
        }
        out.push_back(rest.front());
    }
    Word x(r.q(), std::move(out));
    if (read_vector(x, ell) != r)
        throw Error(ErrorCode::NotARealization, "trailing entries are inconsistent with the recovered word");
    return x;
}

std::size_t read_distance(const Word& x, const Word& y, unsigned ell) {
    require_ell(ell, 2);
    if (x.size() != y.size() || x.q() != y.q())
        throw Error(ErrorCode::ShapeMismatch, "read distance needs equal length and alphabet");
    // diff[s] = count of s in the x-window minus count in the y-window.
    std::array<int, 32> small{};
    std::vector<int> large;
    int* diff = small.data();
    if (x.q() > small.size()) {
        large.assign(x.q(), 0);
        diff = large.data();
    }
    std::size_t nonzero = 0;
    auto bump = [&](Symbol s, int delta) {
        const bool was = diff[s] != 0;
        diff[s] += delta;
        const bool is = diff[s] != 0;
        if (was && !is) --nonzero;
        if (!was && is) ++nonzero;
    };
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(x.size());
    const std::ptrdiff_t L = static_cast<std::ptrdiff_t>(ell);
    std::size_t d = 0;
    for (std::ptrdiff_t i = 1; i <= n + L - 1; ++i) {
        bump(x.entry(i), 1);
        bump(y.entry(i), -1);
        bump(x.entry(i - L), -1);
        bump(y.entry(i - L), 1);
        d += nonzero != 0;
    }
    return d;
}

BigInt vt_syndrome(const Word& x, unsigned k) {
    BigInt sum = 0;
    for (std::size_t i = 1; i <= x.size(); ++i) {
        const Symbol s = x.vec()[i - 1];
        if (s) sum += ipow(BigInt(i), k) * s;
    }
    return sum;
}

std::uint64_t vt_residue(const Word& x, unsigned k, std::uint64_t m) {
    if (m == 0) throw Error(ErrorCode::InvalidFamilyParams, "modulus must be positive");
    using u128 = unsigned __int128;
    std::uint64_t sum = 0;
    for (std::size_t i = 1; i <= x.size(); ++i) {
        const Symbol s = x.vec()[i - 1];
        if (!s) continue;
        std::uint64_t power = 1 % m;
        for (unsigned e = 0; e < k; ++e) power = static_cast<std::uint64_t>(static_cast<u128>(power) * i % m);
        sum = static_cast<std::uint64_t>((static_cast<u128>(power) * s + sum) % m);
    }
    return sum;
}

SyndromeVector::SyndromeVector(const Word& x, const std::vector<std::pair<unsigned, std::uint64_t>>& requests) {
    values_.reserve(requests.size());
    for (auto [order, modulus] : requests) values_.push_back({order, modulus, vt_residue(x, order, modulus)});
}

std::uint64_t inversion_number(const Word& x) {
    std::vector<std::uint64_t> seen(x.q(), 0);
    std::uint64_t inv = 0;
    for (Symbol s : x.symbols()) {
        for (unsigned v = s + 1u; v < x.q(); ++v) inv += seen[v];
        ++seen[s];
    }
    return inv;
}

Word indicator(const Word& x) {
    std::vector<Symbol> out(x.size());
    Symbol prev = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = static_cast<Symbol>((x.vec()[i] + prev) % x.q());
        prev = x.vec()[i];
    }
    return Word(x.q(), std::move(out));
}

Word indicator_inverse(const Word& z) {
    std::vector<Symbol> out(z.size());
    Symbol prev = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        out[i] = static_cast<Symbol>((z.vec()[i] + z.q() - prev) % z.q());
        prev = out[i];
    }
    return Word(z.q(), std::move(out));
}

Word odd_subword(const Word& x) {
    std::vector<Symbol> out;
    for (std::size_t i = 0; i < x.size(); i += 2) out.push_back(x.vec()[i]);
    return Word(x.q(), std::move(out));
}

Word even_subword(const Word& x) {
    std::vector<Symbol> out;
    for (std::size_t i = 1; i < x.size(); i += 2) out.push_back(x.vec()[i]);
    return Word(x.q(), std::move(out));
}

Word alternating(std::size_t n, Symbol a, Symbol b, unsigned q) {
    if (a >= q || b >= q) throw Error(ErrorCode::InvalidSymbol, "alternating symbols must lie in [0, q-1]");
    if (a == b) throw Error(ErrorCode::NotDistinct, "alternating sequence needs two distinct symbols");
    std::vector<Symbol> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = (i % 2 == 0) ? a : b;
    return Word(q, std::move(out));
}

std::size_t max_alternating_run(const Word& x) {
    if (x.empty()) throw Error(ErrorCode::EmptyWord, "alternating run of the empty word");
    const auto& s = x.vec();
    std::size_t best = 1, cur = 1;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] == s[i - 1])
            cur = 1;
        else if (cur >= 2 && s[i] == s[i - 2])
            ++cur;
        else
            cur = 2;
        best = std::max(best, cur);
    }
    return best;
}

bool in_all(const Word& x, std::size_t cap) { return x.empty() || max_alternating_run(x) <= cap; }

bool is_good(const Word& x, unsigned ell, unsigned threshold) {
    require_ell(ell, 3);
    const std::size_t n = x.size();
    const auto& s = x.vec();
    // run[i] counts consecutive equal distinct pairs ending at pair start i (0-based), stride ell.
    std::vector<unsigned> run(n, 0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (s[i] == s[i + 1]) continue;
        run[i] = 1;
        if (i >= ell && s[i - ell] == s[i] && s[i - ell + 1] == s[i + 1]) run[i] = run[i - ell] + 1;
        if (run[i] >= threshold + 1) return false;
    }
    return true;
}

unsigned default_good_threshold(std::size_t n, unsigned q) {
    if (n < 2) throw Error(ErrorCode::InvalidFamilyParams, "goodness threshold needs n >= 2");
    const double L = log_base(static_cast<double>(n), q);
    const double sum = L + log_base(L, q);
    if (ceil_snapped(sum / 2) <= 0)
        throw Error(ErrorCode::InvalidFamilyParams, "goodness threshold undefined for n=" + std::to_string(n) +
                                                        ", q=" + std::to_string(q));
    return static_cast<unsigned>(std::max<std::int64_t>(0, ceil_snapped(sum / 2 - 1)));
}

std::uint64_t multiset_count(unsigned q, unsigned ell) { return small_binomial(q + ell - 1, ell); }

std::uint64_t multiset_rank(const Multiset& m) { return rank_sorted(m.elems(), m.q()); }

Multiset multiset_unrank(std::uint64_t rank, unsigned q, unsigned ell) {
    if (rank >= multiset_count(q, ell))
        throw Error(ErrorCode::RankOutOfRange, "rank " + std::to_string(rank) + " outside [0, " +
                                                   std::to_string(multiset_count(q, ell)) + ")");
    std::vector<Symbol> elems(ell);
    unsigned v = 0;
    for (unsigned k = 0; k < ell; ++k) {
        while (true) {
            const std::uint64_t block = tail_count(q, v, ell - k - 1);
            if (rank < block) break;
            rank -= block;
            ++v;
        }
        elems[k] = static_cast<Symbol>(v);
    }
    return Multiset(q, std::move(elems));
}

Word phi_map(const ReadVector& r) {
    const std::uint64_t ql = multiset_count(r.q(), r.ell());
    if (ql > kMaxAlphabet)
        throw Error(ErrorCode::InvalidSymbol, "ranked alphabet of size " + std::to_string(ql) + " exceeds symbol width");
    std::vector<Symbol> out;
    out.reserve(r.size());
    for (const Multiset& m : r.entries()) out.push_back(static_cast<Symbol>(multiset_rank(m)));
    return Word(static_cast<unsigned>(ql), std::move(out));
}

std::vector<std::uint32_t> read_ranks(const Word& x, unsigned ell) {
    require_ell(ell, 2);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(x.size());
    const std::ptrdiff_t L = static_cast<std::ptrdiff_t>(ell);
    std::vector<std::uint32_t> out;
    out.reserve(x.size() + ell - 1);
    std::vector<Symbol> window(ell);
    for (std::ptrdiff_t i = 1; i <= n + L - 1; ++i) {
        for (std::ptrdiff_t k = 0; k < L; ++k) window[k] = x.entry(i - L + 1 + k);
        std::sort(window.begin(), window.end());
        out.push_back(static_cast<std::uint32_t>(rank_sorted(window, x.q())));
    }
    return out;
}

} // namespace readcode
