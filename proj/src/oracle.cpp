#include "readcode/oracle.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "readcode/error.hpp"
#include "readcode/numeric.hpp"

namespace readcode {

namespace {

std::vector<std::uint64_t> powers(unsigned q, std::size_t len) {
    std::vector<std::uint64_t> p(len + 1, 1);
    for (std::size_t i = 1; i <= len; ++i) p[i] = p[i - 1] * q;
    return p;
}

void require_index_width(unsigned q, std::size_t len) {
    if (!checked_pow(q, static_cast<unsigned>(len)))
        throw Error(ErrorCode::BudgetExceeded, "ball members do not fit a 64-bit index");
}

// Substitution ball as indices, generated by choosing ascending positions.
void substitution_rec(std::uint64_t code, const std::vector<Symbol>& s, unsigned q, std::size_t from,
                      std::size_t remaining, const std::vector<std::uint64_t>& pw, std::vector<std::uint64_t>& out) {
    out.push_back(code);
    if (remaining == 0) return;
    const std::size_t n = s.size();
    for (std::size_t i = from; i < n; ++i) {
        const std::uint64_t place = pw[n - 1 - i];
        const std::uint64_t base = code - s[i] * place;
        for (unsigned c = 0; c < q; ++c) {
            if (c == s[i]) continue;
            substitution_rec(base + c * place, s, q, i + 1, remaining - 1, pw, out);
        }
    }
}

std::vector<std::vector<Symbol>> edit_layer(const std::vector<std::vector<Symbol>>& layer, unsigned q, bool insert) {
    std::vector<std::vector<Symbol>> next;
    for (const auto& s : layer) {
        if (insert) {
            for (std::size_t pos = 0; pos <= s.size(); ++pos)
                for (unsigned c = 0; c < q; ++c) {
                    std::vector<Symbol> z(s);
                    z.insert(z.begin() + static_cast<std::ptrdiff_t>(pos), static_cast<Symbol>(c));
                    next.push_back(std::move(z));
                }
        } else {
            for (std::size_t pos = 0; pos < s.size(); ++pos) {
                std::vector<Symbol> z(s);
                z.erase(z.begin() + static_cast<std::ptrdiff_t>(pos));
                next.push_back(std::move(z));
            }
        }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    return next;
}

} // namespace

std::vector<std::uint64_t> ball_indices(std::span<const Symbol> x, unsigned q, BallSpec spec) {
    std::vector<Symbol> s(x.begin(), x.end());
    std::vector<std::uint64_t> out;
    switch (spec.kind) {
    case BallKind::Substitution: {
        require_index_width(q, s.size());
        const auto pw = powers(q, s.size());
        substitution_rec(word_index(s, q), s, q, 0, std::min(spec.radius, s.size()), pw, out);
        break;
    }
    case BallKind::Insertion:
    case BallKind::Deletion: {
        const bool insert = spec.kind == BallKind::Insertion;
        if (!insert && spec.radius > s.size())
            throw Error(ErrorCode::RadiusTooLarge, "cannot delete " + std::to_string(spec.radius) + " symbols from a word of length " +
                                                       std::to_string(s.size()));
        const std::size_t len = insert ? s.size() + spec.radius : s.size() - spec.radius;
        require_index_width(q, len);
        std::vector<std::vector<Symbol>> layer{s};
        for (std::size_t r = 0; r < spec.radius; ++r) layer = edit_layer(layer, q, insert);
        out.reserve(layer.size());
        for (const auto& z : layer) out.push_back(word_index(z, q));
        break;
    }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Word> ball(const Word& x, BallSpec spec) {
    const std::size_t len = spec.kind == BallKind::Insertion  ? x.size() + spec.radius
                            : spec.kind == BallKind::Deletion ? (spec.radius > x.size() ? 0 : x.size() - spec.radius)
                                                              : x.size();
    const auto idx = ball_indices(x.symbols(), x.q(), spec);
    std::vector<Word> out;
    out.reserve(idx.size());
    for (std::uint64_t i : idx) out.push_back(word_at(x.q(), len, i));
    return out;
}

std::size_t ball_intersection(const Word& x, const Word& y, BallSpec spec) {
    if (x.size() != y.size() || x.q() != y.q())
        throw Error(ErrorCode::ShapeMismatch, "ball intersection needs equal length and alphabet");
    const auto bx = ball_indices(x.symbols(), x.q(), spec);
    const auto by = ball_indices(y.symbols(), y.q(), spec);
    std::size_t common = 0;
    auto i = bx.begin();
    auto j = by.begin();
    while (i != bx.end() && j != by.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else {
            ++common;
            ++i;
            ++j;
        }
    }
    return common;
}

std::size_t run_count(const Word& x) {
    std::size_t runs = 0;
    for (std::size_t i = 0; i < x.size(); ++i) runs += (i == 0 || x.vec()[i] != x.vec()[i - 1]);
    return runs;
}

std::size_t brute_read_distance(const Word& x, const Word& y, unsigned ell) {
    if (x.size() != y.size() || x.q() != y.q())
        throw Error(ErrorCode::ShapeMismatch, "read distance needs equal length and alphabet");
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(x.size());
    const std::ptrdiff_t L = static_cast<std::ptrdiff_t>(ell);
    std::size_t d = 0;
    std::vector<Symbol> wx(ell), wy(ell);
    for (std::ptrdiff_t i = 1; i <= n + L - 1; ++i) {
        for (std::ptrdiff_t k = 0; k < L; ++k) {
            wx[k] = x.entry(i - k);
            wy[k] = y.entry(i - k);
        }
        std::sort(wx.begin(), wx.end());
        std::sort(wy.begin(), wy.end());
        d += wx != wy;
    }
    return d;
}

bool is_alternating_swap(const Word& x, const Word& y, std::size_t min_t) {
    if (x.size() != y.size() || x == y) return false;
    const auto& xs = x.vec();
    const auto& ys = y.vec();
    std::size_t lo = 0;
    while (xs[lo] == ys[lo]) ++lo;
    std::size_t hi = xs.size() - 1;
    while (xs[hi] == ys[hi]) --hi;
    const std::size_t t = hi - lo + 1;
    if (t < min_t) return false;
    const Symbol a = xs[lo], b = ys[lo];
    for (std::size_t i = lo; i <= hi; ++i) {
        const bool even = (i - lo) % 2 == 0;
        if (xs[i] != (even ? a : b) || ys[i] != (even ? b : a)) return false;
    }
    return true;
}

std::size_t max_ball_intersection(std::size_t n, unsigned q, std::size_t t, std::size_t d, PairSpace space,
                                  unsigned ell, std::uint64_t budget) {
    const std::uint64_t total = space_size(q, n, budget);
    std::vector<Word> words;
    words.reserve(total);
    for (std::uint64_t i = 0; i < total; ++i) words.push_back(word_at(q, n, i));

    // Points carrying the balls: the words themselves, or their ranked read vectors.
    unsigned point_q = q;
    std::vector<std::vector<Symbol>> points(total);
    if (space == PairSpace::Words) {
        for (std::uint64_t i = 0; i < total; ++i) points[i] = words[i].vec();
    } else {
        if (ell < 2) throw Error(ErrorCode::InvalidReadLength, "read length must be at least 2");
        point_q = static_cast<unsigned>(*binomial_u64(q + ell - 1, ell));
        // Rank each sorted window by listing all sorted l-tuples lexicographically.
        std::vector<std::vector<Symbol>> tuples;
        std::vector<Symbol> cur(ell, 0);
        std::function<void(unsigned, Symbol)> gen = [&](unsigned k, Symbol lo) {
            if (k == ell) {
                tuples.push_back(cur);
                return;
            }
            for (unsigned v = lo; v < q; ++v) {
                cur[k] = static_cast<Symbol>(v);
                gen(k + 1, static_cast<Symbol>(v));
            }
        };
        gen(0, 0);
        for (std::uint64_t i = 0; i < total; ++i) {
            const Word& x = words[i];
            std::vector<Symbol> w(ell);
            for (std::ptrdiff_t pos = 1; pos <= static_cast<std::ptrdiff_t>(n + ell - 1); ++pos) {
                for (unsigned k = 0; k < ell; ++k) w[k] = x.entry(pos - static_cast<std::ptrdiff_t>(k));
                std::sort(w.begin(), w.end());
                const auto it = std::lower_bound(tuples.begin(), tuples.end(), w);
                points[i].push_back(static_cast<Symbol>(it - tuples.begin()));
            }
        }
    }

    auto qualifies = [&](std::uint64_t i, std::uint64_t j) {
        const auto& a = points[i];
        const auto& b = points[j];
        std::size_t dist = 0;
        for (std::size_t k = 0; k < a.size(); ++k) dist += a[k] != b[k];
        return dist >= d;
    };

    std::unordered_map<std::uint64_t, std::uint64_t> point_of;
    for (std::uint64_t i = 0; i < total; ++i) point_of.emplace(word_index(points[i], point_q), i);

    bool any = false;
    std::size_t best = 0;
    const BallSpec sub{BallKind::Substitution, t};
    std::vector<std::uint32_t> count(total, 0);
    std::vector<Symbol> z;
    for (std::uint64_t i = 0; i < total; ++i) {
        // count[j] = |S_t(p_i) cap S_t(p_j)|, found by walking balls around ball members.
        std::vector<std::uint64_t> touched;
        const std::size_t len = points[i].size();
        for (std::uint64_t zi : ball_indices(points[i], point_q, sub)) {
            word_at(point_q, len, zi, z);
            for (std::uint64_t yi : ball_indices(z, point_q, sub)) {
                auto it = point_of.find(yi);
                if (it == point_of.end()) continue;
                if (count[it->second]++ == 0) touched.push_back(it->second);
            }
        }
        for (std::uint64_t j = i + 1; j < total; ++j) {
            if (!qualifies(i, j)) continue;
            any = true;
            best = std::max<std::size_t>(best, count[j]);
        }
        for (std::uint64_t j : touched) count[j] = 0;
    }
    if (!any)
        throw Error(ErrorCode::MaxOverEmptySet, "no pair at distance >= " + std::to_string(d) + " for n=" +
                                                    std::to_string(n) + ", q=" + std::to_string(q));
    return best;
}

namespace {

using Bits = std::vector<std::uint64_t>;

struct CliqueSearch {
    std::size_t n;
    std::vector<Bits> adj;  // complement graph, vertices renumbered
    std::size_t best = 0;

    static bool test(const Bits& b, std::size_t v) { return (b[v >> 6] >> (v & 63)) & 1u; }
    static void reset(Bits& b, std::size_t v) { b[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    static bool none(const Bits& b) {
        for (auto w : b)
            if (w) return false;
        return true;
    }

    // Greedy colouring of the candidate set; colour classes are independent in
    // the complement, i.e. cliques of the original graph.
    void colour(const Bits& cand, std::vector<std::uint32_t>& order, std::vector<std::uint32_t>& bound) const {
        Bits uncoloured = cand;
        std::uint32_t c = 0;
        while (!none(uncoloured)) {
            ++c;
            Bits q = uncoloured;
            for (std::size_t wi = 0; wi < q.size(); ++wi) {
                while (q[wi]) {
                    const std::size_t v = wi * 64 + static_cast<std::size_t>(std::countr_zero(q[wi]));
                    reset(q, v);
                    reset(uncoloured, v);
                    order.push_back(static_cast<std::uint32_t>(v));
                    bound.push_back(c);
                    for (std::size_t k = 0; k < q.size(); ++k) q[k] &= ~adj[v][k];
                }
            }
        }
    }

    void expand(std::size_t size, Bits cand) {
        std::vector<std::uint32_t> order, bound;
        colour(cand, order, bound);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (size + bound[i] <= best) return;
            const std::size_t v = order[i];
            Bits next(cand.size());
            for (std::size_t k = 0; k < cand.size(); ++k) next[k] = cand[k] & adj[v][k];
            if (none(next))
                best = std::max(best, size + 1);
            else
                expand(size + 1, std::move(next));
            reset(cand, v);
        }
    }
};

} // namespace

std::size_t max_independent_set(const std::vector<std::vector<std::uint32_t>>& adjacency) {
    const std::size_t n = adjacency.size();
    if (n == 0) return 0;
    // Vertices of low degree first: they sit in many maximum independent sets.
    std::vector<std::uint32_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<std::uint32_t>(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return adjacency[a].size() < adjacency[b].size(); });
    std::vector<std::uint32_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = static_cast<std::uint32_t>(i);

    CliqueSearch search;
    search.n = n;
    const std::size_t words = (n + 63) / 64;
    search.adj.assign(n, Bits(words, ~std::uint64_t{0}));
    for (std::size_t v = 0; v < n; ++v) {
        Bits& row = search.adj[pos[v]];
        if (n % 64) row[words - 1] = (std::uint64_t{1} << (n % 64)) - 1;
        CliqueSearch::reset(row, pos[v]);
        for (std::uint32_t u : adjacency[v]) CliqueSearch::reset(row, pos[u]);
    }
    Bits all(words, ~std::uint64_t{0});
    if (n % 64) all[words - 1] = (std::uint64_t{1} << (n % 64)) - 1;
    search.expand(0, all);
    return search.best;
}

std::size_t independence_number(std::size_t n, unsigned q, unsigned ell, std::uint64_t budget) {
    if (ell < 2) throw Error(ErrorCode::InvalidReadLength, "read length must be at least 2");
    const std::uint64_t total = space_size(q, n, budget);
    std::vector<Word> words;
    for (std::uint64_t i = 0; i < total; ++i) words.push_back(word_at(q, n, i));
    std::vector<std::vector<std::uint32_t>> adjacency(total);
    for (std::uint64_t i = 0; i < total; ++i)
        for (std::uint64_t j = i + 1; j < total; ++j)
            if (brute_read_distance(words[i], words[j], ell) == 2) {
                adjacency[i].push_back(static_cast<std::uint32_t>(j));
                adjacency[j].push_back(static_cast<std::uint32_t>(i));
            }
    return max_independent_set(adjacency);
}

} // namespace readcode
