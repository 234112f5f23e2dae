#include "readcode/characterize.hpp"

#include "readcode/error.hpp"
#include "readcode/seqcore.hpp"

namespace readcode {

namespace {

void require_pair(const Word& x, const Word& y) {
    if (x.size() != y.size() || x.q() != y.q())
        throw Error(ErrorCode::ShapeMismatch, "pair needs equal length and alphabet");
    if (x == y) throw Error(ErrorCode::IdenticalWords, "pair must be distinct");
}

Word range(const Word& x, std::size_t from, std::size_t to) {
    // 0-based half-open [from, to)
    return Word(x.q(), std::vector<Symbol>(x.vec().begin() + static_cast<std::ptrdiff_t>(from),
                                           x.vec().begin() + static_cast<std::ptrdiff_t>(to)));
}

std::size_t common_prefix(const Word& x, const Word& y, std::size_t from) {
    std::size_t i = from;
    while (i < x.size() && x.vec()[i] == y.vec()[i]) ++i;
    return i;
}

} // namespace

PairStructure decompose_pair(const Word& x, const Word& y) {
    require_pair(x, y);
    const auto& xs = x.vec();
    const auto& ys = y.vec();
    const std::size_t n = x.size();
    PairStructure ps;
    std::size_t pos = common_prefix(x, y, 0);
    ps.u = range(x, 0, pos);
    while (true) {
        SwapBlock block;
        block.a = xs[pos];
        block.b = ys[pos];
        std::size_t t = 1;
        while (pos + t < n) {
            const Symbol want_x = (t % 2 == 0) ? block.a : block.b;
            const Symbol want_y = (t % 2 == 0) ? block.b : block.a;
            if (xs[pos + t] != want_x || ys[pos + t] != want_y) break;
            ++t;
        }
        block.t = t;
        pos += t;
        const std::size_t next = common_prefix(x, y, pos);
        if (next == n) {
            block.v = Word(x.q());
            ps.blocks.push_back(std::move(block));
            ps.w = range(x, pos, n);
            break;
        }
        block.v = range(x, pos, next);
        ps.blocks.push_back(std::move(block));
        pos = next;
    }
    return ps;
}

std::size_t predicted_distance(const PairStructure& ps) {
    const std::size_t s = ps.s();
    std::size_t empty = 0;
    for (std::size_t i = 0; i < s; ++i) empty += ps.blocks[i].v.empty();
    return 2 * (s + 1) - empty;
}

std::pair<Word, Word> reassemble(const PairStructure& ps, unsigned q) {
    std::vector<Symbol> xs(ps.u.vec()), ys(ps.u.vec());
    for (const SwapBlock& blk : ps.blocks) {
        const Word ax = alternating(blk.t, blk.a, blk.b, q);
        const Word ay = alternating(blk.t, blk.b, blk.a, q);
        xs.insert(xs.end(), ax.vec().begin(), ax.vec().end());
        ys.insert(ys.end(), ay.vec().begin(), ay.vec().end());
        xs.insert(xs.end(), blk.v.vec().begin(), blk.v.vec().end());
        ys.insert(ys.end(), blk.v.vec().begin(), blk.v.vec().end());
    }
    xs.insert(xs.end(), ps.w.vec().begin(), ps.w.vec().end());
    ys.insert(ys.end(), ps.w.vec().begin(), ps.w.vec().end());
    return {Word(q, std::move(xs)), Word(q, std::move(ys))};
}

bool boundary_condition_holds(const PairStructure& ps) {
    for (std::size_t i = 0; i + 1 < ps.blocks.size(); ++i) {
        const SwapBlock& cur = ps.blocks[i];
        if (!cur.v.empty()) continue;
        const SwapBlock& nxt = ps.blocks[i + 1];
        const Symbol end_x = (cur.t % 2 == 1) ? cur.a : cur.b;
        const Symbol end_y = (cur.t % 2 == 1) ? cur.b : cur.a;
        const bool same = end_x == nxt.b && end_y == nxt.a;
        if (same) return false;
    }
    return true;
}

D4Shape classify_d4(const Word& x, const Word& y) {
    if (x.size() != y.size() || x.q() != y.q())
        throw Error(ErrorCode::ShapeMismatch, "pair needs equal length and alphabet");
    if (x == y || read_distance(x, y, 2) != 4)
        throw Error(ErrorCode::NotDistanceFour, "pair " + format_word(x) + "/" + format_word(y) +
                                                    " is not at 2-read distance 4");
    PairStructure ps = decompose_pair(x, y);
    const D4Case tag = ps.s() == 1 ? D4Case::A : D4Case::B;
    return {tag, std::move(ps)};
}

std::optional<L3Structure> l3_confusable(const Word& x, const Word& y, unsigned ell) {
    if (ell < 3) throw Error(ErrorCode::InvalidReadLength, "l3_confusable needs l >= 3");
    require_pair(x, y);
    if (read_distance(x, y, ell) > 2) return std::nullopt;
    const auto& xs = x.vec();
    const auto& ys = y.vec();
    const std::size_t n = x.size();
    L3Structure out;
    std::size_t pos = common_prefix(x, y, 0);
    out.u = range(x, 0, pos);
    out.a = xs[pos];
    out.b = ys[pos];
    auto swapped_at = [&](std::size_t p) {
        return p + 1 < n && xs[p] == out.a && xs[p + 1] == out.b && ys[p] == out.b && ys[p + 1] == out.a;
    };
    while (true) {
        if (!swapped_at(pos))
            throw Error(ErrorCode::PreconditionViolated, "distance-2 pair without the swap shape: " + format_word(x) +
                                                             "/" + format_word(y));
        pos += 2;
        if (common_prefix(x, y, pos) == n) {
            out.w = range(x, pos, n);
            return out;
        }
        const std::size_t vend = pos + ell - 2;
        if (vend > n || common_prefix(x, y, pos) < vend)
            throw Error(ErrorCode::PreconditionViolated, "distance-2 pair without the swap shape: " + format_word(x) +
                                                             "/" + format_word(y));
        out.vs.push_back(range(x, pos, vend));
        pos = vend;
    }
}

std::size_t window_span(const Word& x, const Word& y, SpanTransform transform) {
    require_pair(x, y);
    const Word xs = transform == SpanTransform::Indicator ? indicator(x) : x;
    const Word ys = transform == SpanTransform::Indicator ? indicator(y) : y;
    std::size_t lo = xs.size(), hi = 0;
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (xs.vec()[i] != ys.vec()[i]) {
            lo = std::min(lo, i);
            hi = i;
        }
    return hi - lo + 1;
}

nlohmann::ordered_json to_json(const PairStructure& ps) {
    nlohmann::ordered_json j;
    j["u"] = format_word(ps.u);
    nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
    for (const SwapBlock& blk : ps.blocks)
        blocks.push_back({{"a", blk.a}, {"b", blk.b}, {"t", blk.t}, {"v", format_word(blk.v)}});
    j["blocks"] = std::move(blocks);
    j["w"] = format_word(ps.w);
    j["s"] = ps.s();
    j["predicted_d"] = predicted_distance(ps);
    return j;
}

} // namespace readcode
