#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <json.hpp>

#include "readcode/word.hpp"

namespace readcode {

/// One alternating-swap block: x carries alpha_t(ab), y carries alpha_t(ba),
/// followed by the common stretch v (empty for the last block).
struct SwapBlock {
    Symbol a = 0;
    Symbol b = 1;
    std::size_t t = 1;
    Word v;
    friend bool operator==(const SwapBlock&, const SwapBlock&) = default;
};

/// x = (u, alpha(a1 b1), v1, ..., alpha(a_{s+1} b_{s+1}), w) and y the same
/// with every block reversed. blocks.size() == s + 1.
struct PairStructure {
    Word u;
    std::vector<SwapBlock> blocks;
    Word w;

    std::size_t s() const noexcept { return blocks.empty() ? 0 : blocks.size() - 1; }
    friend bool operator==(const PairStructure&, const PairStructure&) = default;
};

/// Greedy canonical decomposition: strip the common prefix, take the longest
/// leading alternating swap, recurse on the rest. Throws IdenticalWords for
/// x == y and ShapeMismatch for unequal shapes.
PairStructure decompose_pair(const Word& x, const Word& y);

/// 2(s+1) minus the number of empty inner stretches v_1..v_s.
std::size_t predicted_distance(const PairStructure& ps);

/// Rebuilds (x, y) from a structure.
std::pair<Word, Word> reassemble(const PairStructure& ps, unsigned q);

/// True when every empty inner stretch separates blocks whose boundary
/// multisets differ.
bool boundary_condition_holds(const PairStructure& ps);

enum class D4Case { A, B };

struct D4Shape {
    D4Case tag;
    PairStructure structure;
};

/// Distance-4 pairs are either two blocks around a non-empty middle (A) or
/// three abutting blocks (B). Throws NotDistanceFour otherwise.
D4Shape classify_d4(const Word& x, const Word& y);

/// x = (u, (a,b,v_1), ..., (a,b,v_t), a, b, w), y with every (a,b) reversed,
/// each v_j of length l-2.
struct L3Structure {
    Word u;
    Symbol a = 0;
    Symbol b = 1;
    std::vector<Word> vs;
    Word w;
    /// Number of swapped (a,b) pairs, t + 1.
    std::size_t swaps() const noexcept { return vs.size() + 1; }
};

/// Structure of a pair at l-read distance at most 2 (l >= 3), or nullopt
/// when the distance exceeds 2.
std::optional<L3Structure> l3_confusable(const Word& x, const Word& y, unsigned ell);

enum class SpanTransform { Identity, Indicator };

/// (largest differing index) - (smallest differing index) + 1, optionally
/// after applying the indicator map to both words.
std::size_t window_span(const Word& x, const Word& y, SpanTransform transform);

nlohmann::ordered_json to_json(const PairStructure& ps);

} // namespace readcode
