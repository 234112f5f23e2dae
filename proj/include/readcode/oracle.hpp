#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "readcode/space.hpp"
#include "readcode/word.hpp"

namespace readcode {

// Brute-force ground truth. Nothing here depends on the characterization,
// codebook or bounds code; only word primitives are shared.

/// Substitution balls hold words within at most t substitutions; insertion
/// and deletion balls hold words reachable by exactly t edits.
enum class BallKind { Substitution, Insertion, Deletion };

struct BallSpec {
    BallKind kind = BallKind::Substitution;
    std::size_t radius = 1;
};

/// Sorted, duplicate-free ball. Deletion with t > n throws RadiusTooLarge.
std::vector<Word> ball(const Word& x, BallSpec spec);

/// Same ball as lexicographic indices of the (equal-length) ball members.
std::vector<std::uint64_t> ball_indices(std::span<const Symbol> x, unsigned q, BallSpec spec);

std::size_t ball_intersection(const Word& x, const Word& y, BallSpec spec);

/// Number of maximal runs of equal symbols; equals |D_1(x)| for n >= 1.
std::size_t run_count(const Word& x);

/// Brute-force l-read distance: both read vectors are built and compared
/// entry by entry as sorted windows.
std::size_t brute_read_distance(const Word& x, const Word& y, unsigned ell);

/// x = (u, alpha_t(ab), v), y = (u, alpha_t(ba), v) with a != b and t >= min_t,
/// tested directly on the differing positions.
bool is_alternating_swap(const Word& x, const Word& y, std::size_t min_t);

enum class PairSpace { Words, ReadVectors };

/// max |S_t(x) cap S_t(y)| over pairs at distance >= d. In the Words space
/// pairs are ranked by Hamming distance; in the ReadVectors space by l-read
/// distance, with balls taken around the ranked read vectors. Throws
/// MaxOverEmptySet when no pair qualifies.
std::size_t max_ball_intersection(std::size_t n, unsigned q, std::size_t t, std::size_t d, PairSpace space,
                                  unsigned ell = 2, std::uint64_t budget = kDefaultBudget);

inline constexpr std::uint64_t kIndependenceBudget = 1024;

/// Exact independence number of the graph on Sigma_q^n whose edges join
/// words at l-read distance exactly 2.
std::size_t independence_number(std::size_t n, unsigned q, unsigned ell,
                                 std::uint64_t budget = kIndependenceBudget);

/// Exact maximum independent set size of a graph given by adjacency lists.
std::size_t max_independent_set(const std::vector<std::vector<std::uint32_t>>& adjacency);

} // namespace readcode
