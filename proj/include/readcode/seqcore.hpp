#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "readcode/numeric.hpp"
#include "readcode/word.hpp"

namespace readcode {

// ---------------------------------------------------------------------------
// Read vectors
// ---------------------------------------------------------------------------

/// Entry i (1-based, i in [1, n+l-1]) is the multiset of x[i-l+1..i] with
/// zero padding outside [1, n]. Throws InvalidReadLength for l < 2.
ReadVector read_vector(const Word& x, unsigned ell);

/// Inverse of read_vector, recovering symbols left to right. Throws
/// NotARealization when an entry contradicts the recovered prefix.
Word read_to_word(const ReadVector& r);

/// Hamming distance between the l-read vectors of x and y, computed window by
/// window without materialising the vectors.
std::size_t read_distance(const Word& x, const Word& y, unsigned ell);

// ---------------------------------------------------------------------------
// Per-word functionals
// ---------------------------------------------------------------------------

/// VT^(k)(x) = sum_i i^k x[i], exact (0^0 = 1).
BigInt vt_syndrome(const Word& x, unsigned k);

/// VT^(k)(x) mod m without big-integer arithmetic. m >= 1.
std::uint64_t vt_residue(const Word& x, unsigned k, std::uint64_t m);

struct Syndrome {
    unsigned order;
    std::uint64_t modulus;
    std::uint64_t residue;
    friend bool operator==(const Syndrome&, const Syndrome&) = default;
};

/// Residues of VT^(k)(x) for each requested (order, modulus) pair.
class SyndromeVector {
public:
    SyndromeVector(const Word& x, const std::vector<std::pair<unsigned, std::uint64_t>>& requests);
    const std::vector<Syndrome>& values() const noexcept { return values_; }

private:
    std::vector<Syndrome> values_;
};

std::uint64_t inversion_number(const Word& x);

/// 1(x)[i] = x[i] + x[i-1] mod q, with x[0] = 0.
Word indicator(const Word& x);
Word indicator_inverse(const Word& z);

Word odd_subword(const Word& x);
Word even_subword(const Word& x);

/// alpha_n(ab): abab... of length n. Throws NotDistinct when a == b and
/// InvalidSymbol when a or b is outside [0, q-1].
Word alternating(std::size_t n, Symbol a, Symbol b, unsigned q);

/// Length of the longest alternating substring; single symbols count as 1.
/// Throws EmptyWord for the empty word.
std::size_t max_alternating_run(const Word& x);

/// True iff every alternating substring of x has length at most cap.
bool in_all(const Word& x, std::size_t cap);

/// A word is good when no ordered pair (a, b), a != b, repeats at stride l
/// for threshold + 1 consecutive occurrences, i.e. there is no i with
/// (x[i+jl], x[i+jl+1]) = (a, b) for all j in [0, threshold] inside [1, n].
/// With threshold 0 a single adjacent distinct pair already disqualifies x.
/// Throws InvalidReadLength for l < 3.
bool is_good(const Word& x, unsigned ell, unsigned threshold);

/// Default goodness threshold ceil((log_q n + log_q log_q n)/2 - 1), floored
/// at 0. Throws InvalidFamilyParams when the logarithms are undefined.
unsigned default_good_threshold(std::size_t n, unsigned q);

// ---------------------------------------------------------------------------
// Multiset ranking and the map from read vectors to q_l-ary words
// ---------------------------------------------------------------------------

/// C(q + l - 1, l): number of l-multisets over [0, q-1].
std::uint64_t multiset_count(unsigned q, unsigned ell);

/// Lexicographic rank of the sorted tuple among all non-decreasing l-tuples.
std::uint64_t multiset_rank(const Multiset& m);
Multiset multiset_unrank(std::uint64_t rank, unsigned q, unsigned ell);

/// Ranks every entry; the result is a word over q_l = C(q+l-1, l) symbols.
Word phi_map(const ReadVector& r);

/// phi_map(read_vector(x, l)) without building the intermediate multisets.
std::vector<std::uint32_t> read_ranks(const Word& x, unsigned ell);

} // namespace readcode
