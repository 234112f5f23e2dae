#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace readcode {

/// Alphabet symbols. The alphabet size q is bounded by kMaxAlphabet so that
/// ranked multisets over small alphabets still fit a Symbol.
using Symbol = std::uint16_t;
inline constexpr unsigned kMaxAlphabet = 65536;

/// A q-ary sequence. Positions are 1-based in all documentation and error
/// messages; entry(i) returns 0 for positions outside [1, n].
class Word {
public:
    Word() = default;
    explicit Word(unsigned q);
    Word(unsigned q, std::vector<Symbol> symbols);
    Word(unsigned q, std::initializer_list<Symbol> symbols);

    static Word zeros(unsigned q, std::size_t n);

    unsigned q() const noexcept { return q_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }

    /// 1-based access with zero padding outside [1, n].
    Symbol entry(std::ptrdiff_t i) const noexcept {
        return (i >= 1 && static_cast<std::size_t>(i) <= symbols_.size()) ? symbols_[i - 1] : 0;
    }

    std::span<const Symbol> symbols() const noexcept { return symbols_; }
    const std::vector<Symbol>& vec() const noexcept { return symbols_; }

    /// Substring x[i..j] (1-based, inclusive); empty when i > j.
    Word slice(std::size_t i, std::size_t j) const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word& a, const Word& b) {
        if (auto c = a.q_ <=> b.q_; c != 0) return c;
        return a.symbols_ <=> b.symbols_;
    }

private:
    unsigned q_ = 2;
    std::vector<Symbol> symbols_;
};

Word concat(std::initializer_list<const Word*> parts);
Word operator+(const Word& a, const Word& b);

/// Hamming distance between equal-length words; throws ShapeMismatch otherwise.
std::size_t hamming_distance(const Word& x, const Word& y);

/// An l-element multiset over [0, q-1], stored as its sorted tuple.
class Multiset {
public:
    Multiset() = default;
    Multiset(unsigned q, std::vector<Symbol> elems);

    unsigned q() const noexcept { return q_; }
    std::size_t size() const noexcept { return elems_.size(); }
    std::span<const Symbol> elems() const noexcept { return elems_; }

    friend bool operator==(const Multiset&, const Multiset&) = default;
    friend auto operator<=>(const Multiset&, const Multiset&) = default;

private:
    unsigned q_ = 2;
    std::vector<Symbol> elems_;
};

/// The l-read vector of a word: n + l - 1 multisets of l symbols each.
class ReadVector {
public:
    ReadVector() = default;
    ReadVector(unsigned q, unsigned ell, std::vector<Multiset> entries);

    unsigned q() const noexcept { return q_; }
    unsigned ell() const noexcept { return ell_; }
    std::size_t size() const noexcept { return entries_.size(); }
    /// Length of the source word implied by the number of entries.
    std::size_t source_length() const noexcept { return entries_.size() + 1 - ell_; }
    std::span<const Multiset> entries() const noexcept { return entries_; }
    const Multiset& operator[](std::size_t i) const { return entries_[i]; }

    friend bool operator==(const ReadVector&, const ReadVector&) = default;

private:
    unsigned q_ = 2;
    unsigned ell_ = 2;
    std::vector<Multiset> entries_;
};

// Text formats. Words over q <= 10 are digit strings ("0101"), larger
// alphabets use commas ("10,0,3"). Multisets are braced ("{0,1}") and read
// vectors are bracketed lists of multisets ("[{0,0},{0,1}]").
std::string format_word(const Word& x);
Word parse_word(std::string_view text, unsigned q);
std::string format_multiset(const Multiset& m);
Multiset parse_multiset(std::string_view text, unsigned q);
std::string format_read_vector(const ReadVector& r);
ReadVector parse_read_vector(std::string_view text, unsigned q, unsigned ell);

} // namespace readcode
