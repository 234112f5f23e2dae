#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "readcode/word.hpp"

namespace readcode {

/// Default ceiling on the number of words any exhaustive routine may visit.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

/// q^n, throwing BudgetExceeded when it exceeds budget.
std::uint64_t space_size(unsigned q, std::size_t n, std::uint64_t budget);

/// Lexicographic index: x[1] is the most significant base-q digit.
std::uint64_t word_index(std::span<const Symbol> symbols, unsigned q);
inline std::uint64_t word_index(const Word& x) { return word_index(x.symbols(), x.q()); }

/// Inverse of word_index for words of length n.
Word word_at(unsigned q, std::size_t n, std::uint64_t index);
void word_at(unsigned q, std::size_t n, std::uint64_t index, std::vector<Symbol>& out);

/// All q^n words in lexicographic order.
std::vector<Word> all_words(unsigned q, std::size_t n, std::uint64_t budget = kDefaultBudget);

/// Worker count: 0 means one per hardware thread.
unsigned resolve_threads(unsigned requested);

/// Splits [0, total) into contiguous shards, one per worker, and runs
/// fn(begin, end, shard) on each. Exceptions are rethrown on the caller.
void parallel_shards(std::uint64_t total, unsigned threads,
                     const std::function<void(std::uint64_t, std::uint64_t, unsigned)>& fn);

} // namespace readcode
