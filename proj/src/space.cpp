#include "readcode/space.hpp"

#include <algorithm>
#include <exception>
#include <mutex>

#include "readcode/error.hpp"
#include "readcode/numeric.hpp"

namespace readcode {

std::uint64_t space_size(unsigned q, std::size_t n, std::uint64_t budget) {
    auto size = checked_pow(q, static_cast<unsigned>(n));
    if (!size || *size > budget)
        throw Error(ErrorCode::BudgetExceeded, "enumerating " + std::to_string(q) + "^" + std::to_string(n) +
                                                   " words needs budget " +
                                                   (size ? std::to_string(*size) : std::string("> 2^64")) +
                                                   ", configured " + std::to_string(budget));
    return *size;
}

std::uint64_t word_index(std::span<const Symbol> symbols, unsigned q) {
    std::uint64_t idx = 0;
    for (Symbol s : symbols) idx = idx * q + s;
    return idx;
}

void word_at(unsigned q, std::size_t n, std::uint64_t index, std::vector<Symbol>& out) {
    out.resize(n);
    for (std::size_t i = n; i-- > 0;) {
        out[i] = static_cast<Symbol>(index % q);
        index /= q;
    }
}

Word word_at(unsigned q, std::size_t n, std::uint64_t index) {
    std::vector<Symbol> out;
    word_at(q, n, index, out);
    return Word(q, std::move(out));
}

std::vector<Word> all_words(unsigned q, std::size_t n, std::uint64_t budget) {
    const std::uint64_t total = space_size(q, n, budget);
    std::vector<Word> out;
    out.reserve(total);
    std::vector<Symbol> buf;
    for (std::uint64_t i = 0; i < total; ++i) {
        word_at(q, n, i, buf);
        out.emplace_back(q, buf);
    }
    return out;
}

unsigned resolve_threads(unsigned requested) {
    if (requested) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_shards(std::uint64_t total, unsigned threads,
                     const std::function<void(std::uint64_t, std::uint64_t, unsigned)>& fn) {
    threads = static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(threads), std::max<std::uint64_t>(total, 1)));
    if (threads <= 1) {
        fn(0, total, 0);
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex lock;
    const std::uint64_t chunk = (total + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
        const std::uint64_t begin = std::min(total, w * chunk);
        const std::uint64_t end = std::min(total, begin + chunk);
        pool.emplace_back([&, begin, end, w] {
            try {
                fn(begin, end, w);
            } catch (...) {
                std::lock_guard<std::mutex> g(lock);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

} // namespace readcode
