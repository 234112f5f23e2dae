#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "readcode/codebook.hpp"
#include "readcode/report.hpp"
#include "readcode/space.hpp"
#include "readcode/word.hpp"

namespace readcode {

struct SweepGrid {
    std::vector<unsigned> qs{2};
    std::size_t nmin = 1;
    std::size_t nmax = 6;
    std::vector<unsigned> ells{2};
    /// Radii for clique_cover; maximum substitution radius for recon_upper.
    std::vector<std::size_t> ts{1, 2};
    /// (t, d) points for levenshtein.
    std::vector<std::pair<std::size_t, std::size_t>> td{{1, 1}, {1, 2}, {2, 2}, {2, 3}, {2, 4}};
    std::vector<Family> families = all_families();
    unsigned threads = 1;
    std::uint64_t budget = kDefaultBudget;

    nlohmann::ordered_json to_json(std::string_view check) const;
};

/// Names accepted by sweep().
std::vector<std::string> sweep_checks();

/// Runs a named exhaustive check over the grid. Throws UnknownCheck.
VerificationReport sweep(std::string_view check, const SweepGrid& grid);

/// Details of a violation, or nullopt when the pair is fine.
using PairPredicate = std::function<std::optional<std::string>(std::size_t, std::size_t)>;

/// Evaluates pred on every index pair i < j of words. The reported
/// counterexample is the first failing pair in (i, j) order regardless of the
/// thread count, and pairs_examined counts pairs up to and including it.
VerificationReport sweep_pairs(std::string check, const std::vector<Word>& words, const PairPredicate& pred,
                               unsigned threads = 1);

} // namespace readcode
