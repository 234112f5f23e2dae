#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "readcode/report.hpp"
#include "readcode/space.hpp"
#include "readcode/word.hpp"

namespace readcode {

enum class Family { C33, CP, CDEL, BOUNDED, BOUNDED_BIN, C24, C24_BIN, AUX1, AUX2, C25 };

std::string_view family_name(Family f) noexcept;
/// Case-insensitive; accepts "c33", "bounded_bin", "bounded-bin", ...
Family parse_family(std::string_view name);
std::vector<Family> all_families();

/// Which transform of x a congruence is evaluated on.
enum class Target { Word, Indicator, Odd };
enum class Functional { VT, Inv };

struct Constraint {
    Target target = Target::Word;
    Functional functional = Functional::VT;
    unsigned order = 0;
    std::uint64_t modulus = 1;
    friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// Explicit parameter overrides, for exercising non-vacuous regimes at small n.
struct FamilyOverrides {
    std::optional<std::int64_t> P;
    std::optional<unsigned> good_threshold;
    std::optional<unsigned> d;
    std::optional<std::size_t> run_cap;
    /// Replaces the derived moduli position by position; must match in count.
    std::optional<std::vector<std::uint64_t>> moduli;
};

/// One concrete code: family, effective parameters and (optionally) residues.
struct CodeFamilySpec {
    Family family = Family::C33;
    std::size_t n = 0;
    unsigned q = 2;
    unsigned ell = 2;
    /// Effective P. Only CDEL uses a real value; elsewhere it is integral.
    double P = 0;
    /// Members must lie in ALL(n, run_cap) when set.
    std::optional<std::size_t> run_cap;
    /// Members must be good for (ell, threshold) when set.
    std::optional<unsigned> good_threshold;
    /// Minimum Hamming distance targeted by the inner bounded code, if any.
    std::optional<unsigned> d;
    std::vector<Constraint> constraints;
    /// One residue per constraint; empty until chosen.
    std::vector<std::uint64_t> residues;
    /// How residues were chosen ("joint", "independent", "given" or empty).
    std::string residue_mode;

    std::vector<std::uint64_t> moduli() const;
    std::string P_text() const;
    nlohmann::ordered_json to_json() const;
};

/// Effective parameters from the family's formulas, with overrides applied.
/// Throws InvalidFamilyParams on family/parameter mismatch.
CodeFamilySpec derive_params(Family family, std::size_t n, unsigned q, unsigned ell,
                             const FamilyOverrides& overrides = {});

/// Run-cap and goodness conditions only.
bool in_ambient(const CodeFamilySpec& spec, const Word& x);

/// Residue of each constraint for x.
std::vector<std::uint64_t> signature(const CodeFamilySpec& spec, const Word& x);

/// Full membership predicate. Throws ShapeMismatch for a word of the wrong
/// shape and InvalidFamilyParams when residues are unset.
bool is_member(const CodeFamilySpec& spec, const Word& x);

struct EnumeratedCode {
    CodeFamilySpec spec;
    std::vector<Word> words;
    std::size_t size() const noexcept { return words.size(); }
    /// n - log_q |C|; nullopt for the empty code.
    std::optional<double> redundancy() const;
};

struct EnumerateOptions {
    std::uint64_t budget = kDefaultBudget;
    unsigned threads = 1;
};

/// Every member in lexicographic order. Throws BudgetExceeded.
EnumeratedCode enumerate(const CodeFamilySpec& spec, const EnumerateOptions& options = {});

struct ResidueSearch {
    CodeFamilySpec spec;
    std::uint64_t best_size = 0;
    std::uint64_t ambient_size = 0;
    std::uint64_t buckets = 0;
};

/// Residue tuple maximising |C| (ties go to the lexicographically smallest
/// tuple), from one bucketing pass over the ambient set. For C25 the
/// independent mode optimises the AUX1 and AUX2 halves separately.
ResidueSearch best_residues(Family family, std::size_t n, unsigned q, unsigned ell,
                            const FamilyOverrides& overrides = {}, const EnumerateOptions& options = {},
                            bool independent = false);
ResidueSearch best_residues(const CodeFamilySpec& base, const EnumerateOptions& options = {},
                            bool independent = false);

/// Exhaustive check of the family's guarantee over all pairs of members.
VerificationReport verify_family(const CodeFamilySpec& spec, const EnumerateOptions& options = {});

/// Visits every pair (i < j) of the given equal-length symbol strings whose
/// Hamming distance is at most max_distance, each exactly once. Pairs are
/// found through max_distance + 1 disjoint blocks, one of which must agree.
void pairs_within(const std::vector<std::vector<std::uint32_t>>& strings, std::size_t max_distance,
                  const std::function<void(std::size_t, std::size_t, std::size_t)>& visit);

} // namespace readcode
