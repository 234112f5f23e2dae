#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "readcode/numeric.hpp"
#include "readcode/space.hpp"
#include "readcode/word.hpp"

namespace readcode {

/// g_{i,t}: the first i symbols of alpha_2t(01) followed by the last 2t-i of
/// alpha_2t(10), over {0,1} inside Sigma_q. Throws IndexOutOfRange unless
/// t >= 1 and 0 <= i <= 2t.
Word g_sequence(std::size_t i, std::size_t t, unsigned q = 2);

struct CliqueCover {
    std::size_t n = 0;
    unsigned q = 2;
    std::size_t t = 1;
    std::size_t m = 0;
    std::size_t n_prime = 0;
    /// Singletons and the (2t+1)-element cliques Q_z, ordered by their
    /// lexicographically first member.
    std::vector<std::vector<Word>> cliques;
};

/// Materialised cover of Sigma_q^n. Throws BudgetExceeded when q^n > budget.
CliqueCover build_clique_cover(std::size_t n, unsigned q, std::size_t t, std::uint64_t budget = kDefaultBudget);

/// Number of cliques by direct counting of both clique types, exact.
BigInt clique_cover_count(std::size_t n, unsigned q, std::size_t t);

/// Closed form q^n/(2t+1) * (1 + 2t(1 - (2t+1)/q^{2t})^m), exact.
Rational clique_cover_size(std::size_t n, unsigned q, std::size_t t);

/// t* = floor((log_q n - log_q(2 ln log_q n)) / 2); throws
/// PrescribedTNonpositive when it is undefined or below 1.
std::size_t prescribed_t(std::size_t n, unsigned q);

/// n - log_q |Q(t*)|.
double redundancy_lower_bound_d3(std::size_t n, unsigned q);

/// log_q((q-1)n + 1).
double hamming_bound_redundancy(std::size_t n, unsigned q);

/// Largest intersection of radius-t substitution balls around words at
/// Hamming distance >= d, by the closed-form triple sum. Throws
/// PreconditionViolated unless d >= 1 and t >= ceil(d/2).
BigInt levenshtein_N(std::int64_t n, std::uint64_t q, std::int64_t t, std::int64_t d);

/// levenshtein_N(n + l - 1, C(q + l - 1, l), t, d).
BigInt read_recon_upper(std::int64_t n, unsigned ell, unsigned q, std::int64_t t, std::int64_t d);

/// log_q of a positive exact rational without overflowing doubles.
double log_q_rational(const Rational& value, unsigned q);

struct BoundReport {
    std::string name;
    std::size_t n = 0;
    unsigned q = 2;
    std::string t;  // empty when not applicable
    std::string d;
    std::string value;
    std::string provenance;
};

std::string bound_csv_header();
std::string to_csv(const BoundReport& row);
std::string format_rational(const Rational& v);
std::string format_real(double v);

} // namespace readcode
