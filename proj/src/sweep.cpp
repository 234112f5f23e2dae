#include "readcode/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>

#include "readcode/bounds.hpp"
#include "readcode/characterize.hpp"
#include "readcode/error.hpp"
#include "readcode/oracle.hpp"
#include "readcode/seqcore.hpp"

namespace readcode {

nlohmann::ordered_json SweepGrid::to_json(std::string_view check) const {
    nlohmann::ordered_json j;
    j["q"] = qs;
    j["nmin"] = nmin;
    j["nmax"] = nmax;
    if (check == "read_min_distance" || check == "s1_remark" || check == "recon_upper" || check == "sandwich")
        j["ell"] = ells;
    if (check == "clique_cover" || check == "recon_upper" || check == "sandwich") j["t"] = ts;
    if (check == "levenshtein") {
        auto arr = nlohmann::ordered_json::array();
        for (auto [t, d] : td) arr.push_back({t, d});
        j["td"] = arr;
    }
    if (check == "family" || check == "sandwich") {
        auto arr = nlohmann::ordered_json::array();
        for (Family f : families) arr.push_back(std::string(family_name(f)));
        j["families"] = arr;
    }
    return j;
}

std::vector<std::string> sweep_checks() {
    return {"char2",           "read_min_distance", "insertion_equiv", "deletion_equiv", "indicator_bound",
            "binary_indicator", "s1_remark",        "levenshtein",     "recon_upper",    "family",
            "clique_cover",    "sandwich"};
}

VerificationReport sweep_pairs(std::string check, const std::vector<Word>& words, const PairPredicate& pred,
                               unsigned threads) {
    const std::size_t count = words.size();
    const unsigned workers =
        static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(threads), std::max<std::size_t>(count, 1)));
    struct Found {
        std::size_t i, j;
        std::string details;
    };
    std::vector<std::optional<Found>> found(workers);
    std::atomic<std::size_t> stop_row{std::numeric_limits<std::size_t>::max()};
    // Rows are dealt round-robin so the triangular workload stays balanced.
    parallel_shards(workers, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned) {
        for (std::uint64_t s = begin; s < end; ++s) {
            for (std::size_t i = s; i < count; i += workers) {
                if (i > stop_row.load(std::memory_order_relaxed)) break;
                bool hit = false;
                for (std::size_t j = i + 1; j < count; ++j) {
                    if (auto details = pred(i, j)) {
                        found[s] = Found{i, j, std::move(*details)};
                        std::size_t cur = stop_row.load();
                        while (i < cur && !stop_row.compare_exchange_weak(cur, i)) {
                        }
                        hit = true;
                        break;
                    }
                }
                if (hit) break;
            }
        }
    });
    VerificationReport report;
    report.check = std::move(check);
    report.instances = 1;
    const Found* first = nullptr;
    for (const auto& f : found)
        if (f && (!first || std::pair(f->i, f->j) < std::pair(first->i, first->j))) first = &*f;
    const std::uint64_t n = count;
    if (!first) {
        report.pairs_examined = n * (n - (n ? 1 : 0)) / 2;
        return report;
    }
    const std::uint64_t i = first->i;
    // Rows 0..i-1 complete, then j = i+1..first->j.
    report.pairs_examined = i * (n - 1) - i * (i - 1) / 2 + (first->j - i);
    report.pass = false;
    report.counterexample = Counterexample{words[first->i], words[first->j], first->details};
    return report;
}

namespace {

std::size_t sorted_overlap(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    std::size_t k = 0;
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib)
            ++ia;
        else if (*ib < *ia)
            ++ib;
        else {
            ++k;
            ++ia;
            ++ib;
        }
    }
    return k;
}

std::string where(unsigned q, std::size_t n, std::optional<unsigned> ell = std::nullopt) {
    std::string s = "q=" + std::to_string(q) + " n=" + std::to_string(n);
    if (ell) s += " ell=" + std::to_string(*ell);
    return s + ": ";
}

// Failure without a witnessing pair (formula checks).
VerificationReport point_failure(const std::string& check, unsigned q, std::string details) {
    VerificationReport r;
    r.check = check;
    r.instances = 1;
    r.pass = false;
    r.counterexample = Counterexample{Word(q), Word(q), std::move(details)};
    return r;
}

std::vector<std::vector<std::uint64_t>> balls_of(const std::vector<Word>& words, BallSpec spec) {
    std::vector<std::vector<std::uint64_t>> out;
    out.reserve(words.size());
    for (const Word& w : words) out.push_back(ball_indices(w.symbols(), w.q(), spec));
    return out;
}

VerificationReport check_char2(const SweepGrid& g, unsigned q, std::size_t n) {
    const auto words = all_words(q, n, g.budget);
    return sweep_pairs("char2", words, [&](std::size_t i, std::size_t j) -> std::optional<std::string> {
        const Word& x = words[i];
        const Word& y = words[j];
        const PairStructure ps = decompose_pair(x, y);
        const std::size_t predicted = predicted_distance(ps);
        const std::size_t rd = read_distance(x, y, 2);
        const std::size_t brute = brute_read_distance(x, y, 2);
        if (predicted != rd || rd != brute)
            return where(q, n) + "predicted=" + std::to_string(predicted) + " read_distance=" + std::to_string(rd) +
                   " brute=" + std::to_string(brute);
        if (!boundary_condition_holds(ps)) return where(q, n) + "boundary condition violated";
        if (reassemble(ps, q) != std::pair(x, y)) return where(q, n) + "reassembly mismatch";
        return std::nullopt;
    }, g.threads);
}

VerificationReport check_read_min(const SweepGrid& g, unsigned q, std::size_t n, unsigned ell) {
    const auto words = all_words(q, n, g.budget);
    auto r = sweep_pairs("read_min_distance", words, [&](std::size_t i, std::size_t j) -> std::optional<std::string> {
        const std::size_t rd = read_distance(words[i], words[j], ell);
        const std::size_t brute = brute_read_distance(words[i], words[j], ell);
        if (rd != brute)
            return where(q, n, ell) + "read_distance=" + std::to_string(rd) + " brute=" + std::to_string(brute);
        if (rd < 2) return where(q, n, ell) + "read_distance=" + std::to_string(rd) + " < 2";
        if (hamming_distance(words[i], words[j]) == 1 && rd != ell)
            return where(q, n, ell) + "Hamming 1 pair at read distance " + std::to_string(rd);
        return std::nullopt;
    }, g.threads);
    if (r.pass && n >= 2) {
        // The floor is attained: 01 0^{n-2} against 10 0^{n-2}.
        std::vector<Symbol> a(n, 0), b(n, 0);
        a[1] = 1;
        b[0] = 1;
        const Word x(q, a), y(q, b);
        const std::size_t rd = brute_read_distance(x, y, ell);
        if (rd != 2) {
            r.pass = false;
            r.counterexample = Counterexample{x, y, where(q, n, ell) + "floor witness at " + std::to_string(rd)};
        }
    }
    return r;
}

VerificationReport check_insertion(const SweepGrid& g, unsigned q, std::size_t n) {
    const auto words = all_words(q, n, g.budget);
    const auto balls = balls_of(words, {BallKind::Insertion, 1});
    return sweep_pairs("insertion_equiv", words, [&](std::size_t i, std::size_t j) -> std::optional<std::string> {
        const std::size_t rd = read_distance(words[i], words[j], 2);
        const std::size_t shared = sorted_overlap(balls[i], balls[j]);
        if ((rd == 2) != (shared == 2))
            return where(q, n) + "read_distance=" + std::to_string(rd) + " |I1 cap I1|=" + std::to_string(shared);
        return std::nullopt;
    }, g.threads);
}

VerificationReport check_deletion(const SweepGrid& g, unsigned q, std::size_t n) {
    const auto words = all_words(q, n, g.budget);
    const auto balls = balls_of(words, {BallKind::Deletion, 1});
    return sweep_pairs("deletion_equiv", words, [&](std::size_t i, std::size_t j) -> std::optional<std::string> {
        const bool shape = is_alternating_swap(words[i], words[j], 2);
        const std::size_t shared = sorted_overlap(balls[i], balls[j]);
        if (shape != (shared == 2))
            return where(q, n) + "swap shape=" + (shape ? "yes" : "no") + " |D1 cap D1|=" + std::to_string(shared);
        return std::nullopt;
    }, g.threads);
}

VerificationReport check_indicator_bound(const SweepGrid& g, unsigned q, std::size_t n) {
    const auto words = all_words(q, n, g.budget);
    std::vector<Word> ind;
    for (const Word& w : words) ind.push_back(indicator(w));
    return sweep_pairs("indicator_bound", words, [&](std::size_t i, std::size_t j) -> std::optional<std::string> {
        const std::size_t h = hamming_distance(ind[i], ind[j]);
        const std::size_t rd = read_distance(words[i], words[j], 2);
        if (h < 1 || h > rd)
            return where(q, n) + "indicator distance " + std::to_string(h) + " vs read distance " + std::to_string(rd);
        return std::nullopt;
    }, g.threads);
}

VerificationReport check_binary_indicator(const SweepGrid& g, unsigned q, std::size_t n) {
    if (q != 2) throw Error(ErrorCode::PreconditionViolated, "binary_indicator is defined for q = 2 only");
    const auto words = all_words(q, n, g.budget);
    std::vector<Word> ind;
    for (const Word& w : words) ind.push_back(indicator(w));
    return sweep_pairs("binary_indicator", words, [&](std::size_t i, std::size_t j) -> std::optional<std::string> {
        if (read_distance(words[i], words[j], 2) > 3) return std::nullopt;
        // The pair of indicator differences collapses to one when the last
        // differing position is n.
        const std::size_t expected = words[i].entry(static_cast<std::ptrdiff_t>(n)) == words[j].entry(static_cast<std::ptrdiff_t>(n)) ? 2 : 1;
        const std::size_t h = hamming_distance(ind[i], ind[j]);
        if (h != expected)
            return where(q, n) + "indicator distance " + std::to_string(h) + ", expected " + std::to_string(expected);
        return std::nullopt;
    }, g.threads);
}

VerificationReport check_s1_remark(const SweepGrid& g, unsigned q, std::size_t n, unsigned ell) {
    const auto words = all_words(q, n, g.budget);
    std::vector<Word> phi;
    for (const Word& w : words) phi.push_back(phi_map(read_vector(w, ell)));
    const auto balls = balls_of(phi, {BallKind::Substitution, 1});
    return sweep_pairs("s1_remark", words, [&](std::size_t i, std::size_t j) -> std::optional<std::string> {
        const std::size_t rd = read_distance(words[i], words[j], ell);
        const std::size_t mapped = hamming_distance(phi[i], phi[j]);
        const std::size_t shared = sorted_overlap(balls[i], balls[j]);
        if (rd != mapped)
            return where(q, n, ell) + "read distance " + std::to_string(rd) + " but mapped distance " +
                   std::to_string(mapped);
        if ((rd >= 3) != (shared <= 1))
            return where(q, n, ell) + "read distance " + std::to_string(rd) + " |S1 cap S1|=" + std::to_string(shared);
        return std::nullopt;
    }, g.threads);
}

VerificationReport check_levenshtein(const SweepGrid& g, unsigned q, std::size_t n) {
    VerificationReport total;
    total.check = "levenshtein";
    for (auto [t, d] : g.td) {
        if (d > n) continue;  // no qualifying pairs
        const BigInt formula = levenshtein_N(static_cast<std::int64_t>(n), q, static_cast<std::int64_t>(t),
                                             static_cast<std::int64_t>(d));
        const std::size_t brute = max_ball_intersection(n, q, t, d, PairSpace::Words, 2, g.budget);
        VerificationReport r;
        r.instances = 1;
        if (formula != brute)
            r = point_failure("levenshtein", q, where(q, n) + "t=" + std::to_string(t) + " d=" + std::to_string(d) +
                                                    " formula=" + formula.str() + " oracle=" + std::to_string(brute));
        total.absorb(r);
    }
    return total;
}

VerificationReport check_recon_upper(const SweepGrid& g, unsigned q, std::size_t n, unsigned ell) {
    VerificationReport total;
    total.check = "recon_upper";
    for (std::size_t t : g.ts) {
        for (std::size_t d = 1; d <= 2 * t; ++d) {
            std::size_t brute = 0;
            try {
                brute = max_ball_intersection(n, q, t, d, PairSpace::ReadVectors, ell, g.budget);
            } catch (const Error& e) {
                if (e.code() == ErrorCode::MaxOverEmptySet) continue;
                throw;
            }
            const BigInt bound = read_recon_upper(static_cast<std::int64_t>(n), ell, q, static_cast<std::int64_t>(t),
                                                  static_cast<std::int64_t>(d));
            VerificationReport r;
            r.instances = 1;
            if (bound < brute)
                r = point_failure("recon_upper", q, where(q, n, ell) + "t=" + std::to_string(t) + " d=" +
                                                        std::to_string(d) + " oracle=" + std::to_string(brute) +
                                                        " bound=" + bound.str());
            total.absorb(r);
        }
    }
    return total;
}

unsigned family_ell(Family f) { return f == Family::C33 ? 3 : 2; }

bool family_defined(Family f, unsigned q) {
    return q == 2 || (f != Family::BOUNDED_BIN && f != Family::C24_BIN);
}

// Families whose members are pairwise at 2-read distance >= 3.
bool read_code(Family f) {
    return f == Family::CP || f == Family::C24 || f == Family::C24_BIN || f == Family::AUX1 || f == Family::C25;
}

// False when the derived parameters are undefined at this point.
bool params_defined(Family f, std::size_t n, unsigned q) {
    try {
        derive_params(f, n, q, family_ell(f));
    } catch (const Error& e) {
        if (e.code() != ErrorCode::InvalidFamilyParams) throw;
        return false;
    }
    return true;
}

VerificationReport check_family(const SweepGrid& g, unsigned q, std::size_t n) {
    VerificationReport total;
    total.check = "family";
    const EnumerateOptions opts{g.budget, g.threads};
    for (Family f : g.families) {
        if (!family_defined(f, q)) continue;
        if (!params_defined(f, n, q)) {
            total.grid["skipped"].push_back(std::string(family_name(f)) + " q=" + std::to_string(q) +
                                            " n=" + std::to_string(n));
            continue;
        }
        const ResidueSearch best = best_residues(f, n, q, family_ell(f), {}, opts);
        VerificationReport r = verify_family(best.spec, opts);
        if (!r.pass && r.counterexample)
            r.counterexample->details = std::string(family_name(f)) + " " + where(q, n) + r.counterexample->details;
        total.absorb(r);
    }
    return total;
}

VerificationReport check_clique_cover(const SweepGrid& g, unsigned q, std::size_t n) {
    VerificationReport total;
    total.check = "clique_cover";
    for (std::size_t t : g.ts) {
        const CliqueCover cover = build_clique_cover(n, q, t, g.budget);
        const std::string at = where(q, n) + "t=" + std::to_string(t) + " ";
        VerificationReport r;
        r.instances = 1;
        std::vector<char> seen(static_cast<std::size_t>(space_size(q, n, g.budget)), 0);
        for (const auto& clique : cover.cliques) {
            for (std::size_t a = 0; a < clique.size() && r.pass; ++a) {
                seen[word_index(clique[a])] = 1;
                for (std::size_t b = a + 1; b < clique.size(); ++b) {
                    ++r.pairs_examined;
                    const std::size_t rd = brute_read_distance(clique[a], clique[b], 2);
                    if (rd != 2) {
                        r.pass = false;
                        r.counterexample =
                            Counterexample{clique[a], clique[b], at + "clique pair at read distance " + std::to_string(rd)};
                        break;
                    }
                }
            }
            if (!r.pass) break;
        }
        if (r.pass) {
            const auto missing = std::find(seen.begin(), seen.end(), 0);
            const BigInt counted = clique_cover_count(n, q, t);
            const Rational closed = clique_cover_size(n, q, t);
            if (missing != seen.end()) {
                const Word w = word_at(q, n, static_cast<std::uint64_t>(missing - seen.begin()));
                r.pass = false;
                r.counterexample = Counterexample{w, w, at + "word not covered"};
            } else if (BigInt(cover.cliques.size()) != counted || Rational(counted) != closed) {
                r = point_failure("clique_cover", q, at + "materialised=" + std::to_string(cover.cliques.size()) +
                                                         " counted=" + counted.str() +
                                                         " closed_form=" + format_rational(closed));
            }
        }
        total.absorb(r);
    }
    return total;
}

VerificationReport check_sandwich(const SweepGrid& g, unsigned q, std::size_t n, unsigned ell) {
    if (ell != 2) throw Error(ErrorCode::PreconditionViolated, "sandwich compares against the 2-read graph only");
    VerificationReport total;
    total.check = "sandwich";
    total.instances = 1;
    const std::size_t alpha = independence_number(n, q, ell);
    const EnumerateOptions opts{g.budget, g.threads};
    const std::string at = where(q, n, ell);
    if (n >= 2) {
        for (Family f : g.families) {
            if (!read_code(f) || !family_defined(f, q) || !params_defined(f, n, q)) continue;
            const ResidueSearch best = best_residues(f, n, q, ell, {}, opts);
            if (best.best_size > alpha) {
                total.absorb(point_failure("sandwich", q, at + std::string(family_name(f)) + " size " +
                                                              std::to_string(best.best_size) + " > alpha " +
                                                              std::to_string(alpha)));
                return total;
            }
        }
    }
    for (std::size_t t = 1; t <= std::max<std::size_t>(1, n / 2); ++t) {
        const Rational cover = clique_cover_size(n, q, t);
        if (cover < alpha) {
            total.absorb(point_failure("sandwich", q, at + "alpha " + std::to_string(alpha) + " > clique cover " +
                                                          format_rational(cover) + " at t=" + std::to_string(t)));
            return total;
        }
    }
    return total;
}

} // namespace

VerificationReport sweep(std::string_view check, const SweepGrid& g) {
    using PerQN = VerificationReport (*)(const SweepGrid&, unsigned, std::size_t);
    using PerQNL = VerificationReport (*)(const SweepGrid&, unsigned, std::size_t, unsigned);
    static const std::map<std::string_view, PerQN> per_qn{
        {"char2", check_char2},           {"insertion_equiv", check_insertion},
        {"deletion_equiv", check_deletion}, {"indicator_bound", check_indicator_bound},
        {"binary_indicator", check_binary_indicator}, {"levenshtein", check_levenshtein},
        {"family", check_family},         {"clique_cover", check_clique_cover},
    };
    static const std::map<std::string_view, PerQNL> per_qnl{
        {"read_min_distance", check_read_min},
        {"s1_remark", check_s1_remark},
        {"recon_upper", check_recon_upper},
        {"sandwich", check_sandwich},
    };
    const auto a = per_qn.find(check);
    const auto b = per_qnl.find(check);
    if (a == per_qn.end() && b == per_qnl.end())
        throw Error(ErrorCode::UnknownCheck, "unknown check '" + std::string(check) + "'");
    VerificationReport total;
    total.check = std::string(check);
    total.grid = g.to_json(check);
    for (unsigned q : g.qs)
        for (std::size_t n = g.nmin; n <= g.nmax; ++n) {
            std::vector<VerificationReport> parts;
            if (a != per_qn.end())
                parts.push_back(a->second(g, q, n));
            else
                for (unsigned ell : g.ells) parts.push_back(b->second(g, q, n, ell));
            for (const auto& r : parts) {
                total.absorb(r);
                if (r.grid.contains("skipped"))
                    for (const auto& sk : r.grid["skipped"]) total.grid["skipped"].push_back(sk);
            }
        }
    return total;
}

} // namespace readcode
