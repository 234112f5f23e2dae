#include "readcode/codebook.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <unordered_map>

#include "readcode/characterize.hpp"
#include "readcode/error.hpp"
#include "readcode/numeric.hpp"
#include "readcode/oracle.hpp"
#include "readcode/seqcore.hpp"

namespace readcode {

namespace {

constexpr Family kFamilies[] = {Family::C33,  Family::CP,      Family::CDEL, Family::BOUNDED, Family::BOUNDED_BIN,
                                Family::C24,  Family::C24_BIN, Family::AUX1, Family::AUX2,    Family::C25};

[[noreturn]] void bad_params(const std::string& msg) { throw Error(ErrorCode::InvalidFamilyParams, msg); }

// log_q n + log_q log_q n, snapped near integers.
double log_sum(std::size_t n, unsigned q) {
    if (n < 2) bad_params("log_q n + log_q log_q n is undefined for n=" + std::to_string(n));
    const double L = log_base(static_cast<double>(n), q);
    return snap(L + log_base(L, q));
}

std::uint64_t prime_at_least(std::int64_t v) {
    return smallest_prime_at_least(static_cast<std::uint64_t>(std::max<std::int64_t>(v, 2)));
}

std::int64_t integral_P(const FamilyOverrides& o, std::size_t n, unsigned q, std::int64_t mult) {
    if (o.P) return *o.P;
    return mult * ceil_snapped(log_sum(n, q)) + 1;
}

Constraint vt(Target target, unsigned order, std::uint64_t modulus) { return {target, Functional::VT, order, modulus}; }

void add_aux1(CodeFamilySpec& s, std::int64_t P) {
    const std::uint64_t p = prime_at_least(std::max<std::int64_t>(P, s.q));
    s.constraints.push_back(vt(Target::Indicator, 0, 4ull * (s.q - 1) + 1));
    for (unsigned k = 1; k <= 3; ++k) s.constraints.push_back(vt(Target::Indicator, k, p));
}

void add_aux2(CodeFamilySpec& s, std::int64_t P) {
    s.constraints.push_back(vt(Target::Word, 0, 2ull * s.q - 1));
    s.constraints.push_back(vt(Target::Word, 2, smallest_prime_at_least(4 * s.n + 1)));
    s.constraints.push_back(vt(Target::Odd, 0, static_cast<std::uint64_t>((s.q - 1) * (P - 1) / 3) + 1));
}

std::string lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = c == '-' ? '_' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::string_view target_name(Target t) {
    switch (t) {
    case Target::Word: return "word";
    case Target::Indicator: return "indicator";
    case Target::Odd: return "odd";
    }
    return "word";
}

} // namespace

std::string_view family_name(Family f) noexcept {
    switch (f) {
    case Family::C33: return "c33";
    case Family::CP: return "cp";
    case Family::CDEL: return "cdel";
    case Family::BOUNDED: return "bounded";
    case Family::BOUNDED_BIN: return "bounded_bin";
    case Family::C24: return "c24";
    case Family::C24_BIN: return "c24_bin";
    case Family::AUX1: return "aux1";
    case Family::AUX2: return "aux2";
    case Family::C25: return "c25";
    }
    return "unknown";
}

Family parse_family(std::string_view name) {
    const std::string key = lower(name);
    for (Family f : kFamilies)
        if (family_name(f) == key) return f;
    bad_params("unknown family '" + std::string(name) + "'");
}

std::vector<Family> all_families() { return {std::begin(kFamilies), std::end(kFamilies)}; }

std::vector<std::uint64_t> CodeFamilySpec::moduli() const {
    std::vector<std::uint64_t> out;
    for (const Constraint& c : constraints) out.push_back(c.modulus);
    return out;
}

std::string CodeFamilySpec::P_text() const {
    if (P == std::floor(P)) return std::to_string(static_cast<std::int64_t>(P));
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", P);
    return buf;
}

nlohmann::ordered_json CodeFamilySpec::to_json() const {
    nlohmann::ordered_json j;
    j["family"] = family_name(family);
    j["n"] = n;
    j["q"] = q;
    j["ell"] = ell;
    if (P == std::floor(P))
        j["P"] = static_cast<std::int64_t>(P);
    else
        j["P"] = P;
    j["run_cap"] = run_cap ? nlohmann::ordered_json(*run_cap) : nlohmann::ordered_json(nullptr);
    j["good_threshold"] = good_threshold ? nlohmann::ordered_json(*good_threshold) : nlohmann::ordered_json(nullptr);
    j["d"] = d ? nlohmann::ordered_json(*d) : nlohmann::ordered_json(nullptr);
    nlohmann::ordered_json cs = nlohmann::ordered_json::array();
    for (const Constraint& c : constraints)
        cs.push_back({{"target", target_name(c.target)},
                      {"functional", c.functional == Functional::VT ? "vt" : "inv"},
                      {"order", c.order},
                      {"modulus", c.modulus}});
    j["constraints"] = std::move(cs);
    j["moduli"] = moduli();
    j["residues"] = residues.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(residues);
    if (!residue_mode.empty()) j["residue_mode"] = residue_mode;
    return j;
}

CodeFamilySpec derive_params(Family family, std::size_t n, unsigned q, unsigned ell, const FamilyOverrides& o) {
    if (q < 2 || q > kMaxAlphabet) bad_params("alphabet size out of range");
    CodeFamilySpec s;
    s.family = family;
    s.n = n;
    s.q = q;
    s.ell = ell;
    const bool binary = family == Family::BOUNDED_BIN || family == Family::C24_BIN;
    if (binary && q != 2) bad_params(std::string(family_name(family)) + " requires q=2");
    if (family == Family::C33) {
        if (ell < 3) bad_params("c33 requires l >= 3");
    } else if (ell != 2) {
        bad_params(std::string(family_name(family)) + " is defined for l=2 only");
    }
    if (o.d && family != Family::BOUNDED) {
        const unsigned fixed = family == Family::BOUNDED_BIN ? 3 : 0;
        if (*o.d != fixed) bad_params("d can only be overridden for the bounded family");
    }

    switch (family) {
    case Family::C33: {
        const std::int64_t P = o.P ? *o.P : ceil_snapped(log_sum(n, q) / 2);
        if (P < 1) bad_params("c33 needs P >= 1, got " + std::to_string(P));
        s.P = static_cast<double>(P);
        s.good_threshold = o.good_threshold ? *o.good_threshold : static_cast<unsigned>(P - 1);
        s.constraints.push_back({Target::Word, Functional::Inv, 0, static_cast<std::uint64_t>(P)});
        break;
    }
    case Family::CP: {
        std::int64_t P;
        if (o.P) {
            P = *o.P;
        } else {
            P = floor_snapped(log_sum(n, q)) + 1;
            if (P % 2) ++P;
        }
        if (P < 2 || P % 2) bad_params("cp needs an even P >= 2, got " + std::to_string(P));
        s.P = static_cast<double>(P);
        s.run_cap = static_cast<std::size_t>(P);
        s.constraints.push_back(vt(Target::Word, 0, q));
        s.constraints.push_back({Target::Word, Functional::Inv, 0, static_cast<std::uint64_t>(1 + P / 2)});
        break;
    }
    case Family::CDEL: {
        const double P = o.P ? static_cast<double>(*o.P) : log_sum(n, q);
        const std::int64_t cap = floor_snapped(P);
        if (cap < 1) bad_params("cdel needs P >= 1");
        const std::int64_t half = ceil_snapped(P / 2);
        const std::uint64_t p = smallest_prime_at_least(static_cast<std::uint64_t>(half) + 1);
        const std::uint64_t m = std::min<std::uint64_t>(p, (q - 1) * static_cast<std::uint64_t>(half) + 1);
        s.P = P;
        s.run_cap = static_cast<std::size_t>(cap);
        s.constraints.push_back(vt(Target::Odd, 0, m));
        break;
    }
    case Family::BOUNDED:
    case Family::BOUNDED_BIN: {
        const std::int64_t P = integral_P(o, n, q, 2);
        if (P < 1) bad_params("bounded codes need P >= 1");
        s.P = static_cast<double>(P);
        if (family == Family::BOUNDED) {
            const unsigned d = o.d ? *o.d : 4;
            if (d < 2) bad_params("bounded codes need d >= 2");
            s.d = d;
            const std::uint64_t p = prime_at_least(std::max<std::int64_t>(P, q));
            s.constraints.push_back(vt(Target::Word, 0, static_cast<std::uint64_t>(d - 1) * (q - 1) + 1));
            for (unsigned k = 1; k + 2 <= d; ++k) s.constraints.push_back(vt(Target::Word, k, p));
        } else {
            s.d = 3;
            s.constraints.push_back(vt(Target::Word, 0, 3));
            s.constraints.push_back(vt(Target::Word, 1, static_cast<std::uint64_t>(P)));
        }
        break;
    }
    case Family::C24:
    case Family::C24_BIN: {
        const std::int64_t P = integral_P(o, n, q, 2);
        if (P < 3 || (P - 1) % 2) bad_params("c24 needs P >= 3 with 2 | P-1, got " + std::to_string(P));
        s.P = static_cast<double>(P);
        s.run_cap = static_cast<std::size_t>((P - 1) / 2);
        s.d = 4;
        if (family == Family::C24) {
            const std::uint64_t p = prime_at_least(std::max<std::int64_t>(P, q));
            s.constraints.push_back(vt(Target::Indicator, 0, 3ull * (q - 1) + 1));
            s.constraints.push_back(vt(Target::Indicator, 1, p));
            s.constraints.push_back(vt(Target::Indicator, 2, p));
        } else {
            s.constraints.push_back(vt(Target::Indicator, 0, 3));
            s.constraints.push_back(vt(Target::Indicator, 1, static_cast<std::uint64_t>(P)));
        }
        break;
    }
    case Family::AUX1:
    case Family::AUX2:
    case Family::C25: {
        const std::int64_t P = integral_P(o, n, q, 3);
        if (P < 4 || (P - 1) % 3) bad_params("aux codes need P >= 4 with 3 | P-1, got " + std::to_string(P));
        s.P = static_cast<double>(P);
        s.run_cap = static_cast<std::size_t>((P - 1) / 3);
        if (family != Family::AUX2) {
            s.d = 5;
            add_aux1(s, P);
        }
        if (family != Family::AUX1) add_aux2(s, P);
        break;
    }
    }

    if (o.good_threshold && family != Family::C33) bad_params("goodness threshold applies to c33 only");
    if (o.run_cap) s.run_cap = *o.run_cap;
    if (o.moduli) {
        if (o.moduli->size() != s.constraints.size())
            bad_params("expected " + std::to_string(s.constraints.size()) + " moduli, got " +
                       std::to_string(o.moduli->size()));
        for (std::size_t i = 0; i < s.constraints.size(); ++i) {
            if ((*o.moduli)[i] == 0) bad_params("moduli must be positive");
            s.constraints[i].modulus = (*o.moduli)[i];
        }
    }
    return s;
}

bool in_ambient(const CodeFamilySpec& spec, const Word& x) {
    if (spec.run_cap && !in_all(x, *spec.run_cap)) return false;
    if (spec.good_threshold && !is_good(x, spec.ell, *spec.good_threshold)) return false;
    return true;
}

std::vector<std::uint64_t> signature(const CodeFamilySpec& spec, const Word& x) {
    std::optional<Word> ind, odd;
    std::vector<std::uint64_t> out;
    out.reserve(spec.constraints.size());
    for (const Constraint& c : spec.constraints) {
        const Word* target = &x;
        if (c.target == Target::Indicator) {
            if (!ind) ind = indicator(x);
            target = &*ind;
        } else if (c.target == Target::Odd) {
            if (!odd) odd = odd_subword(x);
            target = &*odd;
        }
        if (c.functional == Functional::Inv)
            out.push_back(inversion_number(*target) % c.modulus);
        else
            out.push_back(vt_residue(*target, c.order, c.modulus));
    }
    return out;
}

bool is_member(const CodeFamilySpec& spec, const Word& x) {
    if (x.size() != spec.n || x.q() != spec.q)
        throw Error(ErrorCode::ShapeMismatch, "word " + format_word(x) + " does not match n=" + std::to_string(spec.n) +
                                                  ", q=" + std::to_string(spec.q));
    if (spec.residues.size() != spec.constraints.size())
        bad_params("residues unset: expected " + std::to_string(spec.constraints.size()));
    if (!in_ambient(spec, x)) return false;
    return signature(spec, x) == spec.residues;
}

std::optional<double> EnumeratedCode::redundancy() const {
    if (words.empty()) return std::nullopt;
    return static_cast<double>(spec.n) - log_base(static_cast<double>(words.size()), spec.q);
}

namespace {

// Calls fn(word) for every word with index in [begin, end), in order.
template <typename Fn>
void for_range(unsigned q, std::size_t n, std::uint64_t begin, std::uint64_t end, Fn&& fn) {
    if (begin >= end) return;
    std::vector<Symbol> s;
    word_at(q, n, begin, s);
    for (std::uint64_t i = begin; i < end; ++i) {
        fn(Word(q, s));
        for (std::size_t k = n; k-- > 0;) {
            if (++s[k] < q) break;
            s[k] = 0;
        }
    }
}

} // namespace

EnumeratedCode enumerate(const CodeFamilySpec& spec, const EnumerateOptions& options) {
    if (spec.residues.size() != spec.constraints.size())
        bad_params("residues unset: expected " + std::to_string(spec.constraints.size()));
    const std::uint64_t total = space_size(spec.q, spec.n, options.budget);
    const unsigned workers = resolve_threads(options.threads);
    std::vector<std::vector<Word>> shards(workers);
    parallel_shards(total, workers, [&](std::uint64_t b, std::uint64_t e, unsigned w) {
        for_range(spec.q, spec.n, b, e, [&](const Word& x) {
            if (in_ambient(spec, x) && signature(spec, x) == spec.residues) shards[w].push_back(x);
        });
    });
    EnumeratedCode code{spec, {}};
    for (auto& shard : shards)
        for (auto& w : shard) code.words.push_back(std::move(w));
    return code;
}

namespace {

struct Bucketing {
    std::map<std::vector<std::uint64_t>, std::uint64_t> counts;
    std::uint64_t ambient = 0;
};

Bucketing bucket(const CodeFamilySpec& spec, const EnumerateOptions& options) {
    const std::uint64_t total = space_size(spec.q, spec.n, options.budget);
    const unsigned workers = resolve_threads(options.threads);
    std::vector<Bucketing> shards(workers);
    parallel_shards(total, workers, [&](std::uint64_t b, std::uint64_t e, unsigned w) {
        for_range(spec.q, spec.n, b, e, [&](const Word& x) {
            if (!in_ambient(spec, x)) return;
            ++shards[w].ambient;
            ++shards[w].counts[signature(spec, x)];
        });
    });
    Bucketing merged;
    for (auto& s : shards) {
        merged.ambient += s.ambient;
        for (auto& [k, v] : s.counts) merged.counts[k] += v;
    }
    return merged;
}

std::pair<std::vector<std::uint64_t>, std::uint64_t> pick_best(const Bucketing& b, std::size_t arity) {
    std::vector<std::uint64_t> best(arity, 0);
    std::uint64_t size = 0;
    for (const auto& [key, count] : b.counts)
        if (count > size) {
            size = count;
            best = key;
        }
    return {best, size};
}

} // namespace

ResidueSearch best_residues(const CodeFamilySpec& base, const EnumerateOptions& options, bool independent) {
    ResidueSearch out;
    out.spec = base;
    if (independent && base.family == Family::C25) {
        // AUX1 constraints come first, then the AUX2 ones.
        const std::size_t split = 4;
        std::vector<std::uint64_t> residues;
        for (int half = 0; half < 2; ++half) {
            CodeFamilySpec part = base;
            part.constraints.assign(base.constraints.begin() + (half ? split : 0),
                                    half ? base.constraints.end() : base.constraints.begin() + split);
            const Bucketing b = bucket(part, options);
            const auto [key, size] = pick_best(b, part.constraints.size());
            residues.insert(residues.end(), key.begin(), key.end());
            out.ambient_size = b.ambient;
            out.buckets += b.counts.size();
        }
        out.spec.residues = residues;
        out.spec.residue_mode = "independent";
        out.best_size = enumerate(out.spec, options).size();
        return out;
    }
    const Bucketing b = bucket(base, options);
    const auto [key, size] = pick_best(b, base.constraints.size());
    out.spec.residues = key;
    out.spec.residue_mode = "joint";
    out.best_size = size;
    out.ambient_size = b.ambient;
    out.buckets = b.counts.size();
    return out;
}

ResidueSearch best_residues(Family family, std::size_t n, unsigned q, unsigned ell, const FamilyOverrides& overrides,
                            const EnumerateOptions& options, bool independent) {
    return best_residues(derive_params(family, n, q, ell, overrides), options, independent);
}

void pairs_within(const std::vector<std::vector<std::uint32_t>>& strings, std::size_t max_distance,
                  const std::function<void(std::size_t, std::size_t, std::size_t)>& visit) {
    if (strings.size() < 2) return;
    const std::size_t len = strings[0].size();
    const std::size_t blocks = max_distance + 1;
    auto bounds = [&](std::size_t b) { return std::pair{b * len / blocks, (b + 1) * len / blocks}; };
    auto agree = [&](std::size_t i, std::size_t j, std::size_t b) {
        const auto [lo, hi] = bounds(b);
        return std::equal(strings[i].begin() + lo, strings[i].begin() + hi, strings[j].begin() + lo);
    };
    for (std::size_t b = 0; b < blocks; ++b) {
        const auto [lo, hi] = bounds(b);
        std::map<std::vector<std::uint32_t>, std::vector<std::size_t>> buckets;
        for (std::size_t i = 0; i < strings.size(); ++i)
            buckets[std::vector<std::uint32_t>(strings[i].begin() + lo, strings[i].begin() + hi)].push_back(i);
        for (const auto& [key, members] : buckets) {
            for (std::size_t a = 0; a < members.size(); ++a)
                for (std::size_t c = a + 1; c < members.size(); ++c) {
                    const std::size_t i = members[a], j = members[c];
                    bool seen = false;
                    for (std::size_t e = 0; e < b && !seen; ++e) seen = agree(i, j, e);
                    if (seen) continue;
                    std::size_t dist = 0;
                    for (std::size_t k = 0; k < len && dist <= max_distance; ++k) dist += strings[i][k] != strings[j][k];
                    if (dist <= max_distance) visit(i, j, dist);
                }
        }
    }
}

namespace {

struct Violations {
    std::uint64_t examined = 0;
    std::optional<std::pair<std::size_t, std::size_t>> first;
    std::string details;

    void offer(std::size_t i, std::size_t j, std::string why) {
        if (!first || std::pair{i, j} < *first) {
            first = {i, j};
            details = std::move(why);
        }
    }
};

// Pair counts |B(x) cap B(y)| for every pair with a shared ball member.
void shared_ball_counts(const std::vector<Word>& words, BallSpec spec,
                        const std::function<void(std::size_t, std::size_t, std::size_t)>& visit) {
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> holders;
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::uint64_t z : ball_indices(words[i].symbols(), words[i].q(), spec))
            holders[z].push_back(static_cast<std::uint32_t>(i));
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> shared;
    for (const auto& [z, list] : holders)
        for (std::size_t a = 0; a < list.size(); ++a)
            for (std::size_t b = a + 1; b < list.size(); ++b) ++shared[{list[a], list[b]}];
    for (const auto& [pair, count] : shared) visit(pair.first, pair.second, count);
}

std::vector<std::vector<std::uint32_t>> rank_strings(const std::vector<Word>& words, unsigned ell) {
    std::vector<std::vector<std::uint32_t>> out;
    out.reserve(words.size());
    for (const Word& w : words) out.push_back(read_ranks(w, ell));
    return out;
}

} // namespace

VerificationReport verify_family(const CodeFamilySpec& spec, const EnumerateOptions& options) {
    const EnumeratedCode code = enumerate(spec, options);
    const auto& words = code.words;
    VerificationReport report;
    report.check = "family";
    report.grid = spec.to_json();
    report.grid["code_size"] = words.size();
    report.instances = words.size();
    Violations v;

    auto read_floor = [&](unsigned ell, std::size_t floor, bool aux1, bool aux2) {
        // Candidates: every pair at read distance <= max(floor - 1, 4 when a case is excluded).
        const std::size_t reach = (aux1 || aux2) ? 4 : floor - 1;
        pairs_within(rank_strings(words, ell), reach, [&](std::size_t i, std::size_t j, std::size_t dist) {
            ++v.examined;
            if (dist < floor) {
                v.offer(i, j, "read distance " + std::to_string(dist) + " < " + std::to_string(floor));
                return;
            }
            if (dist != 4 || !(aux1 || aux2)) return;
            const D4Shape shape = classify_d4(words[i], words[j]);
            if (aux1 && shape.tag == D4Case::B) v.offer(i, j, "read distance 4 in case B");
            if (aux2 && shape.tag == D4Case::A) v.offer(i, j, "read distance 4 in case A");
        });
    };

    switch (spec.family) {
    case Family::C33: read_floor(spec.ell, 3, false, false); break;
    case Family::CP:
        read_floor(2, 3, false, false);
        shared_ball_counts(words, {BallKind::Insertion, 1}, [&](std::size_t i, std::size_t j, std::size_t c) {
            ++v.examined;
            if (c > 1) v.offer(i, j, "|I1(x) cap I1(y)| = " + std::to_string(c));
        });
        break;
    case Family::CDEL:
        shared_ball_counts(words, {BallKind::Deletion, 1}, [&](std::size_t i, std::size_t j, std::size_t c) {
            ++v.examined;
            if (c > 1) v.offer(i, j, "|D1(x) cap D1(y)| = " + std::to_string(c));
        });
        break;
    case Family::BOUNDED:
    case Family::BOUNDED_BIN: {
        const std::size_t d = *spec.d;
        std::vector<std::vector<std::uint32_t>> plain;
        for (const Word& w : words) plain.emplace_back(w.vec().begin(), w.vec().end());
        pairs_within(plain, d - 1, [&](std::size_t i, std::size_t j, std::size_t dist) {
            ++v.examined;
            const std::size_t span = window_span(words[i], words[j], SpanTransform::Identity);
            if (static_cast<double>(span) <= spec.P)
                v.offer(i, j, "Hamming distance " + std::to_string(dist) + " < " + std::to_string(d) +
                                  " with window span " + std::to_string(span));
        });
        break;
    }
    case Family::C24:
    case Family::C24_BIN: read_floor(2, 4, false, false); break;
    case Family::AUX1: read_floor(2, 4, true, false); break;
    case Family::AUX2: read_floor(2, 0, false, true); break;
    case Family::C25: read_floor(2, 5, false, false); break;
    }

    report.pairs_examined = v.examined;
    if (v.first) {
        report.pass = false;
        report.counterexample = Counterexample{words[v.first->first], words[v.first->second], v.details};
    }
    return report;
}

} // namespace readcode
