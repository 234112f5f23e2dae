// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Every comparison is exact; the tolerance below is the only one.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "readcode/bounds.hpp"
#include "readcode/cli.hpp"
#include "readcode/sweep.hpp"

using namespace readcode;

namespace {

// Allowed absolute difference between an integer quantity and its check value.
constexpr long kExactTolerance = 0;

struct Outcome {
    bool pass;
    std::string detail;
};

Outcome from_reports(const std::vector<VerificationReport>& reports) {
    std::uint64_t instances = 0, pairs = 0;
    for (const auto& r : reports) {
        instances += r.instances;
        pairs += r.pairs_examined;
        if (!r.pass) {
            std::string d = r.check + " failed";
            if (r.counterexample)
                d += ": x=" + format_word(r.counterexample->x) + " y=" + format_word(r.counterexample->y) + " " +
                     r.counterexample->details;
            return {false, d};
        }
    }
    return {true, std::to_string(instances) + " instances, " + std::to_string(pairs) + " pairs"};
}

SweepGrid grid(std::vector<unsigned> qs, std::size_t nmax, std::vector<unsigned> ells = {2}) {
    SweepGrid g;
    g.qs = std::move(qs);
    g.nmax = nmax;
    g.ells = std::move(ells);
    return g;
}

bool exact(const BigInt& a, const BigInt& b) {
    BigInt d = a - b;
    if (d < 0) d = -d;
    return d <= kExactTolerance;
}

Outcome criterion1() {
    return from_reports({sweep("char2", grid({2}, 10)), sweep("char2", grid({3}, 6))});
}

Outcome criterion2() { return from_reports({sweep("read_min_distance", grid({2, 3}, 7, {2, 3, 4}))}); }

Outcome criterion3() {
    return from_reports({sweep("insertion_equiv", grid({2, 3}, 8)), sweep("deletion_equiv", grid({2, 3}, 8))});
}

Outcome criterion4() {
    SweepGrid most = grid({2, 3}, 12);
    most.families.clear();
    for (Family f : all_families())
        if (f != Family::C25) most.families.push_back(f);
    SweepGrid c25 = grid({2, 3}, 10);
    c25.families = {Family::C25};
    return from_reports({sweep("family", most), sweep("family", c25)});
}

Outcome criterion5() {
    SweepGrid g = grid({2}, 12);
    g.ts = {1, 2};
    Outcome o = from_reports({sweep("clique_cover", g)});
    const CliqueCover worked = build_clique_cover(4, 2, 1);
    if (worked.cliques.size() != 6 || clique_cover_size(4, 2, 1) != 6)
        return {false, "worked instance q=2 t=1 n=4 gives " + std::to_string(worked.cliques.size())};
    o.detail += ", worked instance 6";
    return o;
}

Outcome criterion6() { return from_reports({sweep("sandwich", grid({2}, 8))}); }

Outcome criterion7() {
    Outcome o = from_reports({sweep("levenshtein", grid({2, 3}, 7))});
    if (!o.pass) return o;
    struct Frozen {
        std::int64_t n;
        std::uint64_t q;
        std::int64_t t, d;
        long value;
    };
    const Frozen frozen[] = {{5, 2, 1, 2, 2},  {5, 2, 2, 2, 10}, {6, 2, 1, 1, 2}, {6, 2, 2, 2, 12},
                             {6, 2, 2, 4, 6},  {6, 3, 1, 1, 3},  {6, 3, 2, 2, 25}, {6, 3, 2, 3, 12}};
    for (const Frozen& f : frozen)
        if (!exact(levenshtein_N(f.n, f.q, f.t, f.d), f.value))
            return {false, "N(" + std::to_string(f.n) + "," + std::to_string(f.q) + "," + std::to_string(f.t) + "," +
                               std::to_string(f.d) + ") != " + std::to_string(f.value)};
    o.detail += ", regression values N(5,2,1,2)=2 N(5,2,2,2)=10";
    return o;
}

Outcome criterion8() {
    SweepGrid g = grid({2}, 6, {2, 3});
    g.ts = {1, 2};
    return from_reports({sweep("recon_upper", g)});
}

Outcome criterion9() { return from_reports({sweep("s1_remark", grid({2}, 7, {2, 3}))}); }

Outcome criterion10() {
    const std::vector<std::string> args{"table", "--families", "c33,cp,cdel,c24,c25", "--q", "2", "--n", "8..14"};
    auto run = [](std::vector<std::string> a) {
        std::ostringstream out, err;
        const int rc = run_cli(a, out, err);
        return std::pair{rc, out.str()};
    };
    const auto first = run(args);
    const auto second = run(args);
    auto threaded = args;
    threaded.insert(threaded.begin(), {"--threads", "4"});
    const auto parallel = run(threaded);
    if (first.first != kExitOk) return {false, "table exited with " + std::to_string(first.first)};
    if (first.second != second.second) return {false, "two runs differ"};
    if (first.second != parallel.second) return {false, "1 and 4 threads differ"};
    return {true, std::to_string(first.second.size()) + " bytes identical across runs and thread counts"};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"characterization equivalence", criterion1},
        {"distance floor", criterion2},
        {"ball equivalences", criterion3},
        {"family guarantees", criterion4},
        {"clique cover", criterion5},
        {"bound sandwich", criterion6},
        {"intersection formula", criterion7},
        {"reconstruction upper bound", criterion8},
        {"substitution ball remark", criterion9},
        {"determinism", criterion10},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += !o.pass;
        std::printf("criterion %2zu %s: %s (%s; %.1fs)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures ? 1 : 0;
}
