#include "readcode/seqcore.hpp"
#include "readcode/space.hpp"
#include "readcode/sweep.hpp"
#include "support.hpp"

using namespace readcode;
using readcode::test::W;

namespace {

SweepGrid grid(std::size_t nmax, std::vector<unsigned> qs = {2}) {
    SweepGrid g;
    g.qs = std::move(qs);
    g.nmax = nmax;
    return g;
}

} // namespace

TEST_CASE("check names") {
    const auto names = sweep_checks();
    CHECK(names.size() == 12);
    CHECK(std::find(names.begin(), names.end(), "char2") != names.end());
    CHECK_ERROR(sweep("nonsense", grid(3)), ErrorCode::UnknownCheck);
}

TEST_CASE("pair sweeps report the lexicographically first failure") {
    const auto words = all_words(2, 6);
    // Fails on pairs at read distance 3 only.
    const PairPredicate pred = [&](std::size_t i, std::size_t j) -> std::optional<std::string> {
        if (read_distance(words[i], words[j], 2) == 3) return "distance 3";
        return std::nullopt;
    };
    const auto one = sweep_pairs("corrupt", words, pred, 1);
    CHECK_FALSE(one.pass);
    REQUIRE(one.counterexample);
    std::optional<std::pair<std::size_t, std::size_t>> first;
    std::uint64_t before = 0;
    for (std::size_t i = 0; i < words.size() && !first; ++i)
        for (std::size_t j = i + 1; j < words.size() && !first; ++j) {
            ++before;
            if (pred(i, j)) first = {i, j};
        }
    REQUIRE(first);
    CHECK(one.counterexample->x == words[first->first]);
    CHECK(one.counterexample->y == words[first->second]);
    CHECK(one.pairs_examined == before);
    for (unsigned t : {2u, 3u, 4u}) CHECK(sweep_pairs("corrupt", words, pred, t).to_json() == one.to_json());

    const auto ok = sweep_pairs("fine", words, [](std::size_t, std::size_t) { return std::optional<std::string>{}; }, 3);
    CHECK(ok.pass);
    CHECK(ok.pairs_examined == words.size() * (words.size() - 1) / 2);
}

TEST_CASE("the literal two-difference statement fails at n = 2") {
    const auto words = all_words(2, 2);
    const auto r = sweep_pairs("literal", words, [&](std::size_t i, std::size_t j) -> std::optional<std::string> {
        if (read_distance(words[i], words[j], 2) > 3) return std::nullopt;
        if (hamming_distance(indicator(words[i]), indicator(words[j])) != 2) return "indicator distance is not 2";
        return std::nullopt;
    });
    CHECK_FALSE(r.pass);
    CHECK(r.counterexample->x == W("00"));
    CHECK(r.counterexample->y == W("01"));
}

TEST_CASE("binary indicator check needs q = 2") {
    CHECK_ERROR(sweep("binary_indicator", grid(3, {3})), ErrorCode::PreconditionViolated);
    CHECK(sweep("binary_indicator", grid(8)).pass);
}

TEST_CASE("every check passes on a small grid") {
    for (const std::string& name : sweep_checks()) {
        // Exact independence numbers and read-vector balls are slow at q = 3.
        const bool binary = name == "binary_indicator" || name == "sandwich" || name == "recon_upper";
        SweepGrid g = grid(name == "family" ? 7 : 5, binary ? std::vector<unsigned>{2} : std::vector<unsigned>{2, 3});
        if (name == "family") g.ells = {2, 3};
        const auto r = sweep(name, g);
        INFO(name, ": ", r.to_json().dump());
        CHECK(r.pass);
        CHECK(r.instances > 0);
        CHECK(r.check == name);
    }
}

TEST_CASE("sweep reports are deterministic") {
    for (const char* name : {"char2", "levenshtein", "family", "clique_cover"}) {
        SweepGrid g = grid(6, {2, 3});
        const auto a = sweep(name, g).to_json();
        g.threads = 4;
        CHECK(sweep(name, g).to_json() == a);
    }
}

TEST_CASE("grid metadata") {
    SweepGrid g = grid(4, {2, 3});
    const auto j = g.to_json("family");
    CHECK(j["nmax"] == 4);
    const auto r = sweep("family", g);
    // The deletion code has no parameters at q = 3, n = 2.
    REQUIRE(r.grid.contains("skipped"));
    const auto& skipped = r.grid["skipped"];
    CHECK(std::find(skipped.begin(), skipped.end(), "cdel q=3 n=2") != skipped.end());
    SweepGrid small = grid(20);
    small.budget = 1024;
    CHECK_ERROR(sweep("char2", small), ErrorCode::BudgetExceeded);
}
