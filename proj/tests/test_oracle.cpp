#include <set>

#include "readcode/numeric.hpp"
#include "readcode/oracle.hpp"
#include "readcode/seqcore.hpp"
#include "readcode/space.hpp"
#include "support.hpp"

using namespace readcode;
using readcode::test::W;

namespace {

// Closed-form insertion ball size, independent of x.
std::size_t insertion_ball_size(std::size_t n, unsigned q, std::size_t t) {
    BigInt s = 0;
    for (std::size_t i = 0; i <= t; ++i)
        s += binomial(static_cast<std::int64_t>(n + t), static_cast<std::int64_t>(i)) * ipow(BigInt(q - 1), static_cast<unsigned>(i));
    return s.convert_to<std::size_t>();
}

std::size_t runs(const Word& x) {
    std::size_t r = x.empty() ? 0 : 1;
    for (std::size_t i = 1; i < x.size(); ++i) r += x.vec()[i] != x.vec()[i - 1];
    return r;
}

std::vector<std::vector<std::uint32_t>> graph(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<std::uint32_t>> adj(n);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

} // namespace

TEST_CASE("substitution balls") {
    for (unsigned q : {2u, 3u})
        for (std::size_t n = 0; n <= 5; ++n)
            for (const Word& x : all_words(q, n)) REQUIRE(ball(x, {BallKind::Substitution, 1}).size() == 1 + n * (q - 1));
    // At most t substitutions.
    CHECK(ball(W("000"), {BallKind::Substitution, 2}).size() == 7);
    CHECK(ball(W("01"), {BallKind::Substitution, 0}) == std::vector<Word>{W("01")});
}

TEST_CASE("insertion balls") {
    const auto b = ball(W("01"), {BallKind::Insertion, 1});
    CHECK(b == std::vector<Word>{W("001"), W("010"), W("011"), W("101")});
    for (unsigned q : {2u, 3u})
        for (std::size_t n = 0; n <= 4; ++n)
            for (const Word& x : all_words(q, n))
                for (std::size_t t = 1; t <= 2; ++t)
                    REQUIRE(ball(x, {BallKind::Insertion, t}).size() == insertion_ball_size(n, q, t));
    // Exactly t insertions: every member has length n + t.
    for (const Word& y : ball(W("0110"), {BallKind::Insertion, 2})) CHECK(y.size() == 6);
}

TEST_CASE("deletion balls") {
    CHECK(ball(W("00"), {BallKind::Deletion, 1}) == std::vector<Word>{W("0")});
    CHECK_ERROR(ball(W("01"), {BallKind::Deletion, 3}), ErrorCode::RadiusTooLarge);
    CHECK(ball(W("01"), {BallKind::Deletion, 2}) == std::vector<Word>{W("")});
    for (unsigned q : {2u, 3u})
        for (std::size_t n = 1; n <= 6; ++n)
            for (const Word& x : all_words(q, n)) {
                REQUIRE(ball(x, {BallKind::Deletion, 1}).size() == runs(x));
                REQUIRE(run_count(x) == runs(x));
            }
    // Deleting exactly two symbols, by direct position choice.
    const Word x = W("01101");
    std::set<Word> direct;
    for (std::size_t i = 1; i <= 5; ++i)
        for (std::size_t j = i + 1; j <= 5; ++j) {
            std::vector<Symbol> s;
            for (std::size_t k = 1; k <= 5; ++k)
                if (k != i && k != j) s.push_back(x.vec()[k - 1]);
            direct.insert(Word(2, s));
        }
    CHECK(ball(x, {BallKind::Deletion, 2}) == std::vector<Word>(direct.begin(), direct.end()));
}

TEST_CASE("ball intersections") {
    CHECK(ball_intersection(W("01"), W("10"), {BallKind::Insertion, 1}) == 2);
    CHECK(ball_intersection(W("01"), W("10"), {BallKind::Deletion, 1}) == 2);
    for (BallKind k : {BallKind::Substitution, BallKind::Insertion, BallKind::Deletion})
        CHECK(ball_intersection(W("0110"), W("0110"), {k, 1}) == ball(W("0110"), {k, 1}).size());
    CHECK_ERROR(ball_intersection(W("01"), W("011"), {BallKind::Insertion, 1}), ErrorCode::ShapeMismatch);
}

TEST_CASE("brute read distance agrees with the sliding count") {
    for (unsigned q : {2u, 3u})
        for (std::size_t n = 1; n <= (q == 2 ? 6u : 4u); ++n) {
            const auto words = all_words(q, n);
            for (unsigned ell : {2u, 3u, 5u})
                for (const Word& x : words)
                    for (const Word& y : words) REQUIRE(brute_read_distance(x, y, ell) == read_distance(x, y, ell));
        }
}

TEST_CASE("alternating swap shape") {
    CHECK(is_alternating_swap(W("0010"), W("0100"), 2));
    CHECK(is_alternating_swap(W("1011"), W("1101"), 2));
    CHECK_FALSE(is_alternating_swap(W("0000"), W("0110"), 2));
    CHECK_FALSE(is_alternating_swap(W("00"), W("10"), 2));
    CHECK(is_alternating_swap(W("00"), W("10"), 1));
    CHECK(is_alternating_swap(W("20102", 3), W("21012", 3), 2));
    CHECK_FALSE(is_alternating_swap(W("0101"), W("0101"), 1));
}

TEST_CASE("maximum ball intersections") {
    CHECK(max_ball_intersection(5, 2, 1, 2, PairSpace::Words) == 2);
    CHECK(max_ball_intersection(5, 2, 2, 2, PairSpace::Words) == 10);
    CHECK(max_ball_intersection(6, 3, 2, 2, PairSpace::Words) == 25);
    CHECK(max_ball_intersection(4, 2, 1, 2, PairSpace::ReadVectors, 2) == 2);
    CHECK(max_ball_intersection(5, 2, 2, 3, PairSpace::ReadVectors, 3) == 18);
    CHECK_ERROR(max_ball_intersection(3, 2, 2, 4, PairSpace::Words), ErrorCode::MaxOverEmptySet);
    CHECK_ERROR(max_ball_intersection(30, 2, 1, 1, PairSpace::Words), ErrorCode::BudgetExceeded);
}

TEST_CASE("maximum independent set on known graphs") {
    CHECK(max_independent_set(graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})) == 2);
    CHECK(max_independent_set(graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})) == 1);
    CHECK(max_independent_set(graph(6, {})) == 6);
    CHECK(max_independent_set(graph(0, {})) == 0);
    // Petersen graph.
    CHECK(max_independent_set(graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8},
                                         {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}})) == 4);
}

TEST_CASE("maximum independent set agrees with subset enumeration") {
    // Random graphs on 12 vertices against all 4096 subsets.
    std::uint64_t state = 12345;
    auto next = [&] { return state = state * 6364136223846793005ull + 1442695040888963407ull; };
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 12;
        std::vector<std::vector<bool>> m(n, std::vector<bool>(n));
        std::vector<std::pair<int, int>> edges;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if ((next() >> 33) % 100 < 30) {
                    m[a][b] = m[b][a] = true;
                    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
                }
        std::size_t best = 0;
        for (std::uint32_t s = 0; s < (1u << n); ++s) {
            bool ok = true;
            for (std::size_t a = 0; a < n && ok; ++a)
                for (std::size_t b = a + 1; b < n && ok; ++b)
                    if ((s >> a & 1) && (s >> b & 1) && m[a][b]) ok = false;
            if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(s)));
        }
        REQUIRE(max_independent_set(graph(n, edges)) == best);
    }
}

TEST_CASE("independence numbers of the 2-read confusability graph") {
    const std::size_t expected[] = {1, 2, 3, 6, 10, 20, 35, 70};
    for (std::size_t n = 1; n <= 8; ++n) CHECK(independence_number(n, 2, 2) == expected[n - 1]);
    CHECK(independence_number(1, 3, 2) == 1);
    CHECK_ERROR(independence_number(11, 2, 2), ErrorCode::BudgetExceeded);
}
