#include <map>
#include <set>

#include "readcode/codebook.hpp"
#include "readcode/oracle.hpp"
#include "readcode/seqcore.hpp"
#include "readcode/space.hpp"
#include "support.hpp"

using namespace readcode;
using readcode::test::W;

namespace {

// Syndromes straight from the definitions, with exact integers.
std::uint64_t vt_direct(const Word& x, unsigned k, std::uint64_t m) {
    BigInt s = 0;
    for (std::size_t i = 1; i <= x.size(); ++i) s += ipow(BigInt(i), k) * x.vec()[i - 1];
    return static_cast<std::uint64_t>(s % m);
}

std::uint64_t inv_direct(const Word& x) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) s += x.vec()[i] > x.vec()[j];
    return s;
}

Word target_of(const Word& x, Target t) {
    if (t == Target::Word) return x;
    std::vector<Symbol> out;
    if (t == Target::Indicator) {
        Symbol prev = 0;
        for (Symbol s : x.vec()) {
            out.push_back(static_cast<Symbol>((s + prev) % x.q()));
            prev = s;
        }
    } else {
        for (std::size_t i = 0; i < x.size(); i += 2) out.push_back(x.vec()[i]);
    }
    return Word(x.q(), out);
}

std::vector<std::uint64_t> direct_signature(const CodeFamilySpec& s, const Word& x) {
    std::vector<std::uint64_t> out;
    for (const Constraint& c : s.constraints) {
        const Word t = target_of(x, c.target);
        out.push_back(c.functional == Functional::Inv ? inv_direct(t) % c.modulus : vt_direct(t, c.order, c.modulus));
    }
    return out;
}

CodeFamilySpec with_residues(CodeFamilySpec s, std::vector<std::uint64_t> r) {
    s.residues = std::move(r);
    return s;
}

// Every residue tuple in lexicographic order.
std::vector<std::vector<std::uint64_t>> all_tuples(const std::vector<std::uint64_t>& moduli) {
    std::vector<std::vector<std::uint64_t>> out{{}};
    for (std::uint64_t m : moduli) {
        std::vector<std::vector<std::uint64_t>> next;
        for (const auto& t : out)
            for (std::uint64_t r = 0; r < m; ++r) {
                auto u = t;
                u.push_back(r);
                next.push_back(u);
            }
        out = std::move(next);
    }
    return out;
}

struct Point {
    Family family;
    unsigned q;
    std::size_t n;
    unsigned ell;
};

std::vector<Point> small_points() {
    std::vector<Point> out;
    for (Family f : all_families())
        for (unsigned q : {2u, 3u}) {
            if ((f == Family::BOUNDED_BIN || f == Family::C24_BIN) && q != 2) continue;
            for (std::size_t n : {4u, 7u}) out.push_back({f, q, n, f == Family::C33 ? 3u : 2u});
        }
    return out;
}

} // namespace

TEST_CASE("family names") {
    for (Family f : all_families()) CHECK(parse_family(family_name(f)) == f);
    CHECK(parse_family("BOUNDED-BIN") == Family::BOUNDED_BIN);
    CHECK_ERROR(parse_family("c99"), ErrorCode::InvalidFamilyParams);
    CHECK(all_families().size() == 10);
}

TEST_CASE("derived parameters at n = 8, q = 2") {
    // log2 8 + log2 log2 8 = 4.585
    const auto c33 = derive_params(Family::C33, 8, 2, 3);
    CHECK(c33.P == 3);
    CHECK(c33.good_threshold == 2u);
    CHECK(c33.moduli() == std::vector<std::uint64_t>{3});
    CHECK(c33.constraints[0].functional == Functional::Inv);

    const auto cp = derive_params(Family::CP, 8, 2, 2);
    CHECK(cp.P == 6);
    CHECK(cp.run_cap == 6u);
    CHECK(cp.moduli() == std::vector<std::uint64_t>{2, 4});

    const auto cdel = derive_params(Family::CDEL, 8, 2, 2);
    CHECK(cdel.P == doctest::Approx(3 + std::log2(3.0)));
    CHECK(cdel.P_text() == "4.584963");
    CHECK(cdel.run_cap == 4u);
    CHECK(cdel.moduli() == std::vector<std::uint64_t>{4});
    CHECK(cdel.constraints[0].target == Target::Odd);

    const auto bounded = derive_params(Family::BOUNDED, 8, 2, 2);
    CHECK(bounded.P == 11);
    CHECK(bounded.d == 4u);
    CHECK(bounded.moduli() == std::vector<std::uint64_t>{4, 11, 11});
    CHECK(derive_params(Family::BOUNDED_BIN, 8, 2, 2).moduli() == std::vector<std::uint64_t>{3, 11});

    const auto c24 = derive_params(Family::C24, 8, 2, 2);
    CHECK(c24.run_cap == 5u);
    CHECK(c24.moduli() == std::vector<std::uint64_t>{4, 11, 11});
    for (const Constraint& c : c24.constraints) CHECK(c.target == Target::Indicator);

    const auto aux1 = derive_params(Family::AUX1, 8, 2, 2);
    CHECK(aux1.P == 16);
    CHECK(aux1.run_cap == 5u);
    CHECK(aux1.moduli() == std::vector<std::uint64_t>{5, 17, 17, 17});
    CHECK(derive_params(Family::AUX2, 8, 2, 2).moduli() == std::vector<std::uint64_t>{3, 37, 6});
    CHECK(derive_params(Family::C25, 8, 2, 2).moduli() == std::vector<std::uint64_t>{5, 17, 17, 17, 3, 37, 6});
}

TEST_CASE("derived parameter examples") {
    FamilyOverrides o;
    o.d = 3;
    o.P = 2;
    const auto b = derive_params(Family::BOUNDED, 3, 2, 2, o);
    CHECK(b.moduli() == std::vector<std::uint64_t>{3, 2});
    const auto aux2 = derive_params(Family::AUX2, 12, 2, 2);
    CHECK(aux2.moduli() == std::vector<std::uint64_t>{3, 53, 7});
    // m = min(p, (q - 1) ceil(P/2) + 1) for the deletion code.
    for (unsigned q : {2u, 3u, 4u})
        for (std::size_t n : {4u, 16u, 100u}) {
            const auto s = derive_params(Family::CDEL, n, q, 2);
            const auto half = static_cast<std::uint64_t>(std::ceil(s.P / 2 - 1e-12));
            std::uint64_t p = half + 1;
            while (!is_prime(p)) ++p;
            CHECK(s.moduli()[0] == std::min<std::uint64_t>(p, (q - 1) * half + 1));
        }
}

TEST_CASE("parameter validation") {
    CHECK_ERROR(derive_params(Family::BOUNDED_BIN, 8, 3, 2), ErrorCode::InvalidFamilyParams);
    CHECK_ERROR(derive_params(Family::C24_BIN, 8, 3, 2), ErrorCode::InvalidFamilyParams);
    CHECK_ERROR(derive_params(Family::C33, 8, 2, 2), ErrorCode::InvalidFamilyParams);
    CHECK_ERROR(derive_params(Family::CP, 8, 2, 3), ErrorCode::InvalidFamilyParams);
    CHECK_ERROR(derive_params(Family::C33, 1, 2, 3), ErrorCode::InvalidFamilyParams);
    CHECK_ERROR(derive_params(Family::CDEL, 2, 3, 2), ErrorCode::InvalidFamilyParams);
    FamilyOverrides odd;
    odd.P = 5;
    CHECK_ERROR(derive_params(Family::CP, 8, 2, 2, odd), ErrorCode::InvalidFamilyParams);
    FamilyOverrides even;
    even.P = 6;
    CHECK_ERROR(derive_params(Family::C24, 8, 2, 2, even), ErrorCode::InvalidFamilyParams);
    CHECK_ERROR(derive_params(Family::AUX1, 8, 2, 2, even), ErrorCode::InvalidFamilyParams);
    FamilyOverrides wrong;
    wrong.moduli = std::vector<std::uint64_t>{3};
    CHECK_ERROR(derive_params(Family::CP, 8, 2, 2, wrong), ErrorCode::InvalidFamilyParams);
    FamilyOverrides zero;
    zero.moduli = std::vector<std::uint64_t>{0, 1};
    CHECK_ERROR(derive_params(Family::CP, 8, 2, 2, zero), ErrorCode::InvalidFamilyParams);
    FamilyOverrides t;
    t.good_threshold = 2;
    CHECK_ERROR(derive_params(Family::CP, 8, 2, 2, t), ErrorCode::InvalidFamilyParams);
}

TEST_CASE("small bounded code") {
    FamilyOverrides o;
    o.d = 3;
    o.P = 2;
    const auto spec = with_residues(derive_params(Family::BOUNDED, 3, 2, 2, o), {0, 0});
    const auto code = enumerate(spec);
    CHECK(code.words == std::vector<Word>{W("000"), W("111")});
    REQUIRE(code.redundancy());
    CHECK(*code.redundancy() == doctest::Approx(2));
    CHECK(verify_family(spec).pass);
    const auto best = best_residues(Family::BOUNDED, 3, 2, 2, o);
    CHECK(best.best_size >= 2);
    CHECK(best.spec.residue_mode == "joint");
    const auto empty = enumerate(with_residues(spec, {5, 0}));
    CHECK(empty.size() == 0);
    CHECK_FALSE(empty.redundancy());
    CHECK(verify_family(with_residues(spec, {5, 0})).pass);
}

TEST_CASE("membership matches the defining congruences") {
    for (const Point& p : small_points()) {
        const auto base = derive_params(p.family, p.n, p.q, p.ell);
        const auto words = all_words(p.q, p.n);
        for (const Word& x : words) {
            REQUIRE(signature(base, x) == direct_signature(base, x));
            const auto spec = with_residues(base, direct_signature(base, x));
            REQUIRE(is_member(spec, x) == in_ambient(spec, x));
        }
    }
    const auto spec = with_residues(derive_params(Family::CP, 4, 2, 2), {0, 0});
    CHECK_ERROR(is_member(spec, W("010")), ErrorCode::ShapeMismatch);
    CHECK_ERROR(is_member(spec, W("0101", 3)), ErrorCode::ShapeMismatch);
    CHECK_ERROR(is_member(derive_params(Family::CP, 4, 2, 2), W("0101")), ErrorCode::InvalidFamilyParams);
}

TEST_CASE("residue classes partition the ambient set") {
    for (const Point& p : small_points()) {
        const auto base = derive_params(p.family, p.n, p.q, p.ell);
        std::uint64_t product = 1;
        for (auto m : base.moduli()) product *= m;
        if (product > 4096) continue;
        std::set<Word> seen;
        std::size_t ambient = 0;
        for (const Word& x : all_words(p.q, p.n)) ambient += in_ambient(base, x);
        for (const auto& r : all_tuples(base.moduli()))
            for (const Word& x : enumerate(with_residues(base, r)).words) REQUIRE(seen.insert(x).second);
        REQUIRE(seen.size() == ambient);
    }
}

TEST_CASE("best residues maximise the class size") {
    for (const Point& p : small_points()) {
        const auto base = derive_params(p.family, p.n, p.q, p.ell);
        std::map<std::vector<std::uint64_t>, std::uint64_t> sizes;
        std::uint64_t ambient = 0;
        for (const Word& x : all_words(p.q, p.n))
            if (in_ambient(base, x)) {
                ++ambient;
                ++sizes[direct_signature(base, x)];
            }
        std::vector<std::uint64_t> best(base.constraints.size(), 0);
        std::uint64_t best_size = 0;
        for (const auto& [r, c] : sizes)
            if (c > best_size) {
                best_size = c;
                best = r;
            }
        const ResidueSearch s = best_residues(base);
        REQUIRE(s.spec.residues == best);
        REQUIRE(s.best_size == best_size);
        REQUIRE(s.ambient_size == ambient);
        REQUIRE(enumerate(s.spec).size() == best_size);
        std::uint64_t product = 1;
        for (auto m : base.moduli()) product *= m;
        REQUIRE(best_size * product >= ambient);
    }
}

TEST_CASE("C25 is the intersection of the auxiliary codes") {
    for (unsigned q : {2u, 3u})
        for (std::size_t n : {6u, 8u}) {
            if (q == 3 && n == 8) continue;
            const auto a1 = best_residues(Family::AUX1, n, q, 2).spec;
            const auto a2 = best_residues(Family::AUX2, n, q, 2).spec;
            auto r = a1.residues;
            r.insert(r.end(), a2.residues.begin(), a2.residues.end());
            const auto c25 = with_residues(derive_params(Family::C25, n, q, 2), r);
            for (const Word& x : all_words(q, n)) REQUIRE(is_member(c25, x) == (is_member(a1, x) && is_member(a2, x)));
            const auto indep = best_residues(Family::C25, n, q, 2, {}, {}, true);
            CHECK(indep.spec.residues == r);
            CHECK(indep.spec.residue_mode == "independent");
            CHECK(indep.best_size == enumerate(c25).size());
            CHECK(best_residues(Family::C25, n, q, 2).best_size >= indep.best_size);
        }
}

TEST_CASE("vacuous goodness leaves a pure inversion congruence") {
    FamilyOverrides o;
    o.good_threshold = 100;
    const auto base = derive_params(Family::C33, 7, 3, 3, o);
    const std::uint64_t P = base.moduli()[0];
    for (std::uint64_t a = 0; a < P; ++a) {
        std::vector<Word> expected;
        for (const Word& x : all_words(3, 7))
            if (inv_direct(x) % P == a) expected.push_back(x);
        REQUIRE(enumerate(with_residues(base, {a})).words == expected);
    }
}

TEST_CASE("members respect the run cap") {
    for (Family f : {Family::CP, Family::CDEL, Family::C24, Family::C24_BIN, Family::AUX1, Family::AUX2, Family::C25})
        for (unsigned q : {2u, 3u}) {
            if (f == Family::C24_BIN && q != 2) continue;
            const auto s = best_residues(f, q == 2 ? 10 : 6, q, 2).spec;
            REQUIRE(s.run_cap);
            if (f == Family::C24 || f == Family::C24_BIN) CHECK(*s.run_cap == static_cast<std::size_t>((s.P - 1) / 2));
            if (f == Family::AUX1 || f == Family::AUX2 || f == Family::C25)
                CHECK(*s.run_cap == static_cast<std::size_t>((s.P - 1) / 3));
            for (const Word& x : enumerate(s).words) REQUIRE(max_alternating_run(x) <= *s.run_cap);
        }
}

TEST_CASE("enumeration is independent of the thread count") {
    for (Family f : {Family::C33, Family::CP, Family::C24})
        for (unsigned q : {2u, 3u}) {
            const auto s = best_residues(f, q == 2 ? 11 : 7, q, f == Family::C33 ? 3 : 2).spec;
            const auto one = enumerate(s, {kDefaultBudget, 1});
            const auto four = enumerate(s, {kDefaultBudget, 4});
            REQUIRE(one.words == four.words);
            REQUIRE(std::is_sorted(one.words.begin(), one.words.end()));
            REQUIRE(best_residues(s, {kDefaultBudget, 4}).spec.residues == best_residues(s, {kDefaultBudget, 1}).spec.residues);
            REQUIRE(verify_family(s, {kDefaultBudget, 4}).to_json() == verify_family(s, {kDefaultBudget, 1}).to_json());
        }
    CHECK_ERROR(enumerate(with_residues(derive_params(Family::C33, 8, 2, 3), {0}), {64, 1}),
                ErrorCode::BudgetExceeded);
}

TEST_CASE("close pairs by block bucketing") {
    std::uint64_t state = 99;
    auto next = [&] { return (state = state * 6364136223846793005ull + 1442695040888963407ull) >> 33; };
    for (std::size_t len : {1u, 5u, 9u})
        for (std::size_t k : {0u, 1u, 2u, 3u}) {
            std::vector<std::vector<std::uint32_t>> strings;
            for (int i = 0; i < 150; ++i) {
                std::vector<std::uint32_t> s(len);
                for (auto& c : s) c = static_cast<std::uint32_t>(next() % 3);
                strings.push_back(s);
            }
            std::set<std::tuple<std::size_t, std::size_t, std::size_t>> expected, got;
            for (std::size_t i = 0; i < strings.size(); ++i)
                for (std::size_t j = i + 1; j < strings.size(); ++j) {
                    std::size_t d = 0;
                    for (std::size_t c = 0; c < len; ++c) d += strings[i][c] != strings[j][c];
                    if (d <= k) expected.insert({i, j, d});
                }
            std::size_t visits = 0;
            pairs_within(strings, k, [&](std::size_t i, std::size_t j, std::size_t d) {
                ++visits;
                got.insert({i, j, d});
            });
            REQUIRE(got == expected);
            REQUIRE(visits == expected.size());
        }
}

TEST_CASE("family guarantees hold at the derived parameters") {
    for (const Point& p : small_points()) {
        const auto s = best_residues(p.family, p.n, p.q, p.ell).spec;
        const auto r = verify_family(s);
        INFO(family_name(p.family), " q=", p.q, " n=", p.n);
        REQUIRE(r.pass);
        REQUIRE(r.instances == enumerate(s).size());
    }
}

TEST_CASE("verification reports the first offending pair") {
    FamilyOverrides o;
    o.moduli = std::vector<std::uint64_t>{1, 1, 1};
    const auto s = with_residues(derive_params(Family::C24, 6, 2, 2, o), {0, 0, 0});
    const auto words = enumerate(s).words;
    std::optional<std::pair<Word, Word>> first;
    for (std::size_t i = 0; i < words.size() && !first; ++i)
        for (std::size_t j = i + 1; j < words.size() && !first; ++j)
            if (brute_read_distance(words[i], words[j], 2) < 4) first = {words[i], words[j]};
    REQUIRE(first);
    const auto r = verify_family(s);
    CHECK_FALSE(r.pass);
    REQUIRE(r.counterexample);
    CHECK(r.counterexample->x == first->first);
    CHECK(r.counterexample->y == first->second);
    CHECK(r.to_json()["result"] == "fail");

    // Moduli of one turn the deletion code into its whole ambient set.
    FamilyOverrides d;
    d.moduli = std::vector<std::uint64_t>{1};
    const auto cdel = with_residues(derive_params(Family::CDEL, 5, 2, 2, d), {0});
    const auto dr = verify_family(cdel);
    CHECK_FALSE(dr.pass);
    const auto dw = enumerate(cdel).words;
    std::optional<std::pair<Word, Word>> dfirst;
    for (std::size_t i = 0; i < dw.size() && !dfirst; ++i)
        for (std::size_t j = i + 1; j < dw.size() && !dfirst; ++j)
            if (ball_intersection(dw[i], dw[j], {BallKind::Deletion, 1}) > 1) dfirst = {dw[i], dw[j]};
    REQUIRE(dfirst);
    CHECK(dr.counterexample->x == dfirst->first);
    CHECK(dr.counterexample->y == dfirst->second);
}

TEST_CASE("spec JSON") {
    const auto s = best_residues(Family::CP, 8, 2, 2).spec;
    const auto j = s.to_json();
    CHECK(j["family"] == "cp");
    CHECK(j["P"] == 6);
    CHECK(j["moduli"] == nlohmann::ordered_json::array({2, 4}));
    CHECK(j["residue_mode"] == "joint");
    CHECK(j["residues"].size() == 2);
    CHECK(derive_params(Family::CP, 8, 2, 2).to_json()["residues"].is_null());
}
