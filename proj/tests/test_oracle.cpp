// SPDX-License-Identifier: MIT
#include "doctest.h"

#include "lprl/buchi.hpp"
#include "lprl/hba.hpp"
#include "lprl/oracle.hpp"
#include "lprl/sat.hpp"
#include "support/testkit.hpp"

using namespace lprl;

namespace {

Alphabet alphabet_of(const std::string& props)
{
    std::vector<std::string> ps;
    for (const auto& p : testkit::split(props, ','))
        ps.push_back(testkit::trim(p));
    return Alphabet(ps);
}

LetterSet parse_letters(const std::string& text, const Alphabet& alpha)
{
    auto f = parse_ltl(text, alpha);
    REQUIRE(f->kind == LtlKind::Atom);
    return f->atom;
}

}  // namespace

TEST_CASE("lasso syntax")
{
    Alphabet pq({"p", "q"});
    auto w = parse_lasso("{p}{};{p,q}", pq);
    CHECK(w.stem == std::vector<Letter>{1, 0});
    CHECK(w.loop == std::vector<Letter>{3});
    CHECK(format_lasso(w, pq) == "{p}{};{p,q}");
    CHECK(parse_lasso("{p}{}|{p,q}", pq) == w);
    CHECK_THROWS_AS(parse_lasso("{p};", pq), ParseError);
    CHECK_THROWS_AS(parse_lasso("{p}{r};{}", pq), ParseError);
    CHECK_THROWS_AS(parse_lasso("{p}{q}", pq), ParseError);
}

TEST_CASE("canonical lasso")
{
    Alphabet p({"p"});
    CHECK(format_lasso(canonical_lasso(parse_lasso("{p};{p}{p}{p}{p}", p)), p) == ";{p}");
    CHECK(format_lasso(canonical_lasso(parse_lasso("{}{p}{};{p}{}", p)), p) == ";{}{p}");
    CHECK(format_lasso(canonical_lasso(parse_lasso("{p}{p};{}{p}", p)), p) == "{p};{p}{}");
    CHECK(format_lasso(canonical_lasso(parse_lasso(";{}{p}{}{p}", p)), p) == ";{}{p}");
}

TEST_CASE("projection of the worked example")
{
    Alphabet pq({"p", "q"});
    LetterSet a = LetterSet::single(1);
    auto u = parse_lasso("{p}{p}{q}{q};{}", pq);
    auto v = parse_lasso("{q}{q}{p}{p};{p,q}", pq);
    auto pu = project_lasso(u, a);
    auto pv = project_lasso(v, a);
    CHECK(pu.finite());
    CHECK(pv.finite());
    CHECK(pu.stem == std::vector<Letter>{1, 1});
    CHECK(words_equal(pu, pv));
    CHECK_FALSE(words_equal(project_lasso(u, LetterSet::single(2)), pv));
}

TEST_CASE("frozen table: ltl on lassos")
{
    auto rows = testkit::read_table(testkit::source_dir() / "tests/data/ltl_lasso.tsv");
    REQUIRE(rows.size() >= 400);
    for (const auto& r : rows) {
        REQUIRE(r.size() == 4);
        auto alpha = alphabet_of(r[0]);
        auto phi = parse_ltl(r[1], alpha);
        auto w = parse_lasso(r[2], alpha);
        bool expected = r[3] == "1";
        CAPTURE(r[1]);
        CAPTURE(r[2]);
        CHECK(eval_ltl_lasso(phi, w) == expected);
        CHECK(eval_ltl_unrolled(phi, w) == expected);
        CHECK(ba_accepts_lasso(ltl_to_ba(phi, alpha), w) == expected);
    }
}

TEST_CASE("frozen table: projection equality")
{
    auto rows = testkit::read_table(testkit::source_dir() / "tests/data/projection.tsv");
    REQUIRE(rows.size() >= 300);
    for (const auto& r : rows) {
        REQUIRE(r.size() == 5);
        auto alpha = alphabet_of(r[0]);
        auto a = parse_letters(r[1], alpha);
        auto u = parse_lasso(r[2], alpha);
        auto v = parse_lasso(r[3], alpha);
        bool expected = r[4] == "1";
        CAPTURE(r[1]);
        CAPTURE(r[2]);
        CAPTURE(r[3]);
        CHECK(words_equal(project_lasso(u, a), project_lasso(v, a)) == expected);
        CHECK(hba_accepts_tuple(eq_hba(0, 1, a, 2, alpha), {u, v}) == expected);
        CHECK(hba_accepts_tuple(neq_hba(0, 1, a, 2, alpha), {u, v}) != expected);
    }
}

TEST_CASE("frozen table: sentences over finite models")
{
    auto rows = testkit::read_table(testkit::source_dir() / "tests/data/sentences.tsv");
    REQUIRE(rows.size() >= 150);
    for (const auto& r : rows) {
        REQUIRE(r.size() == 3);
        auto s = normalize(parse_sentence(r[0]));
        std::vector<std::vector<LassoWord>> models;
        for (const auto& part : testkit::split(r[1], '|')) {
            std::vector<LassoWord> m;
            for (const auto& w : testkit::split(testkit::trim(part), ' '))
                if (!testkit::trim(w).empty())
                    m.push_back(parse_lasso(testkit::trim(w), s.alphabet));
            models.push_back(m);
        }
        REQUIRE(models.size() == s.width());
        CAPTURE(r[0]);
        CHECK(eval_sentence_finite(s, models) == (r[2] == "1"));
    }
}
