// SPDX-License-Identifier: MIT
#include "doctest.h"

#include "lprl/sat.hpp"
#include "support/testkit.hpp"

using namespace lprl;

namespace {

const Alphabet PQ({"p", "q"});

SatResult sat(const char* text) { return check_sat(normalize(parse_sentence(text))); }

}  // namespace

TEST_CASE("constant clauses")
{
    auto t = testkit::make_sentence(PQ, {Quant::Forall}, {{AtomicFormula{AtomKind::True}}});
    auto f = testkit::make_sentence(PQ, {Quant::Forall}, {{AtomicFormula{AtomKind::False}}});
    auto bt = build_sentence_hba(t);
    auto bf = build_sentence_hba(f);
    auto r = testkit::make_rng(31);
    for (int j = 0; j < 20; ++j) {
        auto s = testkit::random_tuple(r, PQ, 1);
        CHECK(hba_accepts_tuple(bt, s));
        CHECK_FALSE(hba_accepts_tuple(bf, s));
    }
    CHECK(check_sat(t).verdict == SatVerdict::Sat);
    CHECK(check_sat(f).verdict == SatVerdict::Unsat);
    CHECK_FALSE(check_sat(f).witness.has_value());
}

TEST_CASE("first letters cannot differ")
{
    auto r = sat("props: p, q; exists x. [{p}](x) & [{q}](x)");
    CHECK(r.verdict == SatVerdict::Unsat);
}

TEST_CASE("reflexive equality is satisfiable")
{
    auto s = normalize(parse_sentence("props: p, q; forall x. forall y. x ={sigma} y"));
    auto r = check_sat(s);
    REQUIRE(r.verdict == SatVerdict::Sat);
    REQUIRE(r.witness.has_value());
    CHECK(words_equal(project_lasso((*r.witness)[0], PQ.all()), project_lasso((*r.witness)[1], PQ.all())));
}

TEST_CASE("noninterference over two bits")
{
    auto s = normalize(parse_sentence(
        "props: h, l; forall x. exists y. [G !h](y) & y ={{l},{h,l}} x"));
    auto r = check_sat(s);
    REQUIRE(r.verdict == SatVerdict::Sat);
    CHECK(eval_matrix(s.matrix, *r.witness));
}

TEST_CASE("observational determinism automaton matches the matrix")
{
    auto s = normalize(parse_sentence(
        "props: h, l; forall x. forall y. ([{l}](x) <=> [{l}](y)) -> x ={{l},{h,l}} y"));
    auto b = build_sentence_hba(s);
    auto r = testkit::make_rng(32);
    for (int j = 0; j < 200; ++j) {
        auto t = testkit::random_tuple(r, s.alphabet, 2);
        CHECK(hba_accepts_tuple(b, t) == eval_matrix(s.matrix, t));
    }
}

TEST_CASE("cycle-free gate blocks the checker")
{
    auto s = normalize(parse_sentence("props: a, b; exists x. exists y. (x ={{a}} y) & (y ={{b}} x)"));
    CHECK_THROWS_AS(check_sat(s), CycleFreeError);
    try {
        check_sat(s);
    } catch (const CycleFreeError& e) {
        CHECK(std::string(e.what()).find("clause 1") != std::string::npos);
        CHECK(e.report().violations.size() == 1);
    }
}

TEST_CASE("random matrices: witnesses validate and automata agree with the oracle")
{
    auto r = testkit::make_rng(33);
    for (int j = 0; j < 60; ++j) {
        int n = testkit::uniform(r, 1, 3);
        auto s = testkit::make_sentence(PQ, std::vector<Quant>(static_cast<std::size_t>(n), Quant::Exists),
                                        testkit::random_matrix(r, PQ, n));
        auto res = check_sat(s);
        CAPTURE(to_string(s));
        if (res.verdict == SatVerdict::Sat) {
            REQUIRE(res.witness.has_value());
            CHECK(res.witness->size() == s.width());
            CHECK(eval_matrix(s.matrix, *res.witness));
        }
        auto b = build_sentence_hba(s);
        for (int m = 0; m < 10; ++m) {
            auto t = testkit::random_tuple(r, PQ, static_cast<std::size_t>(n));
            bool acc = hba_accepts_tuple(b, t);
            CHECK(acc == eval_matrix(s.matrix, t));
            if (acc)
                CHECK(res.verdict == SatVerdict::Sat);
        }
    }
}

TEST_CASE("prefix plays no role")
{
    auto r = testkit::make_rng(34);
    for (int j = 0; j < 30; ++j) {
        int n = testkit::uniform(r, 1, 3);
        auto m = testkit::random_matrix(r, PQ, n);
        std::vector<Quant> qs;
        for (int i = 0; i < n; ++i)
            qs.push_back(testkit::coin(r) ? Quant::Forall : Quant::Exists);
        auto a = check_sat(testkit::make_sentence(PQ, qs, m));
        qs[static_cast<std::size_t>(testkit::uniform(r, 0, n - 1))] = Quant::Forall;
        auto b = check_sat(testkit::make_sentence(PQ, qs, m));
        CHECK(a.verdict == b.verdict);
    }
}
