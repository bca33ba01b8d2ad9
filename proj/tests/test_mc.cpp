// SPDX-License-Identifier: MIT
#include "doctest.h"

#include <set>

#include "lprl/mc.hpp"
#include "lprl/sat.hpp"
#include "support/testkit.hpp"

using namespace lprl;

namespace {

const Alphabet P({"p"});

Kripke self_loop(Letter l)
{
    Kripke k;
    k.alphabet = P;
    k.names = {"s"};
    k.label = {l};
    k.succ = {{0}};
    return k;
}

Kripke branching()
{
    Kripke k;
    k.alphabet = P;
    k.names = {"s", "t", "u"};
    k.label = {1, 0, 1};
    k.succ = {{1, 2}, {1}, {2}};
    return k;
}

NormalSentence sentence(const char* text) { return normalize(parse_sentence(text)); }

}  // namespace

TEST_CASE("micro steps")
{
    auto ctx = make_context({self_loop(1)}, sentence("props: p; exists x. [true](x)"));
    auto steps = micro_step(ctx, ctx.initial());
    REQUIRE_FALSE(steps.empty());
    for (const auto& [t, ms] : steps) {
        CHECK(t.entries[0] == Letter{1});
        CHECK(ms.kstates[0] == 0);
    }

    Hba dead;
    dead.alphabet = P;
    dead.width = 1;
    dead.add_state(true);
    ctx.automaton = dead;
    CHECK(micro_step(ctx, ctx.initial()).empty());
}

TEST_CASE("pausing keeps the Kripke state")
{
    auto ctx = make_context({branching(), branching()},
                            sentence("props: p; forall x. exists y. x ={{p}} y"));
    for (const auto& [t, ms] : micro_step(ctx, ctx.initial()))
        for (std::size_t i = 0; i < 2; ++i)
            if (!t.entries[i])
                CHECK(ms.kstates[i] == ctx.initial().kstates[i]);
}

TEST_CASE("baseline: existential singleton relations")
{
    auto ctx = make_context({self_loop(1)}, sentence("props: p; exists x. [G p](x)"));
    MacroState u{{ctx.initial()}};
    auto succ = macro_successors(ctx, u);
    auto steps = micro_step(ctx, ctx.initial());
    CHECK(succ.size() == steps.size());
    for (const auto& [r, img] : succ) {
        CHECK(r.triples.size() == 1);
        CHECK(img.micros.size() == 1);
    }
}

TEST_CASE("baseline: universal branching covers both successors")
{
    auto ctx = make_context({branching()}, sentence("props: p; forall x. [true](x)"));
    MacroState u{{ctx.initial()}};
    auto succ = macro_successors(ctx, u);
    REQUIRE_FALSE(succ.empty());
    for (const auto& [r, img] : succ) {
        std::set<int> moved;
        for (const auto& t : r.triples)
            if (t.letter.entries[0])
                moved.insert(t.dst.kstates[0]);
        if (!moved.empty())
            CHECK(moved == std::set<int>{1, 2});
    }
}

TEST_CASE("policy relations obey the transition rules")
{
    auto r = testkit::make_rng(41);
    Alphabet pq({"p", "q"});
    for (int j = 0; j < 25; ++j) {
        int n = testkit::uniform(r, 1, 2);
        std::vector<Quant> qs;
        for (int i = 0; i < n; ++i)
            qs.push_back(testkit::coin(r) ? Quant::Forall : Quant::Exists);
        auto s = testkit::make_sentence(pq, qs, testkit::random_matrix(r, pq, n, 2, 2));
        KripkeFamily fam;
        for (int i = 0; i < n; ++i)
            fam.push_back(testkit::random_kripke(r, pq, 3, 2));
        auto ctx = make_context(fam, s);
        if (ctx.automaton.num_states() == 0)
            continue;
        std::vector<MacroState> frontier{MacroState{{ctx.initial()}}};
        std::set<MacroState> seen(frontier.begin(), frontier.end());
        while (!frontier.empty() && seen.size() < 40) {
            auto u = frontier.back();
            frontier.pop_back();
            for (const auto& [rel, img] : policy_successors(ctx, u)) {
                auto rep = validate_next_relation(ctx, u, rel, img);
                CAPTURE(to_string(s));
                CHECK(rep.tr0);
                CHECK(rep.tr1);
                CHECK(rep.tr2);
                CHECK(rep.tr3);
                CHECK(rep.tr4);
                if (seen.insert(img).second)
                    frontier.push_back(img);
            }
        }
    }
}

TEST_CASE("check_mc on single self-loops")
{
    KripkeFamily fam{self_loop(1)};
    CHECK(check_mc(fam, sentence("props: p; forall x. [G {p}](x)")).verdict == McVerdict::Holds);
    CHECK(check_mc(fam, sentence("props: p; exists x. [F {}](x)")).verdict == McVerdict::Fails);
    CHECK(deterministic_family_fastpath(fam, sentence("props: p; forall x. [G {p}](x)")).verdict ==
          McVerdict::Holds);
}

TEST_CASE("check_mc on a branching structure")
{
    KripkeFamily fam{branching()};
    CHECK(check_mc(fam, sentence("props: p; exists x. [F G !p](x)")).verdict == McVerdict::Holds);
    CHECK(check_mc(fam, sentence("props: p; forall x. [F G !p](x)")).verdict == McVerdict::Fails);
    CHECK(check_mc(fam, sentence("props: p; forall x. [X G p | X G !p](x)")).verdict == McVerdict::Holds);
    CHECK(check_mc(fam, sentence("props: p; forall x. [p](x)")).verdict == McVerdict::Holds);
}

TEST_CASE("existential prefix keeps macro states singletons")
{
    auto r = testkit::make_rng(42);
    Alphabet pq({"p", "q"});
    for (int j = 0; j < 20; ++j) {
        int n = testkit::uniform(r, 1, 2);
        auto s = testkit::make_sentence(pq, std::vector<Quant>(static_cast<std::size_t>(n), Quant::Exists),
                                        testkit::random_matrix(r, pq, n, 2, 2));
        KripkeFamily fam;
        for (int i = 0; i < n; ++i)
            fam.push_back(testkit::random_kripke(r, pq, 3, 2));
        auto ctx = make_context(fam, s);
        if (ctx.automaton.num_states() == 0)
            continue;
        std::vector<MacroState> frontier{MacroState{{ctx.initial()}}};
        std::set<MacroState> seen(frontier.begin(), frontier.end());
        while (!frontier.empty() && seen.size() < 60) {
            auto u = frontier.back();
            frontier.pop_back();
            for (const auto& [rel, img] : policy_successors(ctx, u)) {
                std::set<std::vector<int>> ks;
                for (const auto& t : rel.triples)
                    ks.insert(t.dst.kstates);
                CHECK(ks.size() == 1);
                if (seen.insert(img).second)
                    frontier.push_back(img);
            }
        }
    }
}

TEST_CASE("policy and baseline agree on tiny instances")
{
    auto r = testkit::make_rng(43);
    int compared = 0;
    for (int j = 0; j < 60; ++j) {
        std::vector<Quant> qs{testkit::coin(r) ? Quant::Forall : Quant::Exists};
        int n = testkit::uniform(r, 1, 2);
        if (n == 2)
            qs.push_back(testkit::coin(r) ? Quant::Forall : Quant::Exists);
        auto s = testkit::make_sentence(P, qs, testkit::random_matrix(r, P, n, 1, 2));
        KripkeFamily fam;
        for (int i = 0; i < n; ++i)
            fam.push_back(testkit::random_kripke(r, P, 2, 2));
        McOptions base;
        base.generator = Generator::Baseline;
        base.cap = 20000;
        base.max_candidates = 12;
        McOptions pol;
        pol.validate = true;
        try {
            auto b = check_mc(fam, s, base);
            auto p = check_mc(fam, s, pol);
            CAPTURE(to_string(s));
            CHECK(b.verdict == p.verdict);
            ++compared;
        } catch (const CapExceeded&) {
        }
    }
    CHECK(compared >= 30);
}

TEST_CASE("errors")
{
    auto s = sentence("props: p; forall x. forall y. x ={{p}} y");
    CHECK_THROWS_WITH_AS(check_mc({self_loop(1)}, s), doctest::Contains("arity mismatch"), Error);
    auto fam = KripkeFamily{branching(), branching()};
    McOptions tiny;
    tiny.cap = 1;
    CHECK_THROWS_AS(check_mc(fam, s, tiny), CapExceeded);
    auto cyc = sentence("props: p; exists x. exists y. (x ={{p}} y) & (y !={{p}} x)");
    CHECK_THROWS_AS(check_mc(fam, cyc), CycleFreeError);
    Kripke big;
    big.alphabet = Alphabet({"q"});
    big.names = {"s"};
    big.label = {1};
    big.succ = {{0}};
    CHECK_THROWS_AS(check_mc({big, big}, s), Error);
}
