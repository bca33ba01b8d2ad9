// SPDX-License-Identifier: MIT
#include "doctest.h"

#include "lprl/buchi.hpp"
#include "lprl/oracle.hpp"
#include "support/testkit.hpp"

using namespace lprl;

namespace {
const Alphabet P({"p"});
}

TEST_CASE("ltl_to_ba on simple formulas")
{
    auto t = ltl_to_ba(ltl_true(P), P);
    auto r = testkit::make_rng(11);
    for (int j = 0; j < 20; ++j)
        CHECK(ba_accepts_lasso(t, testkit::random_lasso(r, P)));

    auto xp = ltl_to_ba(parse_ltl("X {p}", P), P);
    CHECK_FALSE(ba_accepts_lasso(xp, parse_lasso("{p};{}", P)));
    CHECK(ba_accepts_lasso(xp, parse_lasso("{};{p}", P)));

    auto fp = ltl_to_ba(parse_ltl("F {p}", P), P);
    CHECK(ba_accepts_lasso(fp, parse_lasso("{}{};{p}", P)));
    CHECK_FALSE(ba_accepts_lasso(fp, parse_lasso("{}{};{}", P)));
}

TEST_CASE("automaton with no accepting state rejects")
{
    BuchiAutomaton a;
    a.alphabet = P;
    a.out = {{{P.all(), 0}}};
    a.accepting = {0};
    CHECK_FALSE(ba_accepts_lasso(a, parse_lasso(";{p}", P)));
    a.accepting = {1};
    CHECK(ba_accepts_lasso(a, parse_lasso(";{p}", P)));
}

TEST_CASE("ltl_to_ba well-formedness")
{
    auto r = testkit::make_rng(12);
    Alphabet pq({"p", "q"});
    for (int j = 0; j < 100; ++j) {
        auto f = testkit::random_ltl(r, pq, 8);
        auto a = ltl_to_ba(f, pq);
        REQUIRE(a.num_states() > 0);
        CHECK(a.accepting.size() == a.num_states());
        CHECK(a.initial >= 0);
        CHECK(static_cast<std::size_t>(a.initial) < a.num_states());
        for (const auto& es : a.out)
            for (const auto& e : es) {
                CHECK_FALSE(e.label.empty());
                CHECK(e.label.subset_of(pq.all()));
                CHECK(static_cast<std::size_t>(e.dst) < a.num_states());
            }
    }
}

TEST_CASE("word automaton dump lists every transition")
{
    auto a = ltl_to_ba(parse_ltl("G F p", P), P);
    auto text = dump(a);
    std::size_t lines = 0;
    for (char c : text)
        lines += c == '\n';
    CHECK(lines >= a.num_transitions());
    CHECK(text.find("-->") != std::string::npos);
}
