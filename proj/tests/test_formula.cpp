// SPDX-License-Identifier: MIT
#include "doctest.h"

#include "lprl/error.hpp"
#include "lprl/ltl.hpp"
#include "lprl/oracle.hpp"
#include "lprl/sentence.hpp"
#include "support/testkit.hpp"

using namespace lprl;

namespace {

const Alphabet P({"p"});
const Alphabet PQ({"p", "q"});

LetterSet set_of(std::initializer_list<Letter> ls)
{
    LetterSet s;
    for (Letter a : ls)
        s.insert(a);
    return s;
}

}  // namespace

TEST_CASE("alphabet letters and sets")
{
    CHECK(PQ.num_letters() == 4);
    CHECK(PQ.all().size() == 4);
    CHECK(PQ.format_letter(0) == "{}");
    CHECK(PQ.format_letter(3) == "{p,q}");
    CHECK(PQ.format_set(set_of({1, 0})) == "{{},{p}}");
    CHECK(PQ.format_set(LetterSet()) == "{}");
    CHECK(PQ.with_prop(1) == set_of({2, 3}));
    CHECK_THROWS_AS(Alphabet({"a", "b", "c", "d", "e", "f", "g"}), Error);
    CHECK_THROWS_AS(Alphabet({"a", "a"}), Error);
}

TEST_CASE("parse_ltl expands sugar into the core connectives")
{
    auto f = parse_ltl("F {p}", P);
    REQUIRE(f->kind == LtlKind::Until);
    CHECK(f->lhs->kind == LtlKind::Atom);
    CHECK(f->lhs->atom == P.all());
    CHECK(f->rhs->atom == set_of({1}));

    auto x = parse_ltl("X {p}", P);
    REQUIRE(x->kind == LtlKind::Next);
    CHECK(x->lhs->atom == set_of({1}));

    auto q = parse_ltl("q", PQ);
    REQUIRE(q->kind == LtlKind::Atom);
    CHECK(q->atom == set_of({2, 3}));

    CHECK(ltl_equal(parse_ltl("{{p},{}}", P), ltl_atom(P.all())));
    CHECK(ltl_equal(parse_ltl("false", P), ltl_false()));
    CHECK(ltl_equal(parse_ltl("G p", P), ltl_globally(P, ltl_atom(set_of({1})))));
    CHECK(ltl_equal(parse_ltl("p -> q", PQ), ltl_implies(ltl_atom(set_of({1, 3})), ltl_atom(set_of({2, 3})))));
}

TEST_CASE("parse_ltl precedence and associativity")
{
    // Unary binds tighter than U, which binds tighter than & and |.
    auto f = parse_ltl("!p U q & p", PQ);
    REQUIRE(f->kind == LtlKind::And);
    CHECK(f->lhs->kind == LtlKind::Until);
    CHECK(f->lhs->lhs->kind == LtlKind::Not);
    auto g = parse_ltl("p U q U p", PQ);
    REQUIRE(g->kind == LtlKind::Until);
    CHECK(g->rhs->kind == LtlKind::Until);
    auto h = parse_ltl("p | q & p", PQ);
    CHECK(h->kind == LtlKind::Or);
}

TEST_CASE("parse_ltl errors carry a position")
{
    CHECK_THROWS_AS(parse_ltl("r", PQ), ParseError);
    CHECK_THROWS_AS(parse_ltl("p U", PQ), ParseError);
    CHECK_THROWS_AS(parse_ltl("{p,r}", PQ), ParseError);
    try {
        parse_ltl("p & & q", PQ);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 4);
    }
}

TEST_CASE("ltl printing round-trips")
{
    auto r = testkit::make_rng(1);
    for (int j = 0; j < 200; ++j) {
        auto f = testkit::random_ltl(r, PQ, 8);
        CHECK(ltl_equal(parse_ltl(to_string(f, PQ), PQ), f));
    }
}

TEST_CASE("parse_sentence builds the raw tree")
{
    auto s = parse_sentence("props: p; forall x. [G {p}](x)");
    REQUIRE(s.root->kind == RawKind::Quantified);
    CHECK(s.root->quant == Quant::Forall);
    CHECK(s.root->var == "x");
    REQUIRE(s.root->lhs->kind == RawKind::Pred);
    CHECK(ltl_equal(s.root->lhs->phi, ltl_globally(P, ltl_atom(set_of({1})))));
}

TEST_CASE("observational determinism parses into premise and projection")
{
    auto s = normalize(parse_sentence(
        "props: h, l; forall x. forall y. ([{l}](x) <=> [{l}](y)) -> x ={{l}} y"));
    REQUIRE(s.prefix.size() == 2);
    CHECK(s.prefix[0].quant == Quant::Forall);
    CHECK(s.prefix[1].quant == Quant::Forall);
    REQUIRE(s.matrix.size() == 2);
    CHECK(s.matrix[0].at(0).kind == AtomKind::NotEquiv);
    REQUIRE(s.matrix[1].at(0).kind == AtomKind::Eq);
    CHECK(s.matrix[1][0].letters == set_of({2}));
}

TEST_CASE("generalized noninterference parses with three quantifiers")
{
    auto s = normalize(parse_sentence(
        "props: hi, l; forall x. forall y. exists z. (z ={{hi}} y) & (z ={{l}} x)"));
    REQUIRE(s.prefix.size() == 3);
    CHECK(s.prefix[2].quant == Quant::Exists);
    REQUIRE(s.matrix.size() == 1);
    REQUIRE(s.matrix[0].size() == 2);
    CHECK(s.matrix[0][0].kind == AtomKind::Eq);
    CHECK(s.matrix[0][0].i == 2);
    CHECK(s.matrix[0][0].k == 1);
    CHECK(s.matrix[0][1].i == 2);
    CHECK(s.matrix[0][1].k == 0);
}

TEST_CASE("sentence errors")
{
    CHECK_THROWS_AS(parse_sentence("props: p; forall x. [p](y)"), ParseError);
    CHECK_THROWS_AS(parse_sentence("props: p; forall x. forall x. [p](x)"), ParseError);
    CHECK_THROWS_AS(parse_sentence("props: p; forall x. forall y. [p](x)"), Error);
    CHECK_THROWS_AS(parse_sentence("props: p; forall x. x ={{p}} x"), ParseError);
    CHECK_THROWS_AS(parse_sentence("props: p; exists x. !(x ={{p}} y)"), ParseError);
    CHECK_THROWS_AS(parse_sentence("props: p; forall x. [p](x) &"), ParseError);
    CHECK_THROWS_AS(parse_sentence("forall x. [p](x)"), ParseError);
}

TEST_CASE("normalize eliminates implication")
{
    auto s = normalize(parse_sentence("props: p; forall x. [{p}](x) -> [{}](x)"));
    REQUIRE(s.matrix.size() == 2);
    CHECK(ltl_equal(s.matrix[0][0].phi, ltl_negate(ltl_atom(set_of({1})))));
    CHECK(ltl_equal(s.matrix[1][0].phi, ltl_atom(set_of({0}))));
}

TEST_CASE("normalize pushes negation into atoms")
{
    auto s = normalize(parse_sentence(
        "props: p; forall x. exists y. !(([p](x) <=> [p](y)) & x ={{p}} y & [X p](y))"));
    REQUIRE(s.matrix.size() == 3);
    CHECK(s.matrix[0][0].kind == AtomKind::NotEquiv);
    CHECK(s.matrix[1][0].kind == AtomKind::Neq);
    CHECK(s.matrix[2][0].kind == AtomKind::Unary);
    CHECK(ltl_equal(s.matrix[2][0].phi, ltl_negate(parse_ltl("X p", P))));
}

TEST_CASE("normalize hoists nested quantifiers in binder order")
{
    auto s = normalize(parse_sentence("props: p; exists y. ([p](y) & forall x. x ={{p}} y)"));
    REQUIRE(s.prefix.size() == 2);
    CHECK(s.prefix[0].var == "y");
    CHECK(s.prefix[1].var == "x");
    CHECK(s.prefix[1].quant == Quant::Forall);
    auto t = normalize(parse_sentence("props: p; !(exists y. forall x. x ={{p}} y)"));
    CHECK(t.prefix[0].quant == Quant::Forall);
    CHECK(t.prefix[1].quant == Quant::Exists);
    CHECK(t.matrix[0][0].kind == AtomKind::Neq);
}

TEST_CASE("normalize is idempotent and printing round-trips")
{
    for (const auto& c : testkit::sat_corpus()) {
        CAPTURE(c.name);
        auto s = normalize(parse_sentence(c.text));
        auto again = normalize(parse_sentence(to_string(s)));
        CHECK(sentence_equal(s, again));
        CHECK(sentence_equal(normalize(as_raw(s)), s));
    }
}

TEST_CASE("cycle-free gate")
{
    auto dup = normalize(parse_sentence("props: a, b; exists x. exists y. (x ={{a}} y) & (y ={{b}} x)"));
    auto r = check_cycle_free(dup);
    CHECK_FALSE(r.ok);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].clause == 0);
    CHECK(r.violations[0].description == "duplicate constraint between x and y");

    auto cyc = normalize(parse_sentence(
        "props: a, b, c; exists x. exists y. exists z. (x ={{a}} y) & (y ={{b}} z) & (z ={{c}} x)"));
    auto rc = check_cycle_free(cyc);
    CHECK_FALSE(rc.ok);
    REQUIRE(rc.violations.size() == 1);
    CHECK(rc.violations[0].description.find("cycle") == 0);

    auto path = normalize(parse_sentence(
        "props: a, b; exists x. exists y. exists z. (x ={{a}} y) & (y ={{b}} z)"));
    CHECK(check_cycle_free(path).ok);

    // Equality and inequality both count as edges.
    auto mixed = normalize(parse_sentence("props: a; exists x. exists y. (x ={{a}} y) & (x !={{a}} y)"));
    CHECK_FALSE(check_cycle_free(mixed).ok);
}

TEST_CASE("every corpus policy passes the gate")
{
    for (const auto& c : testkit::sat_corpus()) {
        CAPTURE(c.name);
        CHECK(check_cycle_free(normalize(parse_sentence(c.text))).ok);
    }
}
