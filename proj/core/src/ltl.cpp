// SPDX-License-Identifier: MIT
#include "lprl/ltl.hpp"

#include "lexer.hpp"
#include "ltl_parse.hpp"

namespace lprl {

namespace {

Ltl make(LtlKind k, LetterSet atom, Ltl lhs, Ltl rhs)
{
    return std::make_shared<const LtlNode>(LtlNode{k, atom, std::move(lhs), std::move(rhs)});
}

}  // namespace

Ltl ltl_atom(LetterSet letters) { return make(LtlKind::Atom, letters, nullptr, nullptr); }
Ltl ltl_not(Ltl f) { return make(LtlKind::Not, {}, std::move(f), nullptr); }
Ltl ltl_or(Ltl a, Ltl b) { return make(LtlKind::Or, {}, std::move(a), std::move(b)); }
Ltl ltl_and(Ltl a, Ltl b) { return make(LtlKind::And, {}, std::move(a), std::move(b)); }
Ltl ltl_next(Ltl f) { return make(LtlKind::Next, {}, std::move(f), nullptr); }
Ltl ltl_until(Ltl a, Ltl b) { return make(LtlKind::Until, {}, std::move(a), std::move(b)); }

Ltl ltl_true(const Alphabet& alpha) { return ltl_atom(alpha.all()); }
Ltl ltl_false() { return ltl_atom(LetterSet{}); }

Ltl ltl_eventually(const Alphabet& alpha, Ltl f) { return ltl_until(ltl_true(alpha), std::move(f)); }

Ltl ltl_globally(const Alphabet& alpha, Ltl f)
{
    return ltl_not(ltl_eventually(alpha, ltl_negate(f)));
}

Ltl ltl_implies(Ltl a, Ltl b) { return ltl_or(ltl_negate(a), std::move(b)); }

Ltl ltl_negate(const Ltl& f)
{
    if (f->kind == LtlKind::Not)
        return f->lhs;
    return ltl_not(f);
}

bool ltl_equal(const Ltl& a, const Ltl& b)
{
    if (a == b)
        return true;
    if (!a || !b || a->kind != b->kind)
        return false;
    switch (a->kind) {
    case LtlKind::Atom: return a->atom == b->atom;
    case LtlKind::Not:
    case LtlKind::Next: return ltl_equal(a->lhs, b->lhs);
    default: return ltl_equal(a->lhs, b->lhs) && ltl_equal(a->rhs, b->rhs);
    }
}

std::size_t ltl_size(const Ltl& f)
{
    if (!f)
        return 0;
    return 1 + ltl_size(f->lhs) + ltl_size(f->rhs);
}

std::string to_string(const Ltl& f, const Alphabet& alpha)
{
    switch (f->kind) {
    case LtlKind::Atom:
        if (f->atom.empty())
            return "false";
        if (f->atom == alpha.all())
            return "true";
        return alpha.format_set(f->atom);
    case LtlKind::Not: return "!" + to_string(f->lhs, alpha);
    case LtlKind::Next: return "X " + to_string(f->lhs, alpha);
    case LtlKind::Or: return "(" + to_string(f->lhs, alpha) + " | " + to_string(f->rhs, alpha) + ")";
    case LtlKind::And: return "(" + to_string(f->lhs, alpha) + " & " + to_string(f->rhs, alpha) + ")";
    case LtlKind::Until: return "(" + to_string(f->lhs, alpha) + " U " + to_string(f->rhs, alpha) + ")";
    }
    return {};
}

namespace detail {

namespace {

Ltl parse_implies(Cursor& c, const Alphabet& alpha);

Ltl parse_primary(Cursor& c, const Alphabet& alpha)
{
    if (c.accept(Tok::LParen)) {
        Ltl f = parse_implies(c, alpha);
        c.expect(Tok::RParen, "')'");
        return f;
    }
    if (c.at(Tok::LBrace)) {
        if (c.peek(1).kind == Tok::LBrace) {
            c.next();
            LetterSet s = parse_letter_list(c, alpha);
            c.expect(Tok::RBrace, "'}'");
            return ltl_atom(s);
        }
        return ltl_atom(LetterSet::single(parse_letter(c, alpha)));
    }
    if (c.at(Tok::Ident)) {
        const Token& t = c.next();
        if (t.text == "true")
            return ltl_true(alpha);
        if (t.text == "false")
            return ltl_false();
        int p = alpha.prop_index(t.text);
        if (p < 0)
            throw ParseError("unknown proposition '" + t.text + "'", t.offset);
        return ltl_atom(alpha.with_prop(p));
    }
    c.fail("expected an LTL formula");
}

Ltl parse_unary(Cursor& c, const Alphabet& alpha)
{
    if (c.accept(Tok::Bang))
        return ltl_not(parse_unary(c, alpha));
    if (c.at_ident("X")) {
        c.next();
        return ltl_next(parse_unary(c, alpha));
    }
    if (c.at_ident("F")) {
        c.next();
        return ltl_eventually(alpha, parse_unary(c, alpha));
    }
    if (c.at_ident("G")) {
        c.next();
        return ltl_globally(alpha, parse_unary(c, alpha));
    }
    return parse_primary(c, alpha);
}

Ltl parse_until(Cursor& c, const Alphabet& alpha)
{
    Ltl lhs = parse_unary(c, alpha);
    if (c.at_ident("U")) {
        c.next();
        return ltl_until(lhs, parse_until(c, alpha));
    }
    return lhs;
}

Ltl parse_and(Cursor& c, const Alphabet& alpha)
{
    Ltl f = parse_until(c, alpha);
    while (c.accept(Tok::Amp))
        f = ltl_and(f, parse_until(c, alpha));
    return f;
}

Ltl parse_or(Cursor& c, const Alphabet& alpha)
{
    Ltl f = parse_and(c, alpha);
    while (c.accept(Tok::Bar))
        f = ltl_or(f, parse_and(c, alpha));
    return f;
}

Ltl parse_implies(Cursor& c, const Alphabet& alpha)
{
    Ltl lhs = parse_or(c, alpha);
    if (c.accept(Tok::Arrow))
        return ltl_implies(lhs, parse_implies(c, alpha));
    return lhs;
}

}  // namespace

Ltl parse_ltl_expr(Cursor& c, const Alphabet& alpha) { return parse_implies(c, alpha); }

}  // namespace detail

Ltl parse_ltl(std::string_view text, const Alphabet& alpha)
{
    detail::Cursor c(detail::tokenize(text));
    Ltl f = detail::parse_ltl_expr(c, alpha);
    c.expect(detail::Tok::End, "end of formula");
    return f;
}

}  // namespace lprl
