// SPDX-License-Identifier: MIT
#include "lprl/sentence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "lexer.hpp"
#include "ltl_parse.hpp"

namespace lprl {

namespace {

using detail::Cursor;
using detail::Tok;

const std::set<std::string> kReserved = {"X", "F", "G", "U", "true", "false", "sigma", "forall", "exists", "props"};

Raw raw(RawNode n) { return std::make_shared<const RawNode>(std::move(n)); }

class SentenceParser {
public:
    SentenceParser(Cursor& c, const Alphabet& alpha) : c_(c), alpha_(alpha) {}

    Raw formula()
    {
        if (c_.at_ident("forall") || c_.at_ident("exists"))
            return quantified();
        Raw lhs = disjunction();
        if (c_.accept(Tok::Arrow))
            return raw({.kind = RawKind::Implies, .lhs = lhs, .rhs = formula()});
        return lhs;
    }

    void finish()
    {
        for (const auto& [name, used] : used_)
            if (!used)
                throw Error("variable '" + name + "' is bound but never used");
    }

    std::vector<std::string> binders;

private:
    Raw quantified()
    {
        Quant q = c_.next().text == "forall" ? Quant::Forall : Quant::Exists;
        const detail::Token& v = c_.expect(Tok::Ident, "variable name");
        if (kReserved.count(v.text))
            throw ParseError("reserved word '" + v.text + "' used as a variable", v.offset);
        if (used_.count(v.text))
            throw ParseError("duplicate bound variable '" + v.text + "'", v.offset);
        used_[v.text] = false;
        binders.push_back(v.text);
        c_.expect(Tok::Dot, "'.' after the quantified variable");
        scope_.push_back(v.text);
        Raw body = formula();
        scope_.pop_back();
        return raw({.kind = RawKind::Quantified, .quant = q, .var = v.text, .lhs = body});
    }

    Raw disjunction()
    {
        Raw f = conjunction();
        while (c_.accept(Tok::Bar))
            f = raw({.kind = RawKind::Or, .lhs = f, .rhs = conjunction()});
        return f;
    }

    Raw conjunction()
    {
        Raw f = unary();
        while (c_.accept(Tok::Amp))
            f = raw({.kind = RawKind::And, .lhs = f, .rhs = unary()});
        return f;
    }

    Raw unary()
    {
        if (c_.accept(Tok::Bang))
            return raw({.kind = RawKind::Not, .lhs = unary()});
        if (c_.at_ident("forall") || c_.at_ident("exists"))
            return quantified();
        return primary();
    }

    Raw primary()
    {
        if (c_.accept(Tok::LParen)) {
            Raw f = formula();
            c_.expect(Tok::RParen, "')'");
            return f;
        }
        if (c_.at_ident("true")) {
            c_.next();
            return raw({.kind = RawKind::True});
        }
        if (c_.at_ident("false")) {
            c_.next();
            return raw({.kind = RawKind::False});
        }
        if (c_.at(Tok::LBrack))
            return predicate();
        if (c_.at(Tok::Ident))
            return equality();
        c_.fail("expected a sentence formula");
    }

    std::string variable()
    {
        const detail::Token& v = c_.expect(Tok::Ident, "variable name");
        if (std::find(scope_.begin(), scope_.end(), v.text) == scope_.end())
            throw ParseError("free variable '" + v.text + "'", v.offset);
        used_[v.text] = true;
        return v.text;
    }

    std::pair<Ltl, std::string> bracket()
    {
        c_.expect(Tok::LBrack, "'['");
        Ltl phi = detail::parse_ltl_expr(c_, alpha_);
        c_.expect(Tok::RBrack, "']'");
        c_.expect(Tok::LParen, "'(' before the variable");
        std::string v = variable();
        c_.expect(Tok::RParen, "')'");
        return {phi, v};
    }

    Raw predicate()
    {
        std::size_t at = c_.peek().offset;
        auto [phi, x] = bracket();
        if (!c_.at(Tok::Iff) && !c_.at(Tok::NotIff))
            return raw({.kind = RawKind::Pred, .var = x, .phi = phi});
        RawKind kind = c_.next().kind == Tok::Iff ? RawKind::Equiv : RawKind::NotEquiv;
        auto [phi2, y] = bracket();
        if (x == y)
            throw ParseError("equivalence atom needs two distinct variables", at);
        return raw({.kind = kind, .var = x, .var2 = y, .phi = phi, .phi2 = phi2});
    }

    Raw equality()
    {
        std::size_t at = c_.peek().offset;
        std::string x = variable();
        RawKind kind;
        if (c_.accept(Tok::Eq))
            kind = RawKind::Eq;
        else if (c_.accept(Tok::NotEq))
            kind = RawKind::Neq;
        else
            c_.fail("expected '={' or '!={' after variable");
        c_.expect(Tok::LBrace, "'{'");
        LetterSet letters;
        if (c_.at_ident("sigma")) {
            c_.next();
            letters = alpha_.all();
        } else {
            letters = detail::parse_letter_list(c_, alpha_);
        }
        c_.expect(Tok::RBrace, "'}'");
        std::string y = variable();
        if (x == y)
            throw ParseError("projection equality needs two distinct variables", at);
        return raw({.kind = kind, .var = x, .var2 = y, .letters = letters});
    }

    Cursor& c_;
    const Alphabet& alpha_;
    std::vector<std::string> scope_;
    std::map<std::string, bool> used_;
};

// ----- normalization -------------------------------------------------------

struct NamedAtom {
    AtomicFormula atom;
    std::string x;
    std::string y;
};

enum class NKind { Quant, And, Or, Atom };

struct NNode {
    NKind kind;
    Quant quant = Quant::Exists;
    std::string var;
    NamedAtom atom;
    std::shared_ptr<NNode> lhs, rhs;
};
using NPtr = std::shared_ptr<NNode>;

NPtr nnode(NNode n) { return std::make_shared<NNode>(std::move(n)); }

NamedAtom atom_of(const RawNode& r)
{
    NamedAtom a;
    a.x = r.var;
    a.y = r.var2;
    switch (r.kind) {
    case RawKind::True: a.atom.kind = AtomKind::True; break;
    case RawKind::False: a.atom.kind = AtomKind::False; break;
    case RawKind::Pred: a.atom.kind = AtomKind::Unary; break;
    case RawKind::Equiv: a.atom.kind = AtomKind::Equiv; break;
    case RawKind::NotEquiv: a.atom.kind = AtomKind::NotEquiv; break;
    case RawKind::Eq: a.atom.kind = AtomKind::Eq; break;
    case RawKind::Neq: a.atom.kind = AtomKind::Neq; break;
    default: break;
    }
    a.atom.phi = r.phi;
    a.atom.phi2 = r.phi2;
    a.atom.letters = r.letters;
    return a;
}

/// Negation normal form: implications eliminated, negation absorbed by atoms
/// and dualized through quantifiers and connectives.
NPtr to_nnf(const Raw& r, bool neg)
{
    switch (r->kind) {
    case RawKind::Quantified: {
        Quant q = r->quant;
        if (neg)
            q = q == Quant::Forall ? Quant::Exists : Quant::Forall;
        return nnode({.kind = NKind::Quant, .quant = q, .var = r->var, .lhs = to_nnf(r->lhs, neg)});
    }
    case RawKind::Not: return to_nnf(r->lhs, !neg);
    case RawKind::And:
    case RawKind::Or: {
        bool conj = (r->kind == RawKind::And) != neg;
        return nnode({.kind = conj ? NKind::And : NKind::Or, .lhs = to_nnf(r->lhs, neg), .rhs = to_nnf(r->rhs, neg)});
    }
    case RawKind::Implies:
        return nnode({.kind = neg ? NKind::And : NKind::Or, .lhs = to_nnf(r->lhs, !neg), .rhs = to_nnf(r->rhs, neg)});
    default: {
        NamedAtom a = atom_of(*r);
        if (neg)
            a.atom = negate_atom(a.atom);
        return nnode({.kind = NKind::Atom, .atom = a});
    }
    }
}

/// Hoists quantifiers; binders keep their textual order.
NPtr strip_quantifiers(const NPtr& n, QuantifierPrefix& prefix)
{
    switch (n->kind) {
    case NKind::Quant:
        prefix.push_back({n->var, n->quant});
        return strip_quantifiers(n->lhs, prefix);
    case NKind::And:
    case NKind::Or: {
        NPtr l = strip_quantifiers(n->lhs, prefix);
        NPtr r = strip_quantifiers(n->rhs, prefix);
        return nnode({.kind = n->kind, .lhs = l, .rhs = r});
    }
    case NKind::Atom: return n;
    }
    return n;
}

std::vector<std::vector<NamedAtom>> to_dnf(const NPtr& n)
{
    if (n->kind == NKind::Atom)
        return {{n->atom}};
    auto l = to_dnf(n->lhs);
    auto r = to_dnf(n->rhs);
    if (n->kind == NKind::Or) {
        l.insert(l.end(), r.begin(), r.end());
        return l;
    }
    std::vector<std::vector<NamedAtom>> out;
    out.reserve(l.size() * r.size());
    for (const auto& a : l)
        for (const auto& b : r) {
            auto c = a;
            c.insert(c.end(), b.begin(), b.end());
            out.push_back(std::move(c));
        }
    return out;
}

std::string letters_text(LetterSet s, const Alphabet& alpha)
{
    if (s == alpha.all())
        return "sigma";
    std::string out;
    for (Letter a : s.letters()) {
        if (!out.empty())
            out += ",";
        out += alpha.format_letter(a);
    }
    return out;
}

}  // namespace

RawSentence parse_sentence(std::string_view text)
{
    Cursor c(detail::tokenize(text));
    if (!c.at_ident("props"))
        c.fail("expected 'props:' header");
    c.next();
    c.expect(Tok::Colon, "':' after 'props'");
    std::vector<std::string> props;
    if (!c.at(Tok::Semi)) {
        for (;;) {
            const detail::Token& t = c.expect(Tok::Ident, "proposition name");
            if (kReserved.count(t.text))
                throw ParseError("reserved word '" + t.text + "' used as a proposition", t.offset);
            props.push_back(t.text);
            if (!c.accept(Tok::Comma))
                break;
        }
    }
    c.expect(Tok::Semi, "';' after the proposition list");
    RawSentence s{Alphabet(props), nullptr};
    SentenceParser p(c, s.alphabet);
    s.root = p.formula();
    c.expect(Tok::End, "end of sentence");
    p.finish();
    if (p.binders.empty())
        throw Error("sentence has no quantified variable");
    return s;
}

std::vector<std::string> binder_order(const RawSentence& s)
{
    std::vector<std::string> out;
    auto walk = [&](auto&& self, const Raw& r) -> void {
        if (!r)
            return;
        if (r->kind == RawKind::Quantified)
            out.push_back(r->var);
        self(self, r->lhs);
        self(self, r->rhs);
    };
    walk(walk, s.root);
    return out;
}

AtomicFormula negate_atom(const AtomicFormula& a)
{
    AtomicFormula n = a;
    switch (a.kind) {
    case AtomKind::True: n.kind = AtomKind::False; break;
    case AtomKind::False: n.kind = AtomKind::True; break;
    case AtomKind::Unary: n.phi = ltl_negate(a.phi); break;
    case AtomKind::Equiv: n.kind = AtomKind::NotEquiv; break;
    case AtomKind::NotEquiv: n.kind = AtomKind::Equiv; break;
    case AtomKind::Eq: n.kind = AtomKind::Neq; break;
    case AtomKind::Neq: n.kind = AtomKind::Eq; break;
    }
    return n;
}

NormalSentence normalize(const RawSentence& s)
{
    NormalSentence out;
    out.alphabet = s.alphabet;
    NPtr body = strip_quantifiers(to_nnf(s.root, false), out.prefix);
    std::map<std::string, int> slot;
    for (std::size_t i = 0; i < out.prefix.size(); ++i) {
        if (!slot.emplace(out.prefix[i].var, static_cast<int>(i)).second)
            throw Error("duplicate bound variable '" + out.prefix[i].var + "'");
    }
    auto lookup = [&](const std::string& v) {
        auto it = slot.find(v);
        if (it == slot.end())
            throw Error("free variable '" + v + "'");
        return it->second;
    };
    for (auto& named : to_dnf(body)) {
        Clause clause;
        for (auto& na : named) {
            AtomicFormula a = na.atom;
            if (a.kind != AtomKind::True && a.kind != AtomKind::False)
                a.i = lookup(na.x);
            if (a.kind == AtomKind::Equiv || a.kind == AtomKind::NotEquiv || a.kind == AtomKind::Eq ||
                a.kind == AtomKind::Neq)
                a.k = lookup(na.y);
            clause.push_back(std::move(a));
        }
        out.matrix.push_back(std::move(clause));
    }
    if (out.prefix.empty())
        throw Error("sentence has no quantified variable");
    return out;
}

bool atom_equal(const AtomicFormula& a, const AtomicFormula& b)
{
    if (a.kind != b.kind)
        return false;
    switch (a.kind) {
    case AtomKind::True:
    case AtomKind::False: return true;
    case AtomKind::Unary: return a.i == b.i && ltl_equal(a.phi, b.phi);
    case AtomKind::Equiv:
    case AtomKind::NotEquiv:
        return a.i == b.i && a.k == b.k && ltl_equal(a.phi, b.phi) && ltl_equal(a.phi2, b.phi2);
    case AtomKind::Eq:
    case AtomKind::Neq: return a.i == b.i && a.k == b.k && a.letters == b.letters;
    }
    return false;
}

bool sentence_equal(const NormalSentence& a, const NormalSentence& b)
{
    if (!(a.alphabet == b.alphabet) || a.prefix.size() != b.prefix.size() || a.matrix.size() != b.matrix.size())
        return false;
    for (std::size_t i = 0; i < a.prefix.size(); ++i)
        if (a.prefix[i].var != b.prefix[i].var || a.prefix[i].quant != b.prefix[i].quant)
            return false;
    for (std::size_t j = 0; j < a.matrix.size(); ++j) {
        if (a.matrix[j].size() != b.matrix[j].size())
            return false;
        for (std::size_t l = 0; l < a.matrix[j].size(); ++l)
            if (!atom_equal(a.matrix[j][l], b.matrix[j][l]))
                return false;
    }
    return true;
}

std::string to_string(const AtomicFormula& a, const NormalSentence& s)
{
    const Alphabet& al = s.alphabet;
    auto var = [&](int i) { return s.prefix.at(static_cast<std::size_t>(i)).var; };
    switch (a.kind) {
    case AtomKind::True: return "true";
    case AtomKind::False: return "false";
    case AtomKind::Unary: return "[" + to_string(a.phi, al) + "](" + var(a.i) + ")";
    case AtomKind::Equiv:
    case AtomKind::NotEquiv:
        return "[" + to_string(a.phi, al) + "](" + var(a.i) + ")" +
               (a.kind == AtomKind::Equiv ? " <=> " : " <!=> ") + "[" + to_string(a.phi2, al) + "](" +
               var(a.k) + ")";
    case AtomKind::Eq:
    case AtomKind::Neq:
        return var(a.i) + (a.kind == AtomKind::Eq ? " ={" : " !={") + letters_text(a.letters, al) + "} " + var(a.k);
    }
    return {};
}

std::string to_string(const NormalSentence& s)
{
    std::string out = "props: ";
    for (std::size_t p = 0; p < s.alphabet.num_props(); ++p)
        out += (p ? ", " : "") + s.alphabet.props()[p];
    out += ";\n";
    for (const auto& e : s.prefix)
        out += (e.quant == Quant::Forall ? "forall " : "exists ") + e.var + ". ";
    for (std::size_t j = 0; j < s.matrix.size(); ++j) {
        out += j ? " | (" : "(";
        for (std::size_t l = 0; l < s.matrix[j].size(); ++l)
            out += (l ? " & " : "") + to_string(s.matrix[j][l], s);
        out += ")";
    }
    return out + "\n";
}

RawSentence as_raw(const NormalSentence& s)
{
    auto atom = [&](const AtomicFormula& a) {
        RawNode n;
        switch (a.kind) {
        case AtomKind::True: n.kind = RawKind::True; break;
        case AtomKind::False: n.kind = RawKind::False; break;
        case AtomKind::Unary: n.kind = RawKind::Pred; break;
        case AtomKind::Equiv: n.kind = RawKind::Equiv; break;
        case AtomKind::NotEquiv: n.kind = RawKind::NotEquiv; break;
        case AtomKind::Eq: n.kind = RawKind::Eq; break;
        case AtomKind::Neq: n.kind = RawKind::Neq; break;
        }
        if (a.kind != AtomKind::True && a.kind != AtomKind::False)
            n.var = s.prefix.at(static_cast<std::size_t>(a.i)).var;
        if (a.kind == AtomKind::Equiv || a.kind == AtomKind::NotEquiv || a.kind == AtomKind::Eq ||
            a.kind == AtomKind::Neq)
            n.var2 = s.prefix.at(static_cast<std::size_t>(a.k)).var;
        n.phi = a.phi;
        n.phi2 = a.phi2;
        n.letters = a.letters;
        return raw(std::move(n));
    };
    Raw body;
    for (const auto& clause : s.matrix) {
        Raw c;
        for (const auto& a : clause)
            c = c ? raw({.kind = RawKind::And, .lhs = c, .rhs = atom(a)}) : atom(a);
        body = body ? raw({.kind = RawKind::Or, .lhs = body, .rhs = c}) : c;
    }
    for (auto it = s.prefix.rbegin(); it != s.prefix.rend(); ++it)
        body = raw({.kind = RawKind::Quantified, .quant = it->quant, .var = it->var, .lhs = body});
    return {s.alphabet, body};
}

CycleFreeReport check_cycle_free(const NormalSentence& s)
{
    CycleFreeReport rep;
    const std::size_t n = s.width();
    auto name = [&](int i) { return s.prefix[i].var; };
    for (std::size_t j = 0; j < s.matrix.size(); ++j) {
        std::set<std::pair<int, int>> seen;
        std::vector<std::vector<int>> adj(n);
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[v] != v)
                v = parent[v] = parent[parent[v]];
            return v;
        };
        for (const auto& a : s.matrix[j]) {
            if (a.kind != AtomKind::Eq && a.kind != AtomKind::Neq)
                continue;
            std::pair<int, int> e{std::min(a.i, a.k), std::max(a.i, a.k)};
            if (!seen.insert(e).second) {
                rep.violations.push_back(
                    {j, "duplicate constraint between " + name(e.first) + " and " + name(e.second)});
                continue;
            }
            if (find(a.i) == find(a.k)) {
                // Path a.k ~> a.i in the forest closes the cycle with this edge.
                std::vector<int> prev(n, -1);
                std::queue<int> q;
                q.push(a.k);
                prev[a.k] = a.k;
                while (!q.empty()) {
                    int v = q.front();
                    q.pop();
                    for (int w : adj[v])
                        if (prev[w] < 0) {
                            prev[w] = v;
                            q.push(w);
                        }
                }
                std::string cyc = name(a.i);
                for (int v = a.i; v != a.k;) {
                    v = prev[v];
                    cyc += " - " + name(v);
                }
                rep.violations.push_back({j, "cycle " + cyc + " - " + name(a.i)});
                continue;
            }
            parent[find(a.i)] = find(a.k);
            adj[a.i].push_back(a.k);
            adj[a.k].push_back(a.i);
        }
    }
    rep.ok = rep.violations.empty();
    return rep;
}

}  // namespace lprl
