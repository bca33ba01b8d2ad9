// SPDX-License-Identifier: MIT
#include "lprl/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "lexer.hpp"
#include "lprl/error.hpp"

namespace lprl {

namespace {

using Labels = std::unordered_map<const LtlNode*, std::vector<char>>;

const std::vector<char>& label(const Ltl& f, const LassoWord& w, Labels& memo)
{
    if (auto it = memo.find(f.get()); it != memo.end())
        return it->second;
    const std::size_t n = w.positions();
    std::vector<char> v(n, 0);
    switch (f->kind) {
    case LtlKind::Atom:
        for (std::size_t i = 0; i < n; ++i)
            v[i] = f->atom.contains(w.at(i));
        break;
    case LtlKind::Not: {
        const auto& a = label(f->lhs, w, memo);
        for (std::size_t i = 0; i < n; ++i)
            v[i] = !a[i];
        break;
    }
    case LtlKind::Or:
    case LtlKind::And: {
        const auto& a = label(f->lhs, w, memo);
        const auto& b = label(f->rhs, w, memo);
        for (std::size_t i = 0; i < n; ++i)
            v[i] = f->kind == LtlKind::Or ? (a[i] || b[i]) : (a[i] && b[i]);
        break;
    }
    case LtlKind::Next: {
        const auto& a = label(f->lhs, w, memo);
        for (std::size_t i = 0; i < n; ++i)
            v[i] = a[w.successor(i)];
        break;
    }
    case LtlKind::Until: {
        const auto& a = label(f->lhs, w, memo);
        const auto& b = label(f->rhs, w, memo);
        // Least fixpoint of u = b | (a & X u).
        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t i = n; i-- > 0;) {
                char nv = b[i] || (a[i] && v[w.successor(i)]);
                if (nv != v[i]) {
                    v[i] = nv;
                    changed = true;
                }
            }
        }
        break;
    }
    }
    return memo.emplace(f.get(), std::move(v)).first->second;
}

struct Unrolled {
    const LassoWord& w;
    std::size_t horizon;
    std::map<std::pair<const LtlNode*, std::size_t>, bool> memo;

    std::size_t fold(std::size_t k) const
    {
        if (k < w.stem.size())
            return k;
        return w.stem.size() + (k - w.stem.size()) % w.loop.size();
    }

    bool eval(const Ltl& f, std::size_t k)
    {
        k = fold(k);
        auto key = std::make_pair(f.get(), k);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        bool r = false;
        switch (f->kind) {
        case LtlKind::Atom: r = f->atom.contains(w.letter(k)); break;
        case LtlKind::Not: r = !eval(f->lhs, k); break;
        case LtlKind::Or: r = eval(f->lhs, k) || eval(f->rhs, k); break;
        case LtlKind::And: r = eval(f->lhs, k) && eval(f->rhs, k); break;
        case LtlKind::Next: r = eval(f->lhs, k + 1); break;
        case LtlKind::Until:
            // Every suffix reappears within `horizon` steps, so a witness for
            // the right operand, if any, occurs in that window.
            for (std::size_t j = k; j < k + horizon; ++j) {
                if (eval(f->rhs, j)) {
                    r = true;
                    break;
                }
                if (!eval(f->lhs, j))
                    break;
            }
            break;
        }
        memo[key] = r;
        return r;
    }
};

std::vector<Letter> project(const std::vector<Letter>& s, LetterSet a)
{
    std::vector<Letter> out;
    std::copy_if(s.begin(), s.end(), std::back_inserter(out), [&](Letter l) { return a.contains(l); });
    return out;
}

}  // namespace

bool eval_ltl_lasso(const Ltl& phi, const LassoWord& w)
{
    if (w.loop.empty())
        throw Error("lasso loop must be non-empty");
    Labels memo;
    return label(phi, w, memo)[0];
}

bool eval_ltl_unrolled(const Ltl& phi, const LassoWord& w)
{
    if (w.loop.empty())
        throw Error("lasso loop must be non-empty");
    Unrolled u{w, 2 * w.positions(), {}};
    return u.eval(phi, 0);
}

ProjectedWord project_lasso(const LassoWord& w, LetterSet a)
{
    if (a.empty())
        throw Error("projection onto an empty letter set");
    ProjectedWord p{project(w.stem, a), project(w.loop, a)};
    return p;
}

bool words_equal(const ProjectedWord& u, const ProjectedWord& v)
{
    if (u.finite() != v.finite())
        return false;
    if (u.finite())
        return u.stem == v.stem;
    const std::size_t len = std::max(u.stem.size(), v.stem.size()) + std::lcm(u.loop.size(), v.loop.size()) +
                            std::max(u.loop.size(), v.loop.size());
    LassoWord a{u.stem, u.loop};
    LassoWord b{v.stem, v.loop};
    for (std::size_t k = 0; k < len; ++k)
        if (a.letter(k) != b.letter(k))
            return false;
    return true;
}

bool eval_atom(const AtomicFormula& a, const LassoTuple& sigma)
{
    auto word = [&](int i) -> const LassoWord& {
        if (i < 0 || static_cast<std::size_t>(i) >= sigma.size())
            throw Error("atom refers to slot outside the tuple");
        return sigma[static_cast<std::size_t>(i)];
    };
    switch (a.kind) {
    case AtomKind::True: return true;
    case AtomKind::False: return false;
    case AtomKind::Unary: return eval_ltl_lasso(a.phi, word(a.i));
    case AtomKind::Equiv: return eval_ltl_lasso(a.phi, word(a.i)) == eval_ltl_lasso(a.phi2, word(a.k));
    case AtomKind::NotEquiv: return eval_ltl_lasso(a.phi, word(a.i)) != eval_ltl_lasso(a.phi2, word(a.k));
    case AtomKind::Eq: return words_equal(project_lasso(word(a.i), a.letters), project_lasso(word(a.k), a.letters));
    case AtomKind::Neq: return !words_equal(project_lasso(word(a.i), a.letters), project_lasso(word(a.k), a.letters));
    }
    return false;
}

bool eval_matrix(const Matrix& m, const LassoTuple& sigma)
{
    return std::any_of(m.begin(), m.end(), [&](const Clause& c) {
        return std::all_of(c.begin(), c.end(), [&](const AtomicFormula& a) { return eval_atom(a, sigma); });
    });
}

bool eval_sentence_finite(const NormalSentence& s, const std::vector<std::vector<LassoWord>>& models)
{
    const std::size_t n = s.width();
    if (models.size() != n)
        throw Error("expected " + std::to_string(n) + " model sets, got " + std::to_string(models.size()));
    for (const auto& m : models)
        if (m.empty())
            throw Error("model sets must be non-empty");
    LassoTuple sigma(n);
    std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
        if (i == n)
            return eval_matrix(s.matrix, sigma);
        const bool forall = s.prefix[i].quant == Quant::Forall;
        for (const auto& w : models[i]) {
            sigma[i] = w;
            if (go(i + 1) != forall)
                return !forall;
        }
        return forall;
    };
    return go(0);
}

bool eval_raw_finite(const RawSentence& s, const std::map<std::string, std::vector<LassoWord>>& models)
{
    std::map<std::string, LassoWord> env;
    auto word = [&](const std::string& v) -> const LassoWord& {
        auto it = env.find(v);
        if (it == env.end())
            throw Error("free variable '" + v + "'");
        return it->second;
    };
    auto proj_eq = [&](const RawNode& r) {
        return words_equal(project_lasso(word(r.var), r.letters), project_lasso(word(r.var2), r.letters));
    };
    std::function<bool(const Raw&)> go = [&](const Raw& r) -> bool {
        switch (r->kind) {
        case RawKind::Quantified: {
            auto it = models.find(r->var);
            if (it == models.end() || it->second.empty())
                throw Error("no non-empty model set for '" + r->var + "'");
            const bool forall = r->quant == Quant::Forall;
            bool result = forall;
            for (const auto& w : it->second) {
                env[r->var] = w;
                if (go(r->lhs) != forall) {
                    result = !forall;
                    break;
                }
            }
            env.erase(r->var);
            return result;
        }
        case RawKind::Not: return !go(r->lhs);
        case RawKind::And: return go(r->lhs) && go(r->rhs);
        case RawKind::Or: return go(r->lhs) || go(r->rhs);
        case RawKind::Implies: return !go(r->lhs) || go(r->rhs);
        case RawKind::True: return true;
        case RawKind::False: return false;
        case RawKind::Pred: return eval_ltl_lasso(r->phi, word(r->var));
        case RawKind::Equiv: return eval_ltl_lasso(r->phi, word(r->var)) == eval_ltl_lasso(r->phi2, word(r->var2));
        case RawKind::NotEquiv: return eval_ltl_lasso(r->phi, word(r->var)) != eval_ltl_lasso(r->phi2, word(r->var2));
        case RawKind::Eq: return proj_eq(*r);
        case RawKind::Neq: return !proj_eq(*r);
        }
        return false;
    };
    return go(s.root);
}

LassoWord canonical_lasso(LassoWord w)
{
    if (w.loop.empty())
        throw Error("lasso loop must be non-empty");
    const std::size_t n = w.loop.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0)
            continue;
        bool periodic = true;
        for (std::size_t j = d; j < n && periodic; ++j)
            periodic = w.loop[j] == w.loop[j - d];
        if (periodic) {
            w.loop.resize(d);
            break;
        }
    }
    while (!w.stem.empty() && w.stem.back() == w.loop.back()) {
        std::rotate(w.loop.rbegin(), w.loop.rbegin() + 1, w.loop.rend());
        w.stem.pop_back();
    }
    return w;
}

LassoWord parse_lasso(std::string_view text, const Alphabet& alpha)
{
    detail::Cursor c(detail::tokenize(text));
    LassoWord w;
    while (c.at(detail::Tok::LBrace))
        w.stem.push_back(detail::parse_letter(c, alpha));
    if (!c.accept(detail::Tok::Bar))
        c.expect(detail::Tok::Semi, "';' between stem and loop");
    while (c.at(detail::Tok::LBrace))
        w.loop.push_back(detail::parse_letter(c, alpha));
    c.expect(detail::Tok::End, "end of lasso");
    if (w.loop.empty())
        throw ParseError("lasso loop must be non-empty", text.size());
    return w;
}

std::string format_lasso(const LassoWord& w, const Alphabet& alpha)
{
    std::string out;
    for (Letter a : w.stem)
        out += alpha.format_letter(a);
    out += ";";
    for (Letter a : w.loop)
        out += alpha.format_letter(a);
    return out;
}

}  // namespace lprl
