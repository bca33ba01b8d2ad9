// SPDX-License-Identifier: MIT
#include "lprl/mc.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "graph.hpp"
#include "lprl/error.hpp"
#include "lprl/oracle.hpp"
#include "lprl/sat.hpp"

namespace lprl {

namespace {

template <class T>
void sort_unique(std::vector<T>& v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

double since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

const std::vector<int>& successors(const McContext& ctx, std::size_t slot, int s)
{
    return ctx.family[slot].succ[static_cast<std::size_t>(s)];
}

Letter label_of(const McContext& ctx, std::size_t slot, int s)
{
    return ctx.family[slot].label[static_cast<std::size_t>(s)];
}

/// Automaton successors of q on a concrete tuple letter.
std::vector<int> hba_targets(const Hba& b, int q, const TupleLetter& t)
{
    std::vector<int> out;
    for (const auto& e : b.out[static_cast<std::size_t>(q)])
        if (e.label.admits(t))
            out.push_back(e.dst);
    sort_unique(out);
    return out;
}

}  // namespace

MacroState MacroState::canonical(std::vector<MicroState> ms)
{
    sort_unique(ms);
    return {std::move(ms)};
}

NextRelation NextRelation::canonical(std::vector<Triple> ts)
{
    sort_unique(ts);
    return {std::move(ts)};
}

MacroState NextRelation::image() const
{
    std::vector<MicroState> ms;
    for (const auto& t : triples)
        ms.push_back(t.dst);
    return MacroState::canonical(std::move(ms));
}

bool FlaggedMacroState::accepting() const
{
    return std::all_of(micros.begin(), micros.end(), [](const FlaggedMicro& m) { return m.pending == 0; });
}

MacroState FlaggedMacroState::unflagged() const
{
    std::vector<MicroState> ms;
    for (const auto& m : micros)
        ms.push_back(m.micro);
    return MacroState::canonical(std::move(ms));
}

std::size_t McContext::leading_exists() const
{
    std::size_t e = 0;
    while (e < prefix.size() && prefix[e].quant == Quant::Exists)
        ++e;
    return e;
}

MicroState McContext::initial() const
{
    MicroState m;
    for (const auto& k : family)
        m.kstates.push_back(k.initial);
    m.hstate = automaton.initial;
    return m;
}

McContext make_context(const KripkeFamily& family, const NormalSentence& s)
{
    if (family.size() != s.width())
        throw Error("arity mismatch: the sentence quantifies " + std::to_string(s.width()) +
                    " variables but " + std::to_string(family.size()) + " Kripke structures were given");
    McContext ctx;
    for (const auto& k : family) {
        validate(k);
        ctx.family.push_back(k.alphabet == s.alphabet ? k : align_kripke(k, s.alphabet));
    }
    ctx.automaton = hba_trim(build_sentence_hba(s));
    ctx.prefix = s.prefix;
    if (s.width() + 1 > 31)
        throw Error("too many quantified variables");
    return ctx;
}

std::vector<std::pair<TupleLetter, MicroState>> micro_step(const McContext& ctx, const MicroState& ms)
{
    const std::size_t n = ctx.width();
    std::vector<std::pair<TupleLetter, MicroState>> out;
    TupleLetter t;
    t.entries.resize(n);
    MicroState next = ms;
    auto go = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            if (t.all_pause())
                return;
            for (int q : hba_targets(ctx.automaton, ms.hstate, t)) {
                next.hstate = q;
                out.emplace_back(t, next);
            }
            return;
        }
        const int s = ms.kstates[i];
        t.entries[i] = std::nullopt;
        next.kstates[i] = s;
        self(self, i + 1);
        for (int d : successors(ctx, i, s)) {
            t.entries[i] = label_of(ctx, i, s);
            next.kstates[i] = d;
            self(self, i + 1);
        }
        t.entries[i] = std::nullopt;
        next.kstates[i] = s;
    };
    go(go, 0);
    sort_unique(out);
    return out;
}

// ---------------------------------------------------------------------------
// Transition rules.

namespace {

bool agree(const std::vector<int>& a, const std::vector<int>& b, std::size_t upto)
{
    return std::equal(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(upto), b.begin());
}

bool rule_tr0(const McContext& ctx, const NextRelation& r)
{
    std::map<MicroState, std::vector<std::pair<TupleLetter, MicroState>>> memo;
    for (const auto& t : r.triples) {
        auto it = memo.find(t.src);
        if (it == memo.end())
            it = memo.emplace(t.src, micro_step(ctx, t.src)).first;
        if (!std::binary_search(it->second.begin(), it->second.end(), std::make_pair(t.letter, t.dst)))
            return false;
    }
    return true;
}

bool rule_tr1(const MacroState& u, const NextRelation& r)
{
    for (const auto& m : u.micros)
        if (std::none_of(r.triples.begin(), r.triples.end(), [&](const Triple& t) { return t.src == m; }))
            return false;
    for (const auto& t : r.triples)
        if (!std::binary_search(u.micros.begin(), u.micros.end(), t.src))
            return false;
    return true;
}

bool rule_tr3(const McContext& ctx, const NextRelation& r)
{
    const std::size_t n = ctx.width();
    for (std::size_t i = 0; i < n; ++i) {
        if (ctx.prefix[i].quant != Quant::Forall)
            continue;
        for (const auto& t : r.triples) {
            const auto& s = t.src.kstates;
            const auto& d = t.dst.kstates;
            if (t.letter.entries[i]) {
                for (int s2 : successors(ctx, i, s[i])) {
                    bool found = std::any_of(r.triples.begin(), r.triples.end(), [&](const Triple& o) {
                        return agree(o.src.kstates, s, i + 1) && agree(o.dst.kstates, d, i) && o.dst.kstates[i] == s2;
                    });
                    if (!found)
                        return false;
                }
            } else {
                bool found = std::any_of(r.triples.begin(), r.triples.end(), [&](const Triple& o) {
                    return agree(o.src.kstates, s, i + 1) && agree(o.dst.kstates, d, i + 1);
                });
                if (!found)
                    return false;
            }
        }
    }
    return true;
}

bool rule_tr4(const McContext& ctx, const NextRelation& r)
{
    const std::size_t e = ctx.leading_exists();
    if (e == 0 || r.triples.empty())
        return true;
    const Triple& first = r.triples.front();
    return std::all_of(r.triples.begin(), r.triples.end(), [&](const Triple& t) {
        return agree(t.src.kstates, first.src.kstates, e) && agree(t.dst.kstates, first.dst.kstates, e);
    });
}

}  // namespace

RuleReport validate_next_relation(const McContext& ctx, const MacroState& u, const NextRelation& r,
                                  const MacroState& target)
{
    RuleReport rep;
    rep.tr0 = rule_tr0(ctx, r);
    rep.tr1 = rule_tr1(u, r);
    rep.tr2 = r.image() == target;
    rep.tr3 = rule_tr3(ctx, r);
    rep.tr4 = rule_tr4(ctx, r);
    return rep;
}

std::vector<std::pair<NextRelation, MacroState>> macro_successors(const McContext& ctx, const MacroState& u,
                                                                  std::size_t max_candidates)
{
    if (u.micros.empty())
        throw Error("macro state is empty");
    std::vector<Triple> cand;
    for (const auto& m : u.micros)
        for (auto& [a, d] : micro_step(ctx, m))
            cand.push_back({m, a, d});
    if (cand.size() > max_candidates)
        throw CapExceeded("baseline enumeration: " + std::to_string(cand.size()) + " candidate triples exceed " +
                          std::to_string(max_candidates));
    // Remaining candidates per source, for the coverage bound.
    std::vector<std::size_t> left(u.micros.size(), 0), covered(u.micros.size(), 0);
    std::vector<std::size_t> owner;
    for (const auto& t : cand) {
        auto idx = static_cast<std::size_t>(std::lower_bound(u.micros.begin(), u.micros.end(), t.src) - u.micros.begin());
        owner.push_back(idx);
        ++left[idx];
    }
    // A micro state without moves cannot be covered.
    if (std::find(left.begin(), left.end(), std::size_t{0}) != left.end())
        return {};
    const std::size_t e = ctx.leading_exists();
    std::vector<std::pair<NextRelation, MacroState>> out;
    std::vector<Triple> chosen;
    auto go = [&](auto&& self, std::size_t j) -> void {
        if (j == cand.size()) {
            if (chosen.empty())
                return;
            NextRelation r = NextRelation::canonical(chosen);
            if (!rule_tr3(ctx, r))
                return;
            MacroState img = r.image();
            out.emplace_back(std::move(r), std::move(img));
            return;
        }
        const std::size_t o = owner[j];
        --left[o];
        bool fits = chosen.empty() || (agree(cand[j].src.kstates, chosen.front().src.kstates, e) &&
                                       agree(cand[j].dst.kstates, chosen.front().dst.kstates, e));
        if (fits) {
            chosen.push_back(cand[j]);
            ++covered[o];
            self(self, j + 1);
            --covered[o];
            chosen.pop_back();
        }
        if (covered[o] > 0 || left[o] > 0)
            self(self, j + 1);
        ++left[o];
    };
    go(go, 0);
    return out;
}

// ---------------------------------------------------------------------------
// Policy-restricted successors.

namespace {

struct Leaf {
    TupleLetter letter;
    MicroState dst;

    friend bool operator==(const Leaf&, const Leaf&) = default;
    friend auto operator<=>(const Leaf&, const Leaf&) = default;
};

using Alternative = std::vector<Leaf>;

class TreeBuilder {
public:
    TreeBuilder(const McContext& ctx, const MicroState& src, std::size_t cap) : ctx_(ctx), src_(src), cap_(cap) {}

    std::vector<Alternative> build(std::size_t from, Leaf partial)
    {
        auto alts = expand(from, std::move(partial));
        for (auto& a : alts)
            sort_unique(a);
        sort_unique(alts);
        return alts;
    }

private:
    std::vector<Alternative> expand(std::size_t i, Leaf leaf)
    {
        const std::size_t n = ctx_.width();
        if (i == n) {
            std::vector<Alternative> out;
            if (leaf.letter.all_pause())
                return out;
            for (int q : hba_targets(ctx_.automaton, src_.hstate, leaf.letter)) {
                leaf.dst.hstate = q;
                out.push_back({leaf});
            }
            return out;
        }
        const int s = src_.kstates[i];
        const auto& succ = successors(ctx_, i, s);
        Leaf paused = leaf;
        paused.letter.entries[i] = std::nullopt;
        paused.dst.kstates[i] = s;
        std::vector<Alternative> out = expand(i + 1, paused);
        if (ctx_.prefix[i].quant == Quant::Exists) {
            for (int d : succ) {
                Leaf moved = leaf;
                moved.letter.entries[i] = label_of(ctx_, i, s);
                moved.dst.kstates[i] = d;
                auto more = expand(i + 1, moved);
                out.insert(out.end(), more.begin(), more.end());
                guard(out.size());
            }
            return out;
        }
        // Universal slot: one branch per successor, combined.
        std::vector<Alternative> combos{Alternative{}};
        for (int d : succ) {
            Leaf moved = leaf;
            moved.letter.entries[i] = label_of(ctx_, i, s);
            moved.dst.kstates[i] = d;
            auto branch = expand(i + 1, moved);
            std::vector<Alternative> next;
            for (const auto& c : combos)
                for (const auto& b : branch) {
                    Alternative a = c;
                    a.insert(a.end(), b.begin(), b.end());
                    next.push_back(std::move(a));
                    guard(next.size());
                }
            combos = std::move(next);
            if (combos.empty())
                break;
        }
        out.insert(out.end(), combos.begin(), combos.end());
        guard(out.size());
        return out;
    }

    void guard(std::size_t k) const
    {
        if (k > cap_)
            throw CapExceeded("strategy enumeration exceeds the state cap");
    }

    const McContext& ctx_;
    const MicroState& src_;
    std::size_t cap_;
};

}  // namespace

std::vector<std::pair<NextRelation, MacroState>> policy_successors(const McContext& ctx, const MacroState& u,
                                                                   std::size_t cap)
{
    if (u.micros.empty())
        throw Error("macro state is empty");
    const std::size_t n = ctx.width();
    const std::size_t e = ctx.leading_exists();
    const auto& spine_src = u.micros.front().kstates;
    for (const auto& m : u.micros)
        if (!agree(m.kstates, spine_src, e))
            throw Error("macro state disagrees on the leading existential slots");

    // Common moves of the leading existential slots.
    std::vector<Leaf> spines;
    Leaf base;
    base.letter.entries.assign(n, std::nullopt);
    base.dst.kstates = spine_src;
    auto spine = [&](auto&& self, std::size_t i, Leaf cur) -> void {
        if (i == e) {
            spines.push_back(std::move(cur));
            return;
        }
        self(self, i + 1, cur);
        for (int d : successors(ctx, i, spine_src[i])) {
            Leaf moved = cur;
            moved.letter.entries[i] = label_of(ctx, i, spine_src[i]);
            moved.dst.kstates[i] = d;
            self(self, i + 1, std::move(moved));
        }
    };
    spine(spine, 0, base);

    std::set<NextRelation> seen;
    std::vector<std::pair<NextRelation, MacroState>> out;
    for (const Leaf& sp : spines) {
        std::vector<std::vector<Alternative>> per_thread;
        bool dead = false;
        for (const auto& m : u.micros) {
            Leaf start = sp;
            for (std::size_t i = e; i < n; ++i)
                start.dst.kstates[i] = m.kstates[i];
            TreeBuilder tb(ctx, m, cap);
            auto alts = tb.build(e, start);
            if (alts.empty()) {
                dead = true;
                break;
            }
            per_thread.push_back(std::move(alts));
        }
        if (dead)
            continue;
        std::vector<std::size_t> pick(per_thread.size(), 0);
        for (;;) {
            std::vector<Triple> ts;
            for (std::size_t t = 0; t < per_thread.size(); ++t)
                for (const Leaf& l : per_thread[t][pick[t]])
                    ts.push_back({u.micros[t], l.letter, l.dst});
            NextRelation r = NextRelation::canonical(std::move(ts));
            if (seen.insert(r).second) {
                if (seen.size() > cap)
                    throw CapExceeded("successor enumeration exceeds the state cap");
                MacroState img = r.image();
                out.emplace_back(std::move(r), std::move(img));
            }
            std::size_t t = 0;
            while (t < pick.size() && ++pick[t] == per_thread[t].size())
                pick[t++] = 0;
            if (t == pick.size())
                break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Flags and exploration.

FlaggedMacroState initial_flagged(const McContext& ctx)
{
    const MicroState m = ctx.initial();
    std::uint32_t pending = ctx.full_mask();
    if (ctx.automaton.accepting[static_cast<std::size_t>(m.hstate)])
        pending &= ~std::uint32_t{1};
    return {{FlaggedMicro{m, pending}}};
}

FlaggedMacroState flag_successor(const McContext& ctx, const FlaggedMacroState& u, const NextRelation& r)
{
    const bool reset = u.accepting();
    std::map<MicroState, std::uint32_t> pending_of;
    for (const auto& m : u.micros)
        pending_of[m.micro] = reset ? ctx.full_mask() : m.pending;
    std::map<MicroState, std::uint32_t> target;
    for (const auto& t : r.triples) {
        auto it = pending_of.find(t.src);
        if (it == pending_of.end())
            throw Error("relation source outside the macro state");
        std::uint32_t done = ctx.automaton.accepting[static_cast<std::size_t>(t.dst.hstate)] ? 1U : 0U;
        for (std::size_t i = 0; i < t.letter.entries.size(); ++i)
            if (t.letter.entries[i])
                done |= std::uint32_t{1} << (i + 1);
        target[t.dst] |= it->second & ~done;
    }
    FlaggedMacroState v;
    for (auto& [m, p] : target)
        v.micros.push_back({m, p});
    return v;
}

McResult check_mc(const KripkeFamily& family, const NormalSentence& s, const McOptions& opt)
{
    auto t0 = std::chrono::steady_clock::now();
    McResult res;
    const McContext ctx = make_context(family, s);
    res.stats.hba_states = ctx.automaton.num_states();
    res.stats.build_ms = since(t0);
    t0 = std::chrono::steady_clock::now();

    std::map<FlaggedMacroState, int> ids;
    std::vector<FlaggedMacroState> states;
    detail::Adjacency g;
    auto visit = [&](FlaggedMacroState f) {
        auto [it, fresh] = ids.emplace(f, static_cast<int>(states.size()));
        if (fresh) {
            if (states.size() >= opt.cap)
                throw CapExceeded("explored more than " + std::to_string(opt.cap) + " macro states");
            res.stats.max_micros = std::max(res.stats.max_micros, f.micros.size());
            states.push_back(std::move(f));
            g.emplace_back();
        }
        return it->second;
    };
    visit(initial_flagged(ctx));
    for (std::size_t v = 0; v < states.size(); ++v) {
        const FlaggedMacroState cur = states[v];
        const MacroState u = cur.unflagged();
        auto succ = opt.generator == Generator::Policy ? policy_successors(ctx, u, opt.cap)
                                                            : macro_successors(ctx, u, opt.max_candidates);
        std::vector<int> targets;
        for (const auto& [r, img] : succ) {
            if (opt.validate && !validate_next_relation(ctx, u, r, img).ok())
                throw Error("internal: generated relation violates the transition rules");
            targets.push_back(visit(flag_successor(ctx, cur, r)));
        }
        sort_unique(targets);
        res.stats.macro_transitions += targets.size();
        g[v] = std::move(targets);
    }
    res.stats.macro_states = states.size();

    const auto scc = detail::tarjan(g);
    const auto cyclic = detail::nontrivial(g, scc);
    res.verdict = McVerdict::Fails;
    for (std::size_t v = 0; v < states.size(); ++v)
        if (cyclic[static_cast<std::size_t>(scc.comp[v])] && states[v].accepting()) {
            res.verdict = McVerdict::Holds;
            break;
        }
    res.stats.explore_ms = since(t0);
    return res;
}

McResult deterministic_family_fastpath(const KripkeFamily& family, const NormalSentence& s)
{
    if (family.size() != s.width())
        throw Error("arity mismatch: the sentence quantifies " + std::to_string(s.width()) +
                    " variables but " + std::to_string(family.size()) + " Kripke structures were given");
    require_cycle_free(s);
    auto t0 = std::chrono::steady_clock::now();
    LassoTuple sigma;
    for (const auto& k : family) {
        if (!is_deterministic(k))
            throw Error("fast path needs deterministic Kripke structures");
        sigma.push_back(unique_trace(k.alphabet == s.alphabet ? k : align_kripke(k, s.alphabet)));
    }
    McResult res;
    res.verdict = eval_matrix(s.matrix, sigma) ? McVerdict::Holds : McVerdict::Fails;
    res.stats.explore_ms = since(t0);
    return res;
}

}  // namespace lprl
