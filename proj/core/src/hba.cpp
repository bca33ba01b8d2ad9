// SPDX-License-Identifier: MIT
#include "lprl/hba.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <queue>
#include <sstream>
#include <unordered_map>

#include "graph.hpp"
#include "lprl/error.hpp"

namespace lprl {

bool TupleLetter::all_pause() const
{
    return std::none_of(entries.begin(), entries.end(), [](const SlotEntry& e) { return e.has_value(); });
}

TupleLabel TupleLabel::any(std::size_t n, const Alphabet& alpha)
{
    return {std::vector<SlotConstraint>(n, SlotConstraint{alpha.all(), true})};
}

bool TupleLabel::satisfiable() const
{
    bool letter = false;
    for (const auto& s : slots) {
        if (s.empty())
            return false;
        letter = letter || !s.letters.empty();
    }
    return letter;
}

bool TupleLabel::admits(const TupleLetter& t) const
{
    if (t.entries.size() != slots.size() || t.all_pause())
        return false;
    for (std::size_t i = 0; i < slots.size(); ++i)
        if (!slots[i].admits(t.entries[i]))
            return false;
    return true;
}

TupleLabel TupleLabel::operator&(const TupleLabel& o) const
{
    TupleLabel r{slots};
    for (std::size_t i = 0; i < slots.size(); ++i)
        r.slots[i] = slots[i] & o.slots[i];
    return r;
}

std::size_t Hba::num_transitions() const
{
    std::size_t n = 0;
    for (const auto& e : out)
        n += e.size();
    return n;
}

void Hba::add(int src, TupleLabel label, int dst)
{
    if (label.satisfiable())
        out[static_cast<std::size_t>(src)].push_back({std::move(label), dst});
}

int Hba::add_state(bool acc)
{
    out.emplace_back();
    accepting.push_back(acc ? 1 : 0);
    return static_cast<int>(out.size()) - 1;
}

Hba hba_true(std::size_t n, const Alphabet& alpha)
{
    Hba b{alpha, n, {}, {}, 0};
    b.add_state(true);
    b.add(0, TupleLabel::any(n, alpha), 0);
    return b;
}

Hba hba_false(std::size_t n, const Alphabet& alpha)
{
    Hba b{alpha, n, {}, {}, 0};
    b.add_state(false);
    return b;
}

Hba lift_ba(const BuchiAutomaton& a, std::size_t slot, std::size_t width)
{
    if (slot >= width)
        throw Error("slot " + std::to_string(slot + 1) + " out of range for width " + std::to_string(width));
    Hba b{a.alphabet, width, {}, {}, a.initial};
    for (std::size_t q = 0; q < a.num_states(); ++q)
        b.add_state(a.accepting[q]);
    for (std::size_t q = 0; q < a.num_states(); ++q) {
        const int src = static_cast<int>(q);
        for (const BaEdge& e : a.out[q]) {
            TupleLabel l = TupleLabel::any(width, a.alphabet);
            l.slots[slot] = {e.label, false};
            b.add(src, std::move(l), e.dst);
        }
        TupleLabel pause = TupleLabel::any(width, a.alphabet);
        pause.slots[slot] = {LetterSet{}, true};
        b.add(src, std::move(pause), src);
    }
    return b;
}

namespace {

void check_pair(std::size_t i, std::size_t k, std::size_t n)
{
    if (i >= n || k >= n)
        throw Error("slot out of range");
    if (i == k)
        throw Error("binary constraint needs two distinct slots");
}

/// Label constraining only slots i and k.
struct PairLabels {
    std::size_t n, i, k;
    const Alphabet& alpha;

    TupleLabel operator()(SlotConstraint ci, SlotConstraint ck) const
    {
        TupleLabel l = TupleLabel::any(n, alpha);
        l.slots[i] = ci;
        l.slots[k] = ck;
        return l;
    }
};

}  // namespace

Hba equiv_hba(const Ltl& phi_i, std::size_t i, const Ltl& phi_k, std::size_t k, std::size_t n, const Alphabet& alpha)
{
    check_pair(i, k, n);
    auto both = hba_intersection({lift_ba(ltl_to_ba(phi_i, alpha), i, n), lift_ba(ltl_to_ba(phi_k, alpha), k, n)});
    auto neither = hba_intersection({lift_ba(ltl_to_ba(ltl_negate(phi_i), alpha), i, n),
                                     lift_ba(ltl_to_ba(ltl_negate(phi_k), alpha), k, n)});
    return hba_union(both, neither);
}

Hba nequiv_hba(const Ltl& phi_i, std::size_t i, const Ltl& phi_k, std::size_t k, std::size_t n, const Alphabet& alpha)
{
    check_pair(i, k, n);
    auto left = hba_intersection({lift_ba(ltl_to_ba(phi_i, alpha), i, n),
                                  lift_ba(ltl_to_ba(ltl_negate(phi_k), alpha), k, n)});
    auto right = hba_intersection({lift_ba(ltl_to_ba(ltl_negate(phi_i), alpha), i, n),
                                   lift_ba(ltl_to_ba(phi_k, alpha), k, n)});
    return hba_union(left, right);
}

Hba eq_hba(std::size_t i, std::size_t k, LetterSet a, std::size_t n, const Alphabet& alpha)
{
    check_pair(i, k, n);
    if (a.empty())
        throw Error("projection letter set must be non-empty");
    const PairLabels lab{n, i, k, alpha};
    const SlotConstraint eps{LetterSet{}, true};
    const SlotConstraint bar{alpha.complement(a), false};
    const SlotConstraint bar_eps{alpha.complement(a), true};

    Hba b{alpha, n, {}, {}, 0};
    const int e1 = b.add_state(true);
    const int e2 = b.add_state(false);
    const auto letters = a.letters();
    // left[j][c-1]: slot i is ahead by letters[j]; right[j][c-1] symmetric.
    std::vector<std::array<int, 2>> left, right;
    for (std::size_t j = 0; j < letters.size(); ++j) {
        left.push_back({b.add_state(false), b.add_state(false)});
        right.push_back({b.add_state(false), b.add_state(false)});
    }
    for (int e : {e1, e2}) {
        b.add(e, lab(bar, bar_eps), e1);
        b.add(e, lab(eps, bar), e1);
        b.add(e, lab(eps, eps), e2);
        for (std::size_t j = 0; j < letters.size(); ++j) {
            const SlotConstraint x{LetterSet::single(letters[j]), false};
            b.add(e, lab(x, x), e1);
            b.add(e, lab(x, bar_eps), left[j][1]);
            b.add(e, lab(bar_eps, x), right[j][0]);
        }
    }
    for (std::size_t j = 0; j < letters.size(); ++j) {
        const SlotConstraint x{LetterSet::single(letters[j]), false};
        for (int c = 0; c < 2; ++c) {
            const int l = left[j][c];
            b.add(l, lab(bar_eps, x), e1);
            b.add(l, lab(bar, bar), left[j][1 - c]);
            b.add(l, lab(bar, eps), left[j][1]);
            b.add(l, lab(eps, bar), left[j][0]);
            b.add(l, lab(eps, eps), l);
            const int r = right[j][c];
            b.add(r, lab(x, bar_eps), e1);
            b.add(r, lab(bar, bar), right[j][1 - c]);
            b.add(r, lab(eps, bar), right[j][1]);
            b.add(r, lab(bar, eps), right[j][0]);
            b.add(r, lab(eps, eps), r);
        }
    }
    return b;
}

Hba neq_hba(std::size_t i, std::size_t k, LetterSet a, std::size_t n, const Alphabet& alpha)
{
    check_pair(i, k, n);
    if (a.empty())
        throw Error("projection letter set must be non-empty");
    const PairLabels lab{n, i, k, alpha};
    const SlotConstraint eps{LetterSet{}, true};
    const SlotConstraint bar{alpha.complement(a), false};
    const SlotConstraint bar_eps{alpha.complement(a), true};
    const SlotConstraint any{alpha.all(), true};
    const SlotConstraint letter{alpha.all(), false};

    Hba b{alpha, n, {}, {}, 0};
    const int init = b.add_state(false);
    const int f11 = b.add_state(true);
    const int f12 = b.add_state(false);
    const int f21 = b.add_state(false);
    // Guessed: the other side never shows another projected letter.
    const int gl = b.add_state(true);
    const int gr = b.add_state(true);
    const auto letters = a.letters();
    std::vector<int> left, right;
    for (std::size_t j = 0; j < letters.size(); ++j) {
        left.push_back(b.add_state(false));
        right.push_back(b.add_state(false));
    }
    b.add(init, lab(bar, bar_eps), init);
    b.add(init, lab(eps, bar), init);
    b.add(init, lab(eps, eps), init);
    for (std::size_t j = 0; j < letters.size(); ++j) {
        const SlotConstraint x{LetterSet::single(letters[j]), false};
        const SlotConstraint other{a.minus(LetterSet::single(letters[j])), false};
        b.add(init, lab(x, x), init);
        b.add(init, lab(x, bar_eps), left[j]);
        b.add(init, lab(bar_eps, x), right[j]);
        b.add(init, lab(x, other), f11);

        b.add(left[j], lab(bar_eps, x), init);
        b.add(left[j], lab(bar_eps, other), f11);
        b.add(left[j], lab(bar_eps, bar_eps), left[j]);
        b.add(left[j], lab(any, bar_eps), gl);

        b.add(right[j], lab(x, bar_eps), init);
        b.add(right[j], lab(other, bar_eps), f11);
        b.add(right[j], lab(bar_eps, bar_eps), right[j]);
        b.add(right[j], lab(bar_eps, any), gr);
    }
    b.add(gl, lab(any, bar_eps), gl);
    b.add(gr, lab(bar_eps, any), gr);
    b.add(f11, lab(eps, any), f21);
    b.add(f11, lab(letter, any), f12);
    b.add(f12, lab(any, eps), f12);
    b.add(f12, lab(any, letter), f11);
    b.add(f21, lab(eps, any), f21);
    b.add(f21, lab(letter, any), f12);
    return b;
}

Hba hba_union(const Hba& b1, const Hba& b2)
{
    if (b1.width != b2.width || !(b1.alphabet == b2.alphabet))
        throw Error("union of automata with different width or alphabet");
    Hba u{b1.alphabet, b1.width, {}, {}, 0};
    u.add_state(false);
    const int off1 = 1;
    const int off2 = 1 + static_cast<int>(b1.num_states());
    for (std::size_t q = 0; q < b1.num_states(); ++q)
        u.add_state(b1.accepting[q]);
    for (std::size_t q = 0; q < b2.num_states(); ++q)
        u.add_state(b2.accepting[q]);
    for (std::size_t q = 0; q < b1.num_states(); ++q)
        for (const auto& e : b1.out[q])
            u.add(static_cast<int>(q) + off1, e.label, e.dst + off1);
    for (std::size_t q = 0; q < b2.num_states(); ++q)
        for (const auto& e : b2.out[q])
            u.add(static_cast<int>(q) + off2, e.label, e.dst + off2);
    for (const auto& e : b1.out[static_cast<std::size_t>(b1.initial)])
        u.add(0, e.label, e.dst + off1);
    for (const auto& e : b2.out[static_cast<std::size_t>(b2.initial)])
        u.add(0, e.label, e.dst + off2);
    return u;
}

Hba hba_intersection(const std::vector<Hba>& bs)
{
    if (bs.empty())
        throw Error("intersection of an empty list");
    const std::size_t k = bs.size();
    if (k > 30)
        throw Error("too many automata in one intersection");
    for (const auto& b : bs)
        if (b.width != bs[0].width || !(b.alphabet == bs[0].alphabet))
            throw Error("intersection of automata with different width or alphabet");
    const std::uint32_t full = (std::uint32_t{1} << k) - 1;

    using Key = std::pair<std::vector<int>, std::uint32_t>;
    std::map<Key, int> ids;
    std::vector<Key> states;
    Hba r{bs[0].alphabet, bs[0].width, {}, {}, 0};
    auto state = [&](Key key) {
        auto [it, fresh] = ids.emplace(key, static_cast<int>(states.size()));
        if (fresh) {
            states.push_back(key);
            r.add_state(key.second == 0);
        }
        return it->second;
    };
    std::vector<int> init;
    for (const auto& b : bs)
        init.push_back(b.initial);
    state({init, full});

    for (std::size_t s = 0; s < states.size(); ++s) {
        const Key cur = states[s];
        std::vector<int> dst(k);
        auto go = [&](auto&& self, std::size_t l, const TupleLabel& acc) -> void {
            if (l == k) {
                if (!acc.satisfiable())
                    return;
                std::uint32_t x = full;
                if (cur.second != 0) {
                    x = cur.second;
                    for (std::size_t j = 0; j < k; ++j)
                        if (bs[j].accepting[static_cast<std::size_t>(dst[j])])
                            x &= ~(std::uint32_t{1} << j);
                }
                int t = state({dst, x});
                r.add(static_cast<int>(s), acc, t);
                return;
            }
            for (const auto& e : bs[l].out[static_cast<std::size_t>(cur.first[l])]) {
                TupleLabel next = l == 0 ? e.label : acc & e.label;
                if (std::any_of(next.slots.begin(), next.slots.end(), [](const SlotConstraint& c) { return c.empty(); }))
                    continue;
                dst[l] = e.dst;
                self(self, l + 1, next);
            }
        };
        go(go, 0, TupleLabel{});
    }
    return r;
}

namespace {

struct SccInfo {
    detail::Sccs scc;
    std::vector<char> good;  // per component: accepting cycle with all-slot progress
};

detail::Adjacency state_graph(const Hba& b)
{
    detail::Adjacency g(b.num_states());
    for (std::size_t q = 0; q < b.num_states(); ++q)
        for (const auto& e : b.out[q])
            g[q].push_back(e.dst);
    return g;
}

SccInfo analyze(const Hba& b)
{
    auto g = state_graph(b);
    SccInfo info{detail::tarjan(g), {}};
    const auto cyclic = detail::nontrivial(g, info.scc);
    const std::size_t nc = static_cast<std::size_t>(info.scc.count);
    std::vector<char> acc(nc, 0);
    std::vector<std::vector<char>> progress(nc, std::vector<char>(b.width, 0));
    for (std::size_t q = 0; q < b.num_states(); ++q) {
        const int c = info.scc.comp[q];
        if (b.accepting[q])
            acc[c] = 1;
        for (const auto& e : b.out[q]) {
            if (info.scc.comp[e.dst] != c)
                continue;
            for (std::size_t i = 0; i < b.width; ++i)
                if (!e.label.slots[i].letters.empty())
                    progress[c][i] = 1;
        }
    }
    info.good.assign(nc, 0);
    for (std::size_t c = 0; c < nc; ++c)
        info.good[c] = cyclic[c] && acc[c] &&
                       std::all_of(progress[c].begin(), progress[c].end(), [](char x) { return x != 0; });
    return info;
}

TupleLetter concrete(const TupleLabel& l)
{
    TupleLetter t;
    for (const auto& s : l.slots)
        t.entries.push_back(s.letters.empty() ? SlotEntry{} : SlotEntry{s.letters.first()});
    return t;
}

struct Hop {
    int src;
    const HbaEdge* edge;
};

/// Shortest edge path from `from` to `to`, restricted to states where
/// `allowed` holds. Empty when from == to.
std::vector<Hop> bfs_path(const Hba& b, int from, int to, const std::vector<char>& allowed)
{
    std::vector<Hop> via(b.num_states(), Hop{-1, nullptr});
    std::vector<char> seen(b.num_states(), 0);
    std::queue<int> q;
    q.push(from);
    seen[static_cast<std::size_t>(from)] = 1;
    while (!q.empty() && !seen[static_cast<std::size_t>(to)]) {
        int v = q.front();
        q.pop();
        for (const auto& e : b.out[static_cast<std::size_t>(v)]) {
            auto d = static_cast<std::size_t>(e.dst);
            if (seen[d] || !allowed[d])
                continue;
            seen[d] = 1;
            via[d] = {v, &e};
            q.push(e.dst);
        }
    }
    std::vector<Hop> path;
    if (from == to)
        return path;
    if (!seen[static_cast<std::size_t>(to)])
        throw Error("internal: no path inside component");
    for (int v = to; v != from; v = via[static_cast<std::size_t>(v)].src)
        path.push_back(via[static_cast<std::size_t>(v)]);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

Hba hba_trim(const Hba& b)
{
    auto info = analyze(b);
    const std::size_t n = b.num_states();
    std::vector<char> reach(n, 0), useful(n, 0);
    std::queue<int> q;
    q.push(b.initial);
    reach[static_cast<std::size_t>(b.initial)] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (const auto& e : b.out[static_cast<std::size_t>(v)])
            if (!reach[static_cast<std::size_t>(e.dst)]) {
                reach[static_cast<std::size_t>(e.dst)] = 1;
                q.push(e.dst);
            }
    }
    detail::Adjacency rev(n);
    for (std::size_t v = 0; v < n; ++v)
        for (const auto& e : b.out[v])
            rev[static_cast<std::size_t>(e.dst)].push_back(static_cast<int>(v));
    for (std::size_t v = 0; v < n; ++v)
        if (info.good[info.scc.comp[v]]) {
            useful[v] = 1;
            q.push(static_cast<int>(v));
        }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : rev[static_cast<std::size_t>(v)])
            if (!useful[static_cast<std::size_t>(w)]) {
                useful[static_cast<std::size_t>(w)] = 1;
                q.push(w);
            }
    }
    if (!useful[static_cast<std::size_t>(b.initial)])
        return hba_false(b.width, b.alphabet);
    std::vector<int> remap(n, -1);
    Hba r{b.alphabet, b.width, {}, {}, 0};
    remap[static_cast<std::size_t>(b.initial)] = r.add_state(b.accepting[static_cast<std::size_t>(b.initial)]);
    for (std::size_t v = 0; v < n; ++v)
        if (reach[v] && useful[v] && remap[v] < 0)
            remap[v] = r.add_state(b.accepting[v]);
    for (std::size_t v = 0; v < n; ++v) {
        if (remap[v] < 0)
            continue;
        for (const auto& e : b.out[v])
            if (remap[static_cast<std::size_t>(e.dst)] >= 0)
                r.add(remap[v], e.label, remap[static_cast<std::size_t>(e.dst)]);
    }
    return r;
}

std::optional<LassoRun> hba_emptiness(const Hba& b)
{
    auto info = analyze(b);
    const std::size_t n = b.num_states();
    std::vector<int> order;
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(b.initial);
    seen[static_cast<std::size_t>(b.initial)] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        order.push_back(v);
        for (const auto& e : b.out[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(e.dst)]) {
                seen[static_cast<std::size_t>(e.dst)] = 1;
                q.push(e.dst);
            }
    }
    int target = -1;
    for (int v : order)
        if (b.accepting[static_cast<std::size_t>(v)] && info.good[info.scc.comp[static_cast<std::size_t>(v)]]) {
            target = v;
            break;
        }
    if (target < 0)
        return std::nullopt;

    auto step = [](const Hop& h) { return RunStep{h.src, concrete(h.edge->label), h.edge->dst}; };
    LassoRun run;
    std::vector<char> everywhere(n, 1);
    for (const Hop& h : bfs_path(b, b.initial, target, everywhere))
        run.stem.push_back(step(h));

    const int comp = info.scc.comp[static_cast<std::size_t>(target)];
    std::vector<char> inside(n, 0);
    for (std::size_t v = 0; v < n; ++v)
        inside[v] = info.scc.comp[v] == comp;
    std::vector<Hop> hops;
    int cur = target;
    std::vector<char> covered(b.width, 0);
    auto take = [&](const Hop& h) {
        hops.push_back(h);
        for (std::size_t j = 0; j < b.width; ++j)
            covered[j] |= !h.edge->label.slots[j].letters.empty();
    };
    for (std::size_t i = 0; i < b.width; ++i) {
        if (covered[i])
            continue;
        Hop pick{-1, nullptr};
        for (const auto& e : b.out[static_cast<std::size_t>(cur)])
            if (inside[static_cast<std::size_t>(e.dst)] && !e.label.slots[i].letters.empty()) {
                pick = {cur, &e};
                break;
            }
        for (int v : order) {
            if (pick.edge)
                break;
            if (!inside[static_cast<std::size_t>(v)])
                continue;
            for (const auto& e : b.out[static_cast<std::size_t>(v)])
                if (inside[static_cast<std::size_t>(e.dst)] && !e.label.slots[i].letters.empty()) {
                    pick = {v, &e};
                    break;
                }
            if (pick.edge)
                break;
        }
        for (const Hop& h : bfs_path(b, cur, pick.src, inside))
            take(h);
        take(pick);
        cur = pick.edge->dst;
    }
    for (const Hop& h : bfs_path(b, cur, target, inside))
        take(h);
    for (const Hop& h : hops)
        run.loop.push_back(step(h));
    return run;
}

bool hba_accepts_tuple(const Hba& b, const LassoTuple& sigma)
{
    const std::size_t n = b.width;
    if (sigma.size() != n)
        throw Error("tuple width " + std::to_string(sigma.size()) + " does not match automaton width " +
                    std::to_string(n));
    std::vector<std::uint64_t> radix(n);
    std::uint64_t span = 1;
    for (std::size_t i = 0; i < n; ++i) {
        radix[i] = span;
        span *= sigma[i].positions();
    }
    std::unordered_map<std::uint64_t, int> local;
    std::vector<std::uint64_t> nodes;
    detail::Adjacency g;
    std::vector<std::vector<std::uint32_t>> moved;  // progress mask per edge
    auto visit = [&](std::uint64_t key) {
        auto [it, fresh] = local.emplace(key, static_cast<int>(nodes.size()));
        if (fresh) {
            nodes.push_back(key);
            g.emplace_back();
            moved.emplace_back();
        }
        return it->second;
    };
    visit(static_cast<std::uint64_t>(b.initial) * span);
    std::vector<std::size_t> pos(n), nxt(n);
    for (std::size_t v = 0; v < nodes.size(); ++v) {
        const std::uint64_t key = nodes[v];
        const std::size_t q = key / span;
        std::uint64_t rest = key % span;
        for (std::size_t i = n; i-- > 0;) {
            pos[i] = rest / radix[i];
            rest %= radix[i];
        }
        for (const auto& e : b.out[q]) {
            auto go = [&](auto&& self, std::size_t i, std::uint32_t mask, std::uint64_t code) -> void {
                if (i == n) {
                    if (mask == 0)
                        return;
                    int t = visit(static_cast<std::uint64_t>(e.dst) * span + code);
                    g[v].push_back(t);
                    moved[v].push_back(mask);
                    return;
                }
                const SlotConstraint& c = e.label.slots[i];
                if (c.pause)
                    self(self, i + 1, mask, code + pos[i] * radix[i]);
                if (c.letters.contains(sigma[i].at(pos[i])))
                    self(self, i + 1, mask | (std::uint32_t{1} << i), code + sigma[i].successor(pos[i]) * radix[i]);
            };
            go(go, 0, 0, 0);
        }
    }
    auto scc = detail::tarjan(g);
    const std::size_t nc = static_cast<std::size_t>(scc.count);
    std::vector<char> acc(nc, 0);
    std::vector<std::uint32_t> prog(nc, 0);
    for (std::size_t v = 0; v < nodes.size(); ++v) {
        const int c = scc.comp[v];
        if (b.accepting[nodes[v] / span])
            acc[c] = 1;
        for (std::size_t j = 0; j < g[v].size(); ++j)
            if (scc.comp[g[v][j]] == c)
                prog[c] |= moved[v][j];
    }
    const std::uint32_t full = n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
    for (std::size_t c = 0; c < nc; ++c)
        if (acc[c] && prog[c] == full)
            return true;
    return false;
}

LassoTuple witness_traces(const LassoRun& r, std::size_t width)
{
    LassoTuple out(width);
    for (std::size_t i = 0; i < width; ++i) {
        for (const auto& s : r.stem)
            if (s.letter.entries.at(i))
                out[i].stem.push_back(*s.letter.entries[i]);
        for (const auto& s : r.loop)
            if (s.letter.entries.at(i))
                out[i].loop.push_back(*s.letter.entries[i]);
        if (out[i].loop.empty())
            throw Error("run loop makes no progress in slot " + std::to_string(i + 1));
        out[i] = canonical_lasso(std::move(out[i]));
    }
    return out;
}

std::string format_tuple_letter(const TupleLetter& t, const Alphabet& alpha)
{
    std::string out = "(";
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
        if (i)
            out += "|";
        out += t.entries[i] ? alpha.format_letter(*t.entries[i]) : "ε";
    }
    return out + ")";
}

std::string dump(const Hba& b)
{
    auto slot = [&](const SlotConstraint& c) -> std::string {
        if (c.letters == b.alphabet.all() && c.pause)
            return "*";
        if (c.letters.empty())
            return "ε";
        std::string s = b.alphabet.format_set(c.letters);
        return c.pause ? s + "+ε" : s;
    };
    std::ostringstream os;
    os << "width: " << b.width << "\nstates: " << b.num_states() << "\ninitial: " << b.initial << "\naccepting:";
    for (std::size_t s = 0; s < b.num_states(); ++s)
        if (b.accepting[s])
            os << ' ' << s;
    os << '\n';
    for (std::size_t s = 0; s < b.num_states(); ++s)
        for (const auto& e : b.out[s]) {
            os << s << " -- (";
            for (std::size_t i = 0; i < b.width; ++i)
                os << (i ? "|" : "") << slot(e.label.slots[i]);
            os << ") --> " << e.dst << '\n';
        }
    return os.str();
}

}  // namespace lprl
