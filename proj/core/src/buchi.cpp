// SPDX-License-Identifier: MIT
#include "lprl/buchi.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <tuple>

#include "graph.hpp"

namespace lprl {

std::size_t BuchiAutomaton::num_transitions() const
{
    std::size_t n = 0;
    for (const auto& e : out)
        n += e.size();
    return n;
}

namespace {

enum class NK { Lit, And, Or, Next, Until, Release };

struct NF {
    NK kind;
    LetterSet lit;
    int a = -1;
    int b = -1;
};

/// Hash-consed negation normal form; ids index `nodes`.
class Nnf {
public:
    explicit Nnf(const Alphabet& alpha) : alpha_(alpha) {}

    int lit(LetterSet s) { return intern({NK::Lit, s}); }

    int build(const Ltl& f, bool neg)
    {
        switch (f->kind) {
        case LtlKind::Atom: return lit(neg ? alpha_.complement(f->atom) : f->atom);
        case LtlKind::Not: return build(f->lhs, !neg);
        case LtlKind::Or:
        case LtlKind::And: {
            bool conj = (f->kind == LtlKind::And) != neg;
            return binary(conj ? NK::And : NK::Or, build(f->lhs, neg), build(f->rhs, neg));
        }
        case LtlKind::Next: return intern({NK::Next, {}, build(f->lhs, neg)});
        case LtlKind::Until:
            return intern({neg ? NK::Release : NK::Until, {}, build(f->lhs, neg), build(f->rhs, neg)});
        }
        return -1;
    }

    const NF& operator[](int id) const { return nodes_[static_cast<std::size_t>(id)]; }
    std::size_t size() const { return nodes_.size(); }

private:
    int binary(NK k, int x, int y)
    {
        const NF& l = nodes_[static_cast<std::size_t>(x)];
        const NF& r = nodes_[static_cast<std::size_t>(y)];
        if (l.kind == NK::Lit && r.kind == NK::Lit)
            return lit(k == NK::And ? (l.lit & r.lit) : (l.lit | r.lit));
        if (x == y)
            return x;
        if (x > y)
            std::swap(x, y);
        return intern({k, {}, x, y});
    }

    int intern(NF n)
    {
        auto key = std::make_tuple(static_cast<int>(n.kind), n.lit.bits(), n.a, n.b);
        auto [it, fresh] = index_.emplace(key, static_cast<int>(nodes_.size()));
        if (fresh)
            nodes_.push_back(n);
        return it->second;
    }

    const Alphabet& alpha_;
    std::vector<NF> nodes_;
    std::map<std::tuple<int, std::uint64_t, int, int>, int> index_;
};

using Obligations = std::vector<int>;  // sorted, unique

struct Cover {
    LetterSet label;
    std::set<int> next;
    std::set<int> postponed;  // untils deferred by this step
};

class Expander {
public:
    Expander(const Nnf& nnf, LetterSet sigma) : nnf_(nnf), sigma_(sigma) {}

    std::vector<Cover> covers(const Obligations& o)
    {
        out_.clear();
        Cover start{sigma_, {}, {}};
        go(std::vector<int>(o.rbegin(), o.rend()), start, {});
        return simplify(std::move(out_));
    }

private:
    void go(std::vector<int> todo, Cover cur, std::set<int> done)
    {
        while (!todo.empty()) {
            int f = todo.back();
            todo.pop_back();
            if (!done.insert(f).second)
                continue;
            const NF& n = nnf_[f];
            switch (n.kind) {
            case NK::Lit:
                cur.label = cur.label & n.lit;
                if (cur.label.empty())
                    return;
                break;
            case NK::And:
                todo.push_back(n.b);
                todo.push_back(n.a);
                break;
            case NK::Or: {
                auto alt = todo;
                alt.push_back(n.b);
                go(std::move(alt), cur, done);
                todo.push_back(n.a);
                break;
            }
            case NK::Next: cur.next.insert(n.a); break;
            case NK::Until: {
                auto alt = todo;
                alt.push_back(n.a);
                Cover c = cur;
                c.next.insert(f);
                c.postponed.insert(f);
                go(std::move(alt), c, done);
                todo.push_back(n.b);
                break;
            }
            case NK::Release: {
                auto alt = todo;
                alt.push_back(n.b);
                Cover c = cur;
                c.next.insert(f);
                go(std::move(alt), c, done);
                todo.push_back(n.b);
                todo.push_back(n.a);
                break;
            }
            }
        }
        out_.push_back(std::move(cur));
    }

    /// Merges covers with equal successors and strips letters on which a
    /// cover with fewer obligations and fewer postponements also applies.
    static std::vector<Cover> simplify(std::vector<Cover> cs)
    {
        std::map<std::pair<std::set<int>, std::set<int>>, LetterSet> merged;
        for (auto& c : cs) {
            auto& l = merged[{c.next, c.postponed}];
            l = l | c.label;
        }
        std::vector<Cover> uniq;
        for (auto& [k, l] : merged)
            uniq.push_back({l, k.first, k.second});
        std::vector<Cover> out;
        for (std::size_t j = 0; j < uniq.size(); ++j) {
            LetterSet keep = uniq[j].label;
            for (std::size_t i = 0; i < uniq.size(); ++i) {
                if (i == j)
                    continue;
                if (std::includes(uniq[j].next.begin(), uniq[j].next.end(), uniq[i].next.begin(), uniq[i].next.end()) &&
                    std::includes(uniq[j].postponed.begin(), uniq[j].postponed.end(), uniq[i].postponed.begin(),
                                  uniq[i].postponed.end()))
                    keep = keep.minus(uniq[i].label);
            }
            if (!keep.empty())
                out.push_back({keep, uniq[j].next, uniq[j].postponed});
        }
        return out;
    }

    const Nnf& nnf_;
    LetterSet sigma_;
    std::vector<Cover> out_;
};

}  // namespace

BuchiAutomaton ltl_to_ba(const Ltl& phi, const Alphabet& alpha)
{
    Nnf nnf(alpha);
    const int root = nnf.build(phi, false);
    std::vector<int> untils;
    for (std::size_t id = 0; id < nnf.size(); ++id)
        if (nnf[static_cast<int>(id)].kind == NK::Until)
            untils.push_back(static_cast<int>(id));
    const int k = static_cast<int>(untils.size());

    BuchiAutomaton ba;
    ba.alphabet = alpha;
    std::map<std::pair<Obligations, int>, int> ids;
    std::vector<std::pair<Obligations, int>> states;
    auto state = [&](Obligations o, int level) {
        auto key = std::make_pair(std::move(o), level);
        auto [it, fresh] = ids.emplace(key, static_cast<int>(states.size()));
        if (fresh)
            states.push_back(key);
        return it->second;
    };
    ba.initial = state({root}, 0);
    Expander ex(nnf, alpha.all());
    for (std::size_t s = 0; s < states.size(); ++s) {
        const auto [obl, level] = states[s];
        std::map<int, LetterSet> edges;
        for (const Cover& c : ex.covers(obl)) {
            int l = level == k ? 0 : level;
            while (l < k && !c.postponed.count(untils[static_cast<std::size_t>(l)]))
                ++l;
            int dst = state(Obligations(c.next.begin(), c.next.end()), l);
            edges[dst] = edges[dst] | c.label;
        }
        ba.out.emplace_back();
        for (auto [dst, label] : edges)
            ba.out[s].push_back({label, dst});
    }
    ba.accepting.assign(states.size(), 0);
    for (std::size_t s = 0; s < states.size(); ++s)
        ba.accepting[s] = states[s].second == k;
    return ba;
}

bool ba_accepts_lasso(const BuchiAutomaton& a, const LassoWord& w)
{
    const std::size_t n = w.positions();
    auto id = [&](std::size_t q, std::size_t pos) { return static_cast<int>(q * n + pos); };
    std::map<int, int> local;
    std::vector<int> nodes;
    detail::Adjacency g;
    auto visit = [&](int node) {
        auto [it, fresh] = local.emplace(node, static_cast<int>(nodes.size()));
        if (fresh) {
            nodes.push_back(node);
            g.emplace_back();
        }
        return it->second;
    };
    visit(id(static_cast<std::size_t>(a.initial), 0));
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const std::size_t q = static_cast<std::size_t>(nodes[i]) / n;
        const std::size_t pos = static_cast<std::size_t>(nodes[i]) % n;
        for (const BaEdge& e : a.out[q])
            if (e.label.contains(w.at(pos))) {
                int t = visit(id(static_cast<std::size_t>(e.dst), w.successor(pos)));
                g[i].push_back(t);
            }
    }
    auto scc = detail::tarjan(g);
    auto cyclic = detail::nontrivial(g, scc);
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (a.accepting[static_cast<std::size_t>(nodes[i]) / n] && cyclic[scc.comp[i]])
            return true;
    return false;
}

std::string dump(const BuchiAutomaton& a)
{
    std::ostringstream os;
    os << "states: " << a.num_states() << "\ninitial: " << a.initial << "\naccepting:";
    for (std::size_t s = 0; s < a.num_states(); ++s)
        if (a.accepting[s])
            os << ' ' << s;
    os << '\n';
    for (std::size_t s = 0; s < a.num_states(); ++s)
        for (const BaEdge& e : a.out[s])
            os << s << " -- " << a.alphabet.format_set(e.label) << " --> " << e.dst << '\n';
    return os.str();
}

}  // namespace lprl
