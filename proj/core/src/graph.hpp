// SPDX-License-Identifier: MIT
// Small directed-graph helpers shared by the automaton algorithms.
#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace lprl::detail {

using Adjacency = std::vector<std::vector<int>>;

struct Sccs {
    std::vector<int> comp;  // component id per node
    int count = 0;
};

/// Iterative Tarjan over every node of `g`.
inline Sccs tarjan(const Adjacency& g)
{
    const int n = static_cast<int>(g.size());
    Sccs out;
    out.comp.assign(g.size(), -1);
    std::vector<int> index(g.size(), -1), low(g.size(), 0);
    std::vector<char> on_stack(g.size(), 0);
    std::vector<int> stack;
    std::vector<std::pair<int, std::size_t>> call;
    int counter = 0;
    for (int root = 0; root < n; ++root) {
        if (index[root] >= 0)
            continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            auto& [v, i] = call.back();
            if (i < g[v].size()) {
                int w = g[v][i++];
                if (index[w] < 0) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                for (;;) {
                    int w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    out.comp[w] = out.count;
                    if (w == v)
                        break;
                }
                ++out.count;
            }
            int done = v;
            call.pop_back();
            if (!call.empty())
                low[call.back().first] = std::min(low[call.back().first], low[done]);
        }
    }
    return out;
}

/// Components that contain a cycle (more than one node, or a self-loop).
inline std::vector<char> nontrivial(const Adjacency& g, const Sccs& s)
{
    std::vector<int> size(static_cast<std::size_t>(s.count), 0);
    std::vector<char> out(static_cast<std::size_t>(s.count), 0);
    for (std::size_t v = 0; v < g.size(); ++v)
        ++size[s.comp[v]];
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (size[s.comp[v]] > 1)
            out[s.comp[v]] = 1;
        for (int w : g[v])
            if (w == static_cast<int>(v))
                out[s.comp[v]] = 1;
    }
    return out;
}

}  // namespace lprl::detail
