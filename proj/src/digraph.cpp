#include "rauzy/digraph.hpp"

#include <algorithm>

namespace rauzy {

Digraph Digraph::reversed() const
{
    Digraph r(size());
    for (int u = 0; u < size(); ++u)
        for (int v : succ[u]) r.add_edge(v, u);
    return r;
}

std::vector<int> scc_ids(const Digraph& g, int* count)
{
    const int n = g.size();
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
    std::vector<char> on_stack(n, 0);
    int next_index = 0, ncomp = 0;
    struct Frame {
        int v;
        std::size_t edge;
    };
    for (int root = 0; root < n; ++root) {
        if (index[root] >= 0) continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.edge < g.succ[f.v].size()) {
                int w = g.succ[f.v][f.edge++];
                if (index[w] < 0) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            const int v = f.v;
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            if (low[v] == index[v]) {
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w] = ncomp;
                } while (w != v);
                ++ncomp;
            }
        }
    }
    if (count) *count = ncomp;
    return comp;
}

std::vector<char> reachable_from(const Digraph& g, const std::vector<int>& sources)
{
    std::vector<char> seen(g.size(), 0);
    std::vector<int> todo;
    for (int s : sources)
        if (!seen[s]) {
            seen[s] = 1;
            todo.push_back(s);
        }
    while (!todo.empty()) {
        int u = todo.back();
        todo.pop_back();
        for (int v : g.succ[u])
            if (!seen[v]) {
                seen[v] = 1;
                todo.push_back(v);
            }
    }
    return seen;
}

std::vector<char> on_cycle(const Digraph& g)
{
    int ncomp = 0;
    const auto comp = scc_ids(g, &ncomp);
    std::vector<int> comp_size(ncomp, 0);
    for (int c : comp) ++comp_size[c];
    std::vector<char> r(g.size(), 0);
    for (int u = 0; u < g.size(); ++u) {
        if (comp_size[comp[u]] > 1) r[u] = 1;
        for (int v : g.succ[u])
            if (v == u) r[u] = 1;
    }
    return r;
}

std::vector<char> can_reach_cycle(const Digraph& g)
{
    const auto cyc = on_cycle(g);
    std::vector<int> seeds;
    for (int u = 0; u < g.size(); ++u)
        if (cyc[u]) seeds.push_back(u);
    return reachable_from(g.reversed(), seeds);
}

} // namespace rauzy
