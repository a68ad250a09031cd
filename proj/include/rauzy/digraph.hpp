#pragma once

#include <vector>

namespace rauzy {

/// Adjacency-list digraph on vertices 0..n-1 (parallel edges allowed).
struct Digraph {
    std::vector<std::vector<int>> succ;

    explicit Digraph(int n = 0) : succ(n) {}
    int size() const { return static_cast<int>(succ.size()); }
    void add_edge(int u, int v) { succ[u].push_back(v); }
    Digraph reversed() const;
};

/// Strongly connected component id per vertex (Tarjan, iterative).
std::vector<int> scc_ids(const Digraph& g, int* count = nullptr);

/// Vertices reachable from any of `sources` (sources included).
std::vector<char> reachable_from(const Digraph& g, const std::vector<int>& sources);

/// Vertices lying on a cycle (nontrivial SCC or self-loop).
std::vector<char> on_cycle(const Digraph& g);

/// Vertices from which some cycle is reachable.
std::vector<char> can_reach_cycle(const Digraph& g);

} // namespace rauzy
