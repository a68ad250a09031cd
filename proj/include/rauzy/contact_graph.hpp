#pragma once

#include <map>
#include <string>
#include <vector>

#include "rauzy/boundary_graph.hpp"
#include "rauzy/numberfield.hpp"

namespace rauzy {

/// Hard-coded subgraph G0 of the boundary graph, with vertex names A..P and minus forms "X-".
struct ContactGraph {
    Params params;
    Case kind;
    BoundaryGraph graph;
};

/// [i, x, j] of a base vertex name (A..P).
BoundaryVertex named_vertex(char name);

/// Vertex names present for the parameters (e.g. "A", "C-", "L").
std::vector<std::string> contact_vertex_names(const Params& p);

ContactGraph contact_graph(const Params& p);

/// G0 without J, K, L.
BoundaryGraph graph_G(const ContactGraph& c);

struct OrderedEdge {
    int from;
    int to;
    int p1;
    int p2;
    int order;
};

struct OrderedState {
    std::string name;  // e.g. "C", "C-"
    BoundaryVertex vertex;
    int number = 0;  // 1..S_max, shared by S and S-
    bool minus = false;
    std::vector<int> out;  // edge indices, sorted by order

    int omax() const { return static_cast<int>(out.size()); }
};

/// Ordered graph G+: states 0..S_max-1 are the starting states 1..S_max, minus states follow.
struct OrderedGraph {
    Params params;
    int s_max = 0;
    std::vector<OrderedState> states;
    std::vector<OrderedEdge> edges;

    int state_count() const { return static_cast<int>(states.size()); }
    bool is_starting(int s) const { return s < s_max; }
    int find(const std::string& name) const;
    /// State with the given number; minus selects S-.
    int state(int number, bool minus = false) const;
    const OrderedEdge& edge(int s, int order) const { return edges[states[s].out[order - 1]]; }
    /// Rebuilds per-state out lists sorted by order; reports gaps or duplicates through `problems`.
    void index_edges(std::vector<std::string>* problems = nullptr);
};

OrderedGraph ordered_graph(const Params& p);

/// Unordered view of G+ as a boundary graph.
BoundaryGraph unordered(const OrderedGraph& g);

struct TableReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// Cross-checks the instantiated tables against the exact edge algebra, the prefix-suffix graph,
/// order completeness, minus rules and the agreement of G+ with G0.
TableReport verify_tables(const Params& p, const ContactGraph& g0, const OrderedGraph& gp);
TableReport verify_table_consistency(const Params& p);

struct PerronData {
    std::vector<std::vector<int>> L;  // L[m][n] = number of edges S_m -> S_n in G
    long double lambda = 0;
    std::vector<long double> u;  // L u = lambda u, u > 0, sum u = 1
    long double lambda_power = 0;  // independent estimate by power iteration
    int r() const { return static_cast<int>(L.size()); }
};

/// x^4 + (1-b) x^3 + (b-a) x^2 - (a+1) x - 1
long double perron_polynomial(const Params& p, long double x);
long double perron_root(const Params& p);
PerronData perron_data(const OrderedGraph& g);
/// det(L - lambda I) by LU in extended precision.
long double perron_det(const PerronData& d);

/// Exact Perron vector in Q(lambda) normalized to sum 1 over all states.
std::vector<QElem> exact_perron_vector(const OrderedGraph& g, const NumberField& K);

} // namespace rauzy
