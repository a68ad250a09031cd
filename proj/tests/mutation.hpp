#pragma once

#include <random>
#include <string>

#include "rauzy/contact_graph.hpp"

namespace rauzy::testing {

/// A single corrupted table entry, applied to the graph instantiated from the tables and to
/// the ordered graph alike, as a typo in the shared data would be.
enum class Mutation { LeftLabel, RightLabel, Target, Order };

inline const char* mutation_name(Mutation m)
{
    switch (m) {
    case Mutation::LeftLabel: return "left label";
    case Mutation::RightLabel: return "right label";
    case Mutation::Target: return "target";
    case Mutation::Order: return "order";
    }
    return "?";
}

/// Index of the ordered-graph edge carrying the same labelled edge as g0 edge k, or -1.
inline int matching_ordered_edge(const ContactGraph& g0, const OrderedGraph& gp, int k)
{
    const auto& e = g0.graph.edges[k];
    const auto& from = g0.graph.vertices[e.from];
    const auto& to = g0.graph.vertices[e.to];
    for (int m = 0; m < int(gp.edges.size()); ++m) {
        const auto& f = gp.edges[m];
        if (gp.states[f.from].vertex == from && gp.states[f.to].vertex == to && f.p1 == e.p && f.p2 == e.pp) return m;
    }
    return -1;
}

/// Applies one random mutation of the given kind and describes it.
inline std::string mutate(Mutation kind, std::mt19937& rng, ContactGraph& g0, OrderedGraph& gp)
{
    auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
    if (kind == Mutation::Order) {
        std::vector<int> candidates;
        for (int s = 0; s < gp.state_count(); ++s)
            if (gp.states[s].omax() >= 2) candidates.push_back(s);
        const int s = candidates[pick(int(candidates.size()))];
        const int o1 = 1 + pick(gp.states[s].omax());
        int o2 = 1 + pick(gp.states[s].omax() - 1);
        if (o2 >= o1) ++o2;
        std::swap(gp.edges[gp.states[s].out[o1 - 1]].order, gp.edges[gp.states[s].out[o2 - 1]].order);
        gp.index_edges();
        return "swap orders " + std::to_string(o1) + "," + std::to_string(o2) + " at " + gp.states[s].name;
    }
    const int k = pick(int(g0.graph.edges.size()));
    const int m = matching_ordered_edge(g0, gp, k);
    auto& e = g0.graph.edges[k];
    std::string what = std::string(mutation_name(kind)) + " of edge " + std::to_string(k);
    switch (kind) {
    case Mutation::LeftLabel:
        ++e.p;
        if (m >= 0) ++gp.edges[m].p1;
        break;
    case Mutation::RightLabel:
        ++e.pp;
        if (m >= 0) ++gp.edges[m].p2;
        break;
    case Mutation::Target: {
        int t = pick(int(g0.graph.vertices.size()) - 1);
        if (t >= e.to) ++t;
        e.to = t;
        if (m >= 0) {
            int st = -1;
            for (int q = 0; q < gp.state_count(); ++q)
                if (gp.states[q].vertex == g0.graph.vertices[t]) st = q;
            if (st >= 0) {
                gp.edges[m].to = st;
            } else {
                // the new target is not an ordered state: the ordered edge disappears
                gp.edges.erase(gp.edges.begin() + m);
            }
            gp.index_edges();
        }
        break;
    }
    case Mutation::Order: break;
    }
    return what;
}

} // namespace rauzy::testing
