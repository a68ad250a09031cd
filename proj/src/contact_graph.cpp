#include "rauzy/contact_graph.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "rauzy/digraph.hpp"

namespace rauzy {

namespace {

/// c0 + ca*a + cb*b + ck*k
struct Lin {
    int c0 = 0, ca = 0, cb = 0, ck = 0;
    int operator()(const Params& p, int k) const { return c0 + ca * p.a + cb * p.b + ck * k; }
};

constexpr Lin C(int c0) { return {c0, 0, 0, 0}; }
constexpr Lin L_(int c0, int ca, int cb, int ck = 0) { return {c0, ca, cb, ck}; }

enum class Guard { None, BGe2, BGe3, ANeB, AGeB2, BEq1, AEqB, AGe3 };

bool holds(Guard g, const Params& p)
{
    switch (g) {
    case Guard::None: return true;
    case Guard::BGe2: return p.b >= 2;
    case Guard::BGe3: return p.b >= 3;
    case Guard::ANeB: return p.a != p.b;
    case Guard::AGeB2: return p.a >= p.b + 2;
    case Guard::BEq1: return p.b == 1;
    case Guard::AEqB: return p.a == p.b;
    case Guard::AGe3: return p.a >= 3;
    }
    return false;
}

/// Edge family S -> T (or T-) with labels p1|p2 for k = 0..kmax.
struct Row {
    char from;
    char to;
    bool minus;
    Lin p1, p2, kmax;
    Guard guard = Guard::None;
};

// clang-format off
const std::vector<Row> kTable1 = {
    {'A', 'C', false, L_(0,0,0,1),  L_(-1,0,1,1), L_(0,1,-1)},
    {'A', 'D', false, C(0),         L_(-1,0,1),   C(0)},
    {'A', 'O', false, C(0),         L_(-1,0,1),   C(0)},
    {'A', 'N', false, L_(0,0,0,1),  L_(0,0,1,1),  L_(-1,1,-1), Guard::ANeB},
    {'B', 'N', false, L_(0,1,-1),   L_(0,1,0),    C(0)},
    {'B', 'C', false, L_(1,1,-1),   L_(0,1,0),    C(0), Guard::BGe2},
    {'C', 'P', false, L_(0,0,0,1),  L_(0,1,-1,1), L_(-1,0,1)},
    {'C', 'H', false, L_(0,0,0,1),  L_(1,1,-1,1), L_(-2,0,1), Guard::BGe2},
    {'C', 'I', false, L_(0,0,0,1),  L_(1,1,-1,1), L_(-2,0,1), Guard::BGe2},
    {'D', 'H', false, L_(-1,0,1),   L_(0,1,0),    C(0)},
    {'D', 'I', false, L_(-1,0,1),   L_(0,1,0),    C(0), Guard::BGe2},
    {'E', 'C', true,  L_(0,1,0),    L_(0,1,-1),   C(0)},
    {'E', 'N', true,  L_(0,1,0),    L_(-1,1,-1),  C(0), Guard::ANeB},
    {'F', 'D', true,  L_(0,0,1),    C(0),         C(0)},
    {'F', 'O', true,  L_(0,0,1),    C(0),         C(0)},
    {'G', 'C', true,  L_(-1,1,0,-1), L_(-1,1,-1,-1), L_(-1,1,-1), Guard::ANeB},
    {'G', 'N', true,  L_(-1,1,0,-1), L_(-2,1,-1,-1), L_(-2,1,-1), Guard::AGeB2},
    {'H', 'P', true,  L_(0,1,0),    L_(-1,0,1),   C(0)},
    {'H', 'H', true,  L_(0,1,0),    L_(-2,0,1),   C(0), Guard::BGe2},
    {'H', 'I', true,  L_(0,1,0),    L_(-2,0,1),   C(0), Guard::BGe2},
    {'I', 'P', true,  L_(-1,1,0,-1), L_(-2,0,1,-1), L_(-2,0,1), Guard::BGe2},
    {'I', 'H', true,  L_(-1,1,0,-1), L_(-3,0,1,-1), L_(-3,0,1), Guard::BGe3},
    {'I', 'I', true,  L_(-1,1,0,-1), L_(-3,0,1,-1), L_(-3,0,1), Guard::BGe3},
    {'J', 'A', false, L_(-1,1,0),   L_(0,1,0),    C(0)},
    {'K', 'B', false, L_(-1,0,1),   L_(0,0,1),    C(0)},
    {'K', 'J', false, L_(0,0,1),    L_(0,0,1),    C(0), Guard::ANeB},
    {'K', 'M', false, L_(-1,0,1),   L_(0,0,1),    C(0), Guard::BEq1},
    {'L', 'J', false, L_(0,1,0),    L_(0,1,0),    C(0), Guard::AEqB},
    {'M', 'C', false, L_(0,1,0),    L_(0,1,0),    C(0), Guard::BEq1},
    {'N', 'E', false, C(0),         L_(-1,1,0),   C(0)},
    {'N', 'F', false, C(0),         L_(-1,1,0),   C(0)},
    {'N', 'G', false, C(0),         L_(-1,1,0),   C(0), Guard::ANeB},
    {'O', 'P', false, L_(0,0,1),    L_(0,1,0),    C(0)},
    {'P', 'E', true,  L_(0,1,0),    C(0),         C(0)},
    {'P', 'F', true,  L_(0,1,0),    C(0),         C(0)},
    {'P', 'G', true,  L_(0,1,0),    C(0),         C(0), Guard::ANeB},
};
// clang-format on

/// Ordered edge family between state numbers, with order expression.
struct ORow {
    int from;
    int to;
    bool minus;
    Lin p1, p2, kmax, order;
    Guard guard = Guard::None;
};

// clang-format off
const std::vector<ORow> kOrderedAGtB = {
    {1, 7, false, L_(0,0,0,1), L_(0,1,-1,1), L_(-1,0,1), L_(-2,0,3,-3)},
    {1, 5, false, L_(0,0,0,1), L_(1,1,-1,1), L_(-2,0,1), L_(-4,0,3,-3)},
    {1, 6, false, L_(0,0,0,1), L_(1,1,-1,1), L_(-2,0,1), L_(-3,0,3,-3)},
    {2, 8, false, C(0), L_(-1,1,0), C(0), C(1)},
    {2, 9, false, C(0), L_(-1,1,0), C(0), C(2)},
    {2, 10, false, C(0), L_(-1,1,0), C(0), C(3)},
    {3, 11, false, C(0), L_(-1,0,1), C(0), C(1)},
    {3, 12, false, C(0), L_(-1,0,1), C(0), C(2)},
    {3, 1, false, L_(0,0,0,1), L_(-1,0,1,1), L_(0,1,-1), L_(3,0,0,2)},
    {3, 2, false, L_(0,0,0,1), L_(0,0,1,1), L_(-1,1,-1), L_(4,0,0,2)},
    {4, 2, false, L_(0,1,-1), L_(0,1,0), C(0), C(1)},
    {4, 1, false, L_(1,1,-1), L_(0,1,0), C(0), C(2)},
    {5, 7, true, L_(-1,1,0,-1), L_(-2,0,1,-1), L_(-2,0,1), L_(-5,0,3,-3)},
    {5, 6, true, L_(-1,1,0,-1), L_(-3,0,1,-1), L_(-3,0,1), L_(-7,0,3,-3), Guard::BGe3},
    {5, 5, true, L_(-1,1,0,-1), L_(-3,0,1,-1), L_(-3,0,1), L_(-6,0,3,-3), Guard::BGe3},
    {6, 6, true, L_(0,1,0), L_(-2,0,1), C(0), C(1)},
    {6, 5, true, L_(0,1,0), L_(-2,0,1), C(0), C(2)},
    {6, 7, true, L_(0,1,0), L_(-1,0,1), C(0), C(3)},
    {7, 10, true, L_(0,1,0), C(0), C(0), C(1)},
    {7, 9, true, L_(0,1,0), C(0), C(0), C(2)},
    {7, 8, true, L_(0,1,0), C(0), C(0), C(3)},
    {8, 1, true, L_(0,1,0), L_(0,1,-1), C(0), C(1)},
    {8, 2, true, L_(0,1,0), L_(-1,1,-1), C(0), C(2)},
    {9, 1, true, L_(-1,1,0,-1), L_(-1,1,-1,-1), L_(-1,1,-1), L_(1,0,0,2)},
    {9, 2, true, L_(-1,1,0,-1), L_(-2,1,-1,-1), L_(-2,1,-1), L_(2,0,0,2), Guard::AGeB2},
    {10, 12, true, L_(0,0,1), C(0), C(0), C(1)},
    {10, 11, true, L_(0,0,1), C(0), C(0), C(2)},
    {11, 7, false, L_(0,0,1), L_(0,1,0), C(0), C(1)},
    {12, 5, false, L_(-1,0,1), L_(0,1,0), C(0), C(1)},
    {12, 6, false, L_(-1,0,1), L_(0,1,0), C(0), C(2)},
};

const std::vector<ORow> kOrderedBEq1 = {
    {1, 7, false, C(0), L_(-1,1,0), C(0), C(1)},
    {2, 8, false, C(0), L_(-1,1,0), C(0), C(1)},
    {2, 9, false, C(0), L_(-1,1,0), C(0), C(2)},
    {2, 10, false, C(0), L_(-1,1,0), C(0), C(3)},
    {3, 11, false, C(0), C(0), C(0), C(1)},
    {3, 12, false, C(0), C(0), C(0), C(2)},
    {3, 1, false, L_(0,0,0,1), L_(0,0,0,1), L_(-1,1,0), L_(3,0,0,2)},
    {3, 2, false, L_(0,0,0,1), L_(1,0,0,1), L_(-2,1,0), L_(4,0,0,2)},
    {4, 2, false, L_(-1,1,0), L_(0,1,0), C(0), C(1)},
    {5, 1, false, L_(0,1,0), L_(0,1,0), C(0), C(1)},
    {6, 7, true, L_(0,1,0), C(0), C(0), C(1)},
    {7, 10, true, L_(0,1,0), C(0), C(0), C(1)},
    {7, 9, true, L_(0,1,0), C(0), C(0), C(2)},
    {7, 8, true, L_(0,1,0), C(0), C(0), C(3)},
    {8, 1, true, L_(0,1,0), L_(-1,1,0), C(0), C(1)},
    {8, 2, true, L_(0,1,0), L_(-2,1,0), C(0), C(2)},
    {9, 1, true, L_(-1,1,0,-1), L_(-2,1,0,-1), L_(-2,1,0), L_(1,0,0,2)},
    {9, 2, true, L_(-1,1,0,-1), L_(-3,1,0,-1), L_(-3,1,0), L_(2,0,0,2), Guard::AGe3},
    {10, 12, true, C(1), C(0), C(0), C(1)},
    {10, 11, true, C(1), C(0), C(0), C(2)},
    {11, 7, false, C(1), L_(0,1,0), C(0), C(1)},
    {12, 6, false, C(0), L_(0,1,0), C(0), C(1)},
};

const std::vector<ORow> kOrderedAEqB = {
    {1, 7, false, L_(0,0,0,1), L_(0,0,0,1), L_(-1,1,0), L_(-2,3,0,-3)},
    {1, 5, false, L_(0,0,0,1), L_(1,0,0,1), L_(-2,1,0), L_(-4,3,0,-3)},
    {1, 6, false, L_(0,0,0,1), L_(1,0,0,1), L_(-2,1,0), L_(-3,3,0,-3)},
    {2, 8, false, C(0), L_(-1,1,0), C(0), C(1)},
    {2, 9, false, C(0), L_(-1,1,0), C(0), C(2)},
    {3, 10, false, C(0), L_(-1,1,0), C(0), C(1)},
    {3, 11, false, C(0), L_(-1,1,0), C(0), C(2)},
    {3, 1, false, C(0), L_(-1,1,0), C(0), C(3)},
    {4, 2, false, C(0), L_(0,1,0), C(0), C(1)},
    {4, 1, false, C(1), L_(0,1,0), C(0), C(2)},
    {5, 7, true, L_(-1,1,0,-1), L_(-2,1,0,-1), L_(-2,1,0), L_(-5,3,0,-3)},
    {5, 6, true, L_(-1,1,0,-1), L_(-3,1,0,-1), L_(-3,1,0), L_(-7,3,0,-3), Guard::AGe3},
    {5, 5, true, L_(-1,1,0,-1), L_(-3,1,0,-1), L_(-3,1,0), L_(-6,3,0,-3), Guard::AGe3},
    {6, 6, true, L_(0,1,0), L_(-2,1,0), C(0), C(1)},
    {6, 5, true, L_(0,1,0), L_(-2,1,0), C(0), C(2)},
    {6, 7, true, L_(0,1,0), L_(-1,1,0), C(0), C(3)},
    {7, 9, true, L_(0,1,0), C(0), C(0), C(1)},
    {7, 8, true, L_(0,1,0), C(0), C(0), C(2)},
    {8, 1, true, L_(0,1,0), C(0), C(0), C(1)},
    {9, 11, true, L_(0,1,0), C(0), C(0), C(1)},
    {9, 10, true, L_(0,1,0), C(0), C(0), C(2)},
    {10, 7, false, L_(0,1,0), L_(0,1,0), C(0), C(1)},
    {11, 5, false, L_(-1,1,0), L_(0,1,0), C(0), C(1)},
    {11, 6, false, L_(-1,1,0), L_(0,1,0), C(0), C(2)},
};

const std::vector<ORow> kOrderedA1B1 = {
    {1, 7, false, C(0), C(0), C(0), C(1)},
    {2, 8, false, C(0), C(0), C(0), C(1)},
    {2, 9, false, C(0), C(0), C(0), C(2)},
    {3, 10, false, C(0), C(0), C(0), C(1)},
    {3, 11, false, C(0), C(0), C(0), C(2)},
    {3, 1, false, C(0), C(0), C(0), C(3)},
    // label 0|1: M x_N = x_B + l(1) - l(0) forces p' - p = 1
    {4, 2, false, C(0), C(1), C(0), C(1)},
    {5, 1, false, C(1), C(1), C(0), C(1)},
    {6, 7, true, C(1), C(0), C(0), C(1)},
    {7, 9, true, C(1), C(0), C(0), C(1)},
    {7, 8, true, C(1), C(0), C(0), C(2)},
    {8, 1, true, C(1), C(0), C(0), C(1)},
    {9, 11, true, C(1), C(0), C(0), C(1)},
    {9, 10, true, C(1), C(0), C(0), C(2)},
    {10, 7, false, C(1), C(1), C(0), C(1)},
    {11, 6, false, C(0), C(1), C(0), C(1)},
};
// clang-format on

const std::vector<ORow>& ordered_rows(Case c)
{
    switch (c) {
    case Case::AGtB: return kOrderedAGtB;
    case Case::BEq1: return kOrderedBEq1;
    case Case::AEqB: return kOrderedAEqB;
    case Case::A1B1: return kOrderedA1B1;
    }
    return kOrderedAGtB;
}

/// Names of states 1..S_max.
std::string numbering(Case c)
{
    switch (c) {
    case Case::AGtB: return "CNABIHPEGFOD";
    case Case::BEq1: return "CNABMHPEGFOD";
    case Case::AEqB: return "CNABIHPEFOD";
    case Case::A1B1: return "CNABMHPEFOD";
    }
    return "";
}

std::string minus_name(const std::string& n)
{
    if (!n.empty() && n.back() == '-') return n.substr(0, n.size() - 1);
    return n + "-";
}

std::string edge_text(const std::string& s, int p1, int p2, const std::string& t)
{
    return s + " -" + std::to_string(p1) + "|" + std::to_string(p2) + "-> " + t;
}

} // namespace

BoundaryVertex named_vertex(char name)
{
    switch (name) {
    case 'A': return {1, {0, 0, 1}, 1};
    case 'B': return {1, {0, 0, 1}, 2};
    case 'C': return {1, {0, 1, -1}, 1};
    case 'D': return {1, {0, 1, -1}, 2};
    case 'E': return {2, {1, 0, -1}, 1};
    case 'F': return {3, {1, 0, -1}, 1};
    case 'G': return {1, {1, 0, -1}, 1};
    case 'H': return {2, {1, -1, 1}, 1};
    case 'I': return {1, {1, -1, 1}, 1};
    case 'J': return {1, {0, 0, 0}, 2};
    case 'K': return {1, {0, 0, 0}, 3};
    case 'L': return {2, {0, 0, 0}, 3};
    case 'M': return {2, {0, 0, 1}, 2};
    case 'N': return {1, {0, 1, 0}, 1};
    case 'O': return {3, {0, 1, -1}, 2};
    case 'P': return {2, {1, -1, 0}, 1};
    default: throw UsageError(std::string("unknown vertex name ") + name);
    }
}

static BoundaryVertex vertex_of(const std::string& name)
{
    const BoundaryVertex v = named_vertex(name[0]);
    return name.size() > 1 ? mirror(v) : v;
}

std::vector<std::string> contact_vertex_names(const Params& p)
{
    std::vector<std::string> out;
    for (char c : std::string("ABCDEFGHIJKNOP")) out.emplace_back(1, c);
    for (char c : std::string("CDEFGHINOP")) out.push_back(std::string(1, c) + "-");
    if (p.a == p.b) out.emplace_back("L");
    if (p.b == 1) out.emplace_back("M");
    auto drop = [&](const std::string& n) { out.erase(std::remove(out.begin(), out.end(), n), out.end()); };
    if (p.b == 1) {
        drop("I");
        drop("I-");
    }
    if (p.a == p.b) {
        drop("G");
        drop("G-");
        drop("N-");
    }
    return out;
}

ContactGraph contact_graph(const Params& p)
{
    ContactGraph c{p, p.contact_case(), {}};
    for (const auto& n : contact_vertex_names(p)) c.graph.add_vertex(vertex_of(n), n);
    auto index_of = [&](const std::string& n) {
        auto it = std::find(c.graph.names.begin(), c.graph.names.end(), n);
        return it == c.graph.names.end() ? -1 : int(it - c.graph.names.begin());
    };
    std::set<LabeledEdge> edges;
    for (const auto& r : kTable1) {
        if (!holds(r.guard, p)) continue;
        const std::string s(1, r.from);
        const std::string t = r.minus ? std::string(1, r.to) + "-" : std::string(1, r.to);
        const int is = index_of(s), it = index_of(t);
        for (int k = 0; k <= r.kmax(p, 0); ++k) {
            const int p1 = r.p1(p, k), p2 = r.p2(p, k);
            if (is < 0 || it < 0)
                throw VerificationError("table edge leaves the vertex set: " + edge_text(s, p1, p2, t));
            edges.insert({is, p1, p2, it});
            // minus completion
            const int ms = index_of(minus_name(s)), mt = index_of(minus_name(t));
            if (ms >= 0 && mt >= 0) edges.insert({ms, p2, p1, mt});
        }
    }
    c.graph.edges.assign(edges.begin(), edges.end());
    return c;
}

BoundaryGraph graph_G(const ContactGraph& c)
{
    BoundaryGraph g;
    std::vector<int> map(c.graph.vertices.size(), -1);
    for (std::size_t k = 0; k < c.graph.vertices.size(); ++k) {
        const auto& n = c.graph.names[k];
        if (n == "J" || n == "K" || n == "L") continue;
        map[k] = g.add_vertex(c.graph.vertices[k], n);
    }
    for (const auto& e : c.graph.edges)
        if (map[e.from] >= 0 && map[e.to] >= 0) g.edges.push_back({map[e.from], e.p, e.pp, map[e.to]});
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

int OrderedGraph::find(const std::string& name) const
{
    for (int s = 0; s < state_count(); ++s)
        if (states[s].name == name) return s;
    return -1;
}

int OrderedGraph::state(int number, bool minus) const
{
    for (int s = 0; s < state_count(); ++s)
        if (states[s].number == number && states[s].minus == minus) return s;
    return -1;
}

void OrderedGraph::index_edges(std::vector<std::string>* problems)
{
    for (auto& st : states) st.out.clear();
    std::vector<std::vector<int>> by_order(states.size());
    for (int e = 0; e < int(edges.size()); ++e) states[edges[e].from].out.push_back(e);
    for (int s = 0; s < state_count(); ++s) {
        auto& out = states[s].out;
        std::sort(out.begin(), out.end(), [&](int x, int y) { return edges[x].order < edges[y].order; });
        for (int k = 0; k < int(out.size()); ++k)
            if (edges[out[k]].order != k + 1) {
                if (problems)
                    problems->push_back("state " + states[s].name + ": orders are not 1.." +
                                        std::to_string(out.size()));
                break;
            }
    }
}

OrderedGraph ordered_graph(const Params& p)
{
    const Case c = p.contact_case();
    const std::string names = numbering(c);
    OrderedGraph g;
    g.params = p;
    g.s_max = static_cast<int>(names.size());
    const auto r0 = contact_vertex_names(p);
    auto in_r0 = [&](const std::string& n) { return std::find(r0.begin(), r0.end(), n) != r0.end(); };
    for (int k = 0; k < g.s_max; ++k) {
        const std::string n(1, names[k]);
        g.states.push_back({n, vertex_of(n), k + 1, false, {}});
    }
    for (int k = 0; k < g.s_max; ++k) {
        const std::string n = std::string(1, names[k]) + "-";
        if (in_r0(n)) g.states.push_back({n, vertex_of(n), k + 1, true, {}});
    }
    std::vector<OrderedEdge> base;
    for (const auto& r : ordered_rows(c)) {
        if (!holds(r.guard, p)) continue;
        const int from = g.state(r.from), to = g.state(r.to, r.minus);
        if (from < 0 || to < 0)
            throw VerificationError("ordered table edge leaves the state set at state " + std::to_string(r.from));
        for (int k = 0; k <= r.kmax(p, 0); ++k) base.push_back({from, to, r.p1(p, k), r.p2(p, k), r.order(p, k)});
    }
    g.edges = base;
    g.index_edges();
    // minus-order rule
    for (int s = 0; s < g.s_max; ++s) {
        const int ms = g.state(s + 1, true);
        if (ms < 0) continue;
        const int omax = g.states[s].omax();
        for (int e : std::vector<int>(g.states[s].out)) {
            const OrderedEdge& ed = g.edges[e];
            const auto& t = g.states[ed.to];
            const int mt = g.state(t.number, !t.minus);
            if (mt < 0) throw VerificationError("minus completion leaves the state set at " + g.states[ms].name);
            g.edges.push_back({ms, mt, ed.p2, ed.p1, omax + 1 - ed.order});
        }
    }
    std::vector<std::string> problems;
    g.index_edges(&problems);
    if (!problems.empty()) throw VerificationError("order gap detected: " + problems.front());
    return g;
}

BoundaryGraph unordered(const OrderedGraph& g)
{
    BoundaryGraph h;
    for (const auto& s : g.states) h.add_vertex(s.vertex, s.name);
    for (const auto& e : g.edges) h.edges.push_back({e.from, e.p1, e.p2, e.to});
    std::sort(h.edges.begin(), h.edges.end());
    return h;
}

namespace {

/// Eigen-coordinates of the left digits along the walk that starts with order `first` at s and
/// then always takes order 1 (low) or the largest order (high), truncated at `depth` steps.
/// Empty when the walk reaches a state without outgoing edges.
std::optional<EigenCoords> tail_psi(const Embedding& emb, const OrderedGraph& g, int s, int first, bool high,
                                    int depth)
{
    EigenCoords acc, scale = emb.eigen_coords(prefix_vec(1));
    int o = first;
    for (int k = 0; k < depth; ++k) {
        if (o < 1 || o > g.states[s].omax()) return std::nullopt;
        const auto& e = g.edge(s, o);
        acc += Real(e.p1) * scale;
        scale = emb.contract(scale);
        s = e.to;
        o = high ? g.states[s].omax() : 1;
    }
    return acc;
}

/// Touching walks of the numeration have equal digit sums: (S;omax..) ~ (S+1;1..),
/// (S_max;omax..) ~ (1;1..) and (S;o+1,1..) ~ (S;o,omax..).
void check_orders_geometrically(const OrderedGraph& g, std::vector<std::string>& fail)
{
    const Embedding emb(g.params);
    const int depth = int(std::ceil(std::log(1e-22L) / std::log(emb.max_abs_alpha()))) + 1;
    const Real tol = 1e-9L * std::max<Real>(1, emb.candidate_bound());
    auto close = [&](const std::optional<EigenCoords>& x, const std::optional<EigenCoords>& y) {
        return x && y && emb.norm(*x - *y) < tol;
    };
    for (int s = 0; s < g.s_max; ++s) {
        const int t = (s + 1) % g.s_max;
        if (!close(tail_psi(emb, g, s, g.states[s].omax(), true, depth), tail_psi(emb, g, t, 1, false, depth)))
            fail.push_back("boundary pieces of " + g.states[s].name + " and " + g.states[t].name + " do not touch");
    }
    for (int s = 0; s < g.state_count(); ++s)
        for (int o = 1; o < g.states[s].omax(); ++o)
            if (!close(tail_psi(emb, g, s, o + 1, false, depth), tail_psi(emb, g, s, o, true, depth)))
                fail.push_back("orders " + std::to_string(o) + " and " + std::to_string(o + 1) + " at " +
                               g.states[s].name + " do not touch");
}

} // namespace

TableReport verify_tables(const Params& p, const ContactGraph& g0, const OrderedGraph& gp)
{
    TableReport rep;
    auto fail = [&](const std::string& s) { rep.failures.push_back(s); };
    const Mat3 minv = incidence_inverse(p);
    const auto gamma = prefix_suffix_graph(p);
    const auto& G = g0.graph;

    static const int expected_count[] = {24, 23, 22, 21};
    const int want = expected_count[static_cast<int>(p.contact_case())];
    if (int(G.vertices.size()) != want)
        fail("vertex count " + std::to_string(G.vertices.size()) + " != " + std::to_string(want));

    auto name = [&](int k) { return k < int(G.names.size()) && !G.names[k].empty() ? G.names[k] : "?"; };
    std::set<LabeledEdge> seen;
    for (const auto& e : G.edges) {
        const auto& s = G.vertices[e.from];
        const auto& t = G.vertices[e.to];
        const std::string txt = edge_text(name(e.from), e.p, e.pp, name(e.to));
        if (!seen.insert(e).second) fail("duplicate edge " + txt);
        if (!gamma.has_edge(s.i, e.p, t.i)) fail("no prefix-suffix edge for left label of " + txt);
        if (!gamma.has_edge(s.j, e.pp, t.j)) fail("no prefix-suffix edge for right label of " + txt);
        const LatticeVec x1 = minv * (s.x + prefix_vec(e.pp) - prefix_vec(e.p));
        if (x1 != t.x) fail("edge algebra fails for " + txt);
    }
    // minus completion
    for (const auto& e : G.edges) {
        const int ms = G.find(mirror(G.vertices[e.from])), mt = G.find(mirror(G.vertices[e.to]));
        if (ms < 0 || mt < 0) continue;
        if (!seen.count({ms, e.pp, e.p, mt}))
            fail("minus completion missing for " + edge_text(name(e.from), e.p, e.pp, name(e.to)));
    }
    // G+ agrees with G0 minus J, K, L
    const BoundaryGraph g = graph_G(g0);
    const BoundaryGraph u = unordered(gp);
    if (g.vertex_set() != u.vertex_set()) fail("state set of G+ differs from G0 without J, K, L");
    const auto es = g.edge_set(), eu = u.edge_set();
    if (es != eu) {
        std::vector<std::tuple<BoundaryVertex, int, int, BoundaryVertex>> d1, d2;
        std::set_difference(es.begin(), es.end(), eu.begin(), eu.end(), std::back_inserter(d1));
        std::set_difference(eu.begin(), eu.end(), es.begin(), es.end(), std::back_inserter(d2));
        auto nm = [&](const BoundaryVertex& v) { int k = G.find(v); return k < 0 ? std::string("?") : name(k); };
        for (const auto& [a, x, y, b] : d1) fail("edge missing from G+: " + edge_text(nm(a), x, y, nm(b)));
        for (const auto& [a, x, y, b] : d2) fail("edge of G+ not in G0: " + edge_text(nm(a), x, y, nm(b)));
    }
    // orders
    OrderedGraph copy = gp;
    std::vector<std::string> problems;
    copy.index_edges(&problems);
    for (auto& s : problems) fail(s);
    for (int s = 0; s < gp.s_max && problems.empty(); ++s) {
        const int ms = gp.state(s + 1, true);
        if (ms < 0) continue;
        const int omax = copy.states[s].omax();
        if (copy.states[ms].omax() != omax) {
            fail("state " + gp.states[ms].name + " has a different out-degree than its mirror");
            continue;
        }
        for (int o = 1; o <= omax; ++o) {
            const auto& e = copy.edge(s, o);
            const auto& f = copy.edge(ms, omax + 1 - o);
            const auto& t = gp.states[e.to];
            if (f.to != gp.state(t.number, !t.minus) || f.p1 != e.p2 || f.p2 != e.p1)
                fail("minus-order rule fails at " + gp.states[ms].name + " order " + std::to_string(omax + 1 - o));
        }
    }
    const int want_smax = p.a == p.b ? 11 : 12;
    if (gp.s_max != want_smax) fail("S_max is " + std::to_string(gp.s_max));
    if (problems.empty()) check_orders_geometrically(copy, rep.failures);
    return rep;
}

TableReport verify_table_consistency(const Params& p)
{
    return verify_tables(p, contact_graph(p), ordered_graph(p));
}

long double perron_polynomial(const Params& p, long double x)
{
    return (((x + (1 - p.b)) * x + (p.b - p.a)) * x - (p.a + 1)) * x - 1;
}

long double perron_root(const Params& p)
{
    long double lo = 1, hi = p.a + 2;
    if (!(perron_polynomial(p, lo) < 0 && perron_polynomial(p, hi) > 0))
        throw VerificationError("no sign change of the Perron polynomial on (1, a+2)");
    for (int it = 0; it < 200 && hi - lo > 1e-6L; ++it) {
        const long double mid = (lo + hi) / 2;
        (perron_polynomial(p, mid) < 0 ? lo : hi) = mid;
    }
    long double x = (lo + hi) / 2;
    for (int it = 0; it < 50; ++it) {
        const long double d = ((4 * x + 3 * (1 - p.b)) * x + 2 * (p.b - p.a)) * x - (p.a + 1);
        const long double step = perron_polynomial(p, x) / d;
        x -= step;
        if (std::fabs(step) < 1e-19L * x) break;
    }
    return x;
}

PerronData perron_data(const OrderedGraph& g)
{
    using Mat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
    using Vec = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
    PerronData d;
    const int r = g.state_count();
    d.L.assign(r, std::vector<int>(r, 0));
    for (const auto& e : g.edges) ++d.L[e.from][e.to];
    d.lambda = perron_root(g.params);

    Mat L(r, r);
    for (int m = 0; m < r; ++m)
        for (int n = 0; n < r; ++n) L(m, n) = d.L[m][n];

    // inverse iteration with a slightly shifted Perron root
    const long double shift = d.lambda * (1 + 1e-15L);
    Eigen::PartialPivLU<Mat> lu(L - shift * Mat::Identity(r, r));
    Vec u = Vec::Ones(r) / r;
    for (int it = 0; it < 200; ++it) {
        Vec next = lu.solve(u);
        for (int k = 0; k < r; ++k) next(k) = std::fabs(next(k));  // positivity projection
        next /= next.sum();
        const long double diff = (next - u).cwiseAbs().maxCoeff();
        u = next;
        if (diff < 1e-14L) break;
    }
    d.u.assign(u.data(), u.data() + r);
    const long double resid = (L * u - d.lambda * u).cwiseAbs().maxCoeff();
    if (resid > 1e-12L) throw VerificationError("Perron vector residual too large");
    for (long double x : d.u)
        if (!(x > 0)) throw VerificationError("Perron vector has a nonpositive component");

    // independent estimate: power iteration on L + I
    Mat A = L + Mat::Identity(r, r);
    Vec x = Vec::Ones(r);
    long double est = 0;
    for (int it = 0; it < 200000; ++it) {
        Vec y = A * x;
        const long double next = y.sum() / x.sum();
        x = y / y.sum();
        if (it > 10 && std::fabs(next - est) < 1e-16L * next) {
            est = next;
            break;
        }
        est = next;
    }
    d.lambda_power = est - 1;
    return d;
}

long double perron_det(const PerronData& d)
{
    using Mat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
    const int r = d.r();
    Mat A(r, r);
    for (int m = 0; m < r; ++m)
        for (int n = 0; n < r; ++n) A(m, n) = d.L[m][n] - (m == n ? d.lambda : 0);
    return A.partialPivLu().determinant();
}

std::vector<QElem> exact_perron_vector(const OrderedGraph& g, const NumberField& K)
{
    const int r = g.state_count();
    std::vector<std::vector<QElem>> A(r, std::vector<QElem>(r, K.from_int(0)));
    for (const auto& e : g.edges) A[e.from][e.to] = K.add(A[e.from][e.to], K.from_int(1));
    const QElem lam = K.generator();
    for (int k = 0; k < r; ++k) A[k][k] = K.sub(A[k][k], lam);

    // reduced row echelon form; the kernel is one-dimensional
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < r && row < r; ++col) {
        int piv = -1;
        for (int k = row; k < r; ++k)
            if (!NumberField::is_zero(A[k][col])) {
                piv = k;
                break;
            }
        if (piv < 0) continue;
        std::swap(A[row], A[piv]);
        const QElem inv = K.inv(A[row][col]);
        for (int c = col; c < r; ++c) A[row][c] = K.mul(A[row][c], inv);
        for (int k = 0; k < r; ++k) {
            if (k == row || NumberField::is_zero(A[k][col])) continue;
            const QElem f = A[k][col];
            for (int c = col; c < r; ++c) A[k][c] = K.sub(A[k][c], K.mul(f, A[row][c]));
        }
        pivot_col.push_back(col);
        ++row;
    }
    if (row != r - 1) throw VerificationError("Perron eigenspace is not one-dimensional");
    int free_col = 0;
    for (int c = 0; c < r; ++c)
        if (std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end()) {
            free_col = c;
            break;
        }
    std::vector<QElem> u(r, K.from_int(0));
    u[free_col] = K.from_int(1);
    for (int k = 0; k < row; ++k) u[pivot_col[k]] = K.sub(K.from_int(0), A[k][free_col]);
    QElem sum = K.from_int(0);
    for (const auto& x : u) sum = K.add(sum, x);
    const QElem inv = K.inv(sum);
    for (auto& x : u) x = K.mul(x, inv);
    return u;
}

} // namespace rauzy
