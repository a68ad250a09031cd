#include "rauzy/boundary_graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <tuple>

#include "rauzy/digraph.hpp"
#include "rauzy/kernels.hpp"

namespace rauzy {

int BoundaryGraph::find(const BoundaryVertex& v) const
{
    auto it = index_.find(v);
    return it == index_.end() ? -1 : it->second;
}

int BoundaryGraph::add_vertex(const BoundaryVertex& v, const std::string& name)
{
    if (int k = find(v); k >= 0) return k;
    vertices.push_back(v);
    names.push_back(name);
    const int k = static_cast<int>(vertices.size()) - 1;
    index_[v] = k;
    return k;
}

std::vector<std::tuple<BoundaryVertex, int, int, BoundaryVertex>> BoundaryGraph::edge_set() const
{
    std::vector<std::tuple<BoundaryVertex, int, int, BoundaryVertex>> out;
    out.reserve(edges.size());
    for (const auto& e : edges) out.emplace_back(vertices[e.from], e.p, e.pp, vertices[e.to]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BoundaryVertex> BoundaryGraph::vertex_set() const
{
    auto v = vertices;
    std::sort(v.begin(), v.end());
    return v;
}

bool same_graph(const BoundaryGraph& g, const BoundaryGraph& h)
{
    return g.vertex_set() == h.vertex_set() && g.edge_set() == h.edge_set();
}

bool is_subgraph(const BoundaryGraph& g, const BoundaryGraph& h)
{
    const auto gv = g.vertex_set(), hv = h.vertex_set();
    const auto ge = g.edge_set(), he = h.edge_set();
    return std::includes(hv.begin(), hv.end(), gv.begin(), gv.end()) &&
           std::includes(he.begin(), he.end(), ge.begin(), ge.end());
}

std::array<std::int64_t, 3> candidate_box(const Embedding& emb)
{
    // rows v_beta, v_alpha1, v_alpha2; x = V^{-1} y
    std::array<std::array<Cplx, 3>, 3> V;
    const auto vb = emb.v_beta();
    for (int k = 0; k < 3; ++k) V[0][k] = Cplx(vb[k], 0);
    V[1] = emb.left_eigenvector(emb.alpha1());
    V[2] = emb.left_eigenvector(emb.alpha2());
    auto cof = [&](int r, int c) {
        const int r1 = (r + 1) % 3, r2 = (r + 2) % 3, c1 = (c + 1) % 3, c2 = (c + 2) % 3;
        return V[r1][c1] * V[r2][c2] - V[r1][c2] * V[r2][c1];
    };
    const Cplx d = V[0][0] * cof(0, 0) + V[0][1] * cof(0, 1) + V[0][2] * cof(0, 2);
    const Real ybound[3] = {emb.beta() * (1 + emb.tol()), emb.candidate_bound() * (1 + emb.tol()),
                            emb.candidate_bound() * (1 + emb.tol())};
    std::array<std::int64_t, 3> half{};
    for (int k = 0; k < 3; ++k) {
        Real s = 0;
        for (int m = 0; m < 3; ++m) s += std::abs(cof(m, k) / d) * ybound[m];  // W[k][m] = cof(m,k)/d
        half[k] = static_cast<std::int64_t>(std::ceil(s)) + 1;
    }
    return half;
}

CandidateSet enumerate_candidates(const Embedding& emb)
{
    CandidateSet cs;
    cs.box = candidate_box(emb);
    const auto hits = kernels::scan_box_omp(emb, cs.box);
    const std::array<std::int64_t, 3> doubled{2 * cs.box[0], 2 * cs.box[1], 2 * cs.box[2]};
    if (kernels::scan_box_omp(emb, doubled) != hits)
        throw VerificationError("candidate enumeration is not stable under doubling of the box (precision failure)");
    for (const auto& h : hits)
        for (Letter i = 1; i <= 3; ++i)
            for (Letter j = 1; j <= 3; ++j)
                if (emb.gamma_srs_member(h.x, j) || emb.gamma_srs_member(-h.x, i)) {
                    cs.vertices.push_back({i, h.x, j});
                    cs.flagged.push_back(h.flagged);
                }
    return cs;
}

bool is_seed(const Embedding& emb, const BoundaryVertex& v)
{
    const bool zero = v.x == LatticeVec{0, 0, 0};
    return emb.gamma_srs_member(v.x, v.j) && (!zero || v.i < v.j);
}

BoundaryGraph close_and_prune(const Embedding& emb, const std::vector<BoundaryVertex>& vertices,
                              std::vector<int>* kept_indices)
{
    const Params& p = emb.params();
    const Mat3 minv = incidence_inverse(p);
    const auto gamma = prefix_suffix_graph(p);
    std::map<BoundaryVertex, int> index;
    for (int k = 0; k < int(vertices.size()); ++k) index.emplace(vertices[k], k);

    const int n = static_cast<int>(vertices.size());
    Digraph dg(n);
    std::vector<LabeledEdge> edges;
    for (int k = 0; k < n; ++k) {
        const auto& v = vertices[k];
        for (const auto& e1 : gamma.out(v.i))
            for (const auto& e2 : gamma.out(v.j)) {
                const LatticeVec x1 = minv * (v.x + prefix_vec(e2.prefix) - prefix_vec(e1.prefix));
                auto it = index.find({e1.to, x1, e2.to});
                if (it == index.end()) continue;
                edges.push_back({k, e1.prefix, e2.prefix, it->second});
                dg.add_edge(k, it->second);
            }
    }
    std::vector<int> seeds;
    for (int k = 0; k < n; ++k)
        if (is_seed(emb, vertices[k])) seeds.push_back(k);
    const auto reach = reachable_from(dg, seeds);
    const auto live = can_reach_cycle(dg);

    BoundaryGraph g;
    std::vector<int> new_index(n, -1);
    for (int k = 0; k < n; ++k)
        if (reach[k] && live[k]) {
            new_index[k] = g.add_vertex(vertices[k]);
            if (kept_indices) kept_indices->push_back(k);
        }
    for (const auto& e : edges)
        if (new_index[e.from] >= 0 && new_index[e.to] >= 0)
            g.edges.push_back({new_index[e.from], e.p, e.pp, new_index[e.to]});
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

int FullBoundaryGraph::flagged_count() const
{
    return static_cast<int>(std::count(flagged.begin(), flagged.end(), char(1)));
}

FullBoundaryGraph build_full_boundary_graph(const Embedding& emb)
{
    const CandidateSet cs = enumerate_candidates(emb);
    FullBoundaryGraph out;
    out.candidate_count = static_cast<int>(cs.vertices.size());
    std::vector<int> kept;
    out.graph = close_and_prune(emb, cs.vertices, &kept);
    for (int k : kept) out.flagged.push_back(cs.flagged[k]);
    return out;
}

std::vector<BoundaryVertex> neighbor_set(const Embedding& emb, const BoundaryGraph& g)
{
    std::vector<BoundaryVertex> out;
    for (const auto& v : g.vertices)
        if (v.x != LatticeVec{0, 0, 0} && emb.gamma_srs_member(v.x, v.j)) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

int DigitSeq::at(std::size_t k) const
{
    if (k < pre.size()) return pre[k];
    return period[(k - pre.size()) % period.size()];
}

namespace {

struct Lasso {
    std::size_t pre;
    std::size_t period;

    std::size_t phase(std::size_t k) const { return k < pre ? k : pre + (k - pre) % period; }
};

Lasso joint_lasso(const DigitSeq& s1, const DigitSeq& s2)
{
    if (s1.period.empty() || s2.period.empty()) throw UsageError("digit sequences need a nonempty period");
    return {std::max(s1.pre.size(), s2.pre.size()), std::lcm(s1.period.size(), s2.period.size())};
}

bool realizable(const Params& p, const DigitSeq& s, Letter start)
{
    const auto gamma = prefix_suffix_graph(p);
    const Lasso l{s.pre.size(), s.period.size()};
    std::set<std::pair<std::size_t, unsigned>> seen;
    unsigned letters = 1u << start;
    for (std::size_t k = 0;; ++k) {
        if (!letters) return false;
        if (!seen.insert({l.phase(k), letters}).second) return true;
        unsigned next = 0;
        for (const auto& e : gamma.edges)
            if ((letters >> e.from & 1u) && e.prefix == s.at(k)) next |= 1u << e.to;
        letters = next;
    }
}

} // namespace

bool point_equality(const Embedding& emb, const BoundaryGraph& g, const DigitSeq& s1, const DigitSeq& s2,
                    const LatticeVec& x, Letter i, Letter j)
{
    const Lasso lasso = joint_lasso(s1, s2);
    if (!realizable(emb.params(), s1, i) || !realizable(emb.params(), s2, j))
        throw UsageError("digit sequence is not realizable as a prefix-suffix walk");
    std::vector<std::vector<const LabeledEdge*>> out(g.vertices.size());
    for (const auto& e : g.edges) out[e.from].push_back(&e);

    const int start = g.find({i, x, j});
    if (start < 0) return false;
    std::vector<int> current{start};
    std::set<std::pair<std::size_t, std::vector<int>>> seen;
    for (std::size_t k = 0; k < 10000000; ++k) {
        if (current.empty()) return false;
        if (!seen.insert({lasso.phase(k), current}).second) return true;
        const int d1 = s1.at(k), d2 = s2.at(k);
        std::vector<int> next;
        for (int v : current)
            for (const auto* e : out[v])
                if (e->p == d1 && e->pp == d2) next.push_back(e->to);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        current.swap(next);
    }
    throw VerificationError("point_equality did not close its lasso");
}

} // namespace rauzy
