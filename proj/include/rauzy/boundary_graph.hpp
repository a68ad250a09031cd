#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "rauzy/embedding.hpp"

namespace rauzy {

/// Triple [i, pi(x), j].
struct BoundaryVertex {
    Letter i = 1;
    LatticeVec x{0, 0, 0};
    Letter j = 1;

    auto operator<=>(const BoundaryVertex&) const = default;
    bool operator==(const BoundaryVertex&) const = default;
};

/// [j, -x, i]
inline BoundaryVertex mirror(const BoundaryVertex& v) { return {v.j, -v.x, v.i}; }

/// Edge labelled p|p' between vertex indices; p, p' are prefix lengths.
struct LabeledEdge {
    int from;
    int p;
    int pp;
    int to;

    auto operator<=>(const LabeledEdge&) const = default;
    bool operator==(const LabeledEdge&) const = default;
};

/// Vertex/edge sets of a boundary-type graph with optional vertex names.
struct BoundaryGraph {
    std::vector<BoundaryVertex> vertices;
    std::vector<LabeledEdge> edges;
    std::vector<std::string> names;  // empty string when unnamed

    int find(const BoundaryVertex& v) const;
    int add_vertex(const BoundaryVertex& v, const std::string& name = "");
    /// Edges as (source vertex, p, p', target vertex), sorted; independent of indexing.
    std::vector<std::tuple<BoundaryVertex, int, int, BoundaryVertex>> edge_set() const;
    std::vector<BoundaryVertex> vertex_set() const;

private:
    std::map<BoundaryVertex, int> index_;
};

bool same_graph(const BoundaryGraph& g, const BoundaryGraph& h);
/// Every vertex and edge of g occurs in h.
bool is_subgraph(const BoundaryGraph& g, const BoundaryGraph& h);

struct CandidateSet {
    std::vector<BoundaryVertex> vertices;
    std::vector<char> flagged;  // admitted only through the tolerance inflation of the bound
    std::array<std::int64_t, 3> box{};  // half-widths of the integer box that was scanned
};

/// Integer box half-widths that contain every x with |<x,v_beta>| < beta and ||x|| <= B.
std::array<std::int64_t, 3> candidate_box(const Embedding& emb);

/// All [i,x,j] with ||x|| <= B and ([x,j] or [-x,i] in Gamma_srs). Verifies stability under
/// doubling of the scanned box and throws VerificationError otherwise.
CandidateSet enumerate_candidates(const Embedding& emb);

struct FullBoundaryGraph {
    BoundaryGraph graph;
    std::vector<char> flagged;  // per surviving vertex
    int candidate_count = 0;

    int flagged_count() const;
};

FullBoundaryGraph build_full_boundary_graph(const Embedding& emb);

/// Adds all algebraic edges between the given vertices and keeps the part lying on
/// infinite walks from seeds.
BoundaryGraph close_and_prune(const Embedding& emb, const std::vector<BoundaryVertex>& vertices,
                              std::vector<int>* kept_indices = nullptr);

bool is_seed(const Embedding& emb, const BoundaryVertex& v);

/// Vertices with x != 0 and [x, j] in Gamma_srs.
std::vector<BoundaryVertex> neighbor_set(const Embedding& emb, const BoundaryGraph& g);

/// Eventually periodic digit sequence pre . (period)^infinity; period must be nonempty.
struct DigitSeq {
    std::vector<int> pre;
    std::vector<int> period;

    int at(std::size_t k) const;
};

/// True iff the labels (s1|s2) describe an infinite walk in g starting at [i, x, j].
bool point_equality(const Embedding& emb, const BoundaryGraph& g, const DigitSeq& s1, const DigitSeq& s2,
                    const LatticeVec& x, Letter i, Letter j);

} // namespace rauzy
