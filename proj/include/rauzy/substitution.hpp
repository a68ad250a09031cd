#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rauzy/params.hpp"

namespace rauzy {

using Letter = int;  // 1, 2 or 3
using Word = std::string;  // characters '1', '2', '3'

/// Integer triple; the exact preimage of a translation in the contracting plane.
using LatticeVec = std::array<std::int64_t, 3>;
using Mat3 = std::array<std::array<std::int64_t, 3>, 3>;

LatticeVec operator+(const LatticeVec& x, const LatticeVec& y);
LatticeVec operator-(const LatticeVec& x, const LatticeVec& y);
LatticeVec operator-(const LatticeVec& x);
LatticeVec operator*(const Mat3& m, const LatticeVec& x);
Mat3 operator*(const Mat3& m, const Mat3& n);
std::int64_t det(const Mat3& m);

/// l(1^m) = (m, 0, 0).
inline LatticeVec prefix_vec(int m) { return {m, 0, 0}; }

Word apply_substitution(const Params& p, const Word& w);
LatticeVec abelianization(const Word& w);
Mat3 incidence_matrix(const Params& p);
/// Exact inverse of the (unimodular) incidence matrix.
Mat3 incidence_inverse(const Params& p);

/// Edge i --1^m--> j of the prefix-suffix graph, meaning sigma(j) = 1^m i s.
struct GammaEdge {
    Letter from;
    int prefix;
    Letter to;
    bool operator==(const GammaEdge&) const = default;
};

struct PrefixSuffixGraph {
    std::vector<GammaEdge> edges;

    /// Edges leaving letter i, in construction order.
    std::vector<GammaEdge> out(Letter i) const;
    bool has_edge(Letter from, int prefix, Letter to) const;
};

PrefixSuffixGraph prefix_suffix_graph(const Params& p);

/// Number of length-n walks in the prefix-suffix graph starting at i.
std::uint64_t gamma_walk_count(const Params& p, Letter i, int n);

} // namespace rauzy
