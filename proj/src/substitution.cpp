#include "rauzy/substitution.hpp"

namespace rauzy {

LatticeVec operator+(const LatticeVec& x, const LatticeVec& y) { return {x[0] + y[0], x[1] + y[1], x[2] + y[2]}; }
LatticeVec operator-(const LatticeVec& x, const LatticeVec& y) { return {x[0] - y[0], x[1] - y[1], x[2] - y[2]}; }
LatticeVec operator-(const LatticeVec& x) { return {-x[0], -x[1], -x[2]}; }

LatticeVec operator*(const Mat3& m, const LatticeVec& x)
{
    LatticeVec r{};
    for (int i = 0; i < 3; ++i)
        r[i] = m[i][0] * x[0] + m[i][1] * x[1] + m[i][2] * x[2];
    return r;
}

Mat3 operator*(const Mat3& m, const Mat3& n)
{
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                r[i][j] += m[i][k] * n[k][j];
    return r;
}

std::int64_t det(const Mat3& m)
{
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Word apply_substitution(const Params& p, const Word& w)
{
    Word out;
    for (char c : w) {
        switch (c) {
        case '1': out += std::string(p.a, '1') + '2'; break;
        case '2': out += std::string(p.b, '1') + '3'; break;
        case '3': out += '1'; break;
        default: throw UsageError(std::string("letter outside alphabet: '") + c + "'");
        }
    }
    return out;
}

LatticeVec abelianization(const Word& w)
{
    LatticeVec v{0, 0, 0};
    for (char c : w) {
        if (c < '1' || c > '3') throw UsageError(std::string("letter outside alphabet: '") + c + "'");
        ++v[c - '1'];
    }
    return v;
}

Mat3 incidence_matrix(const Params& p)
{
    return {{{p.a, p.b, 1}, {1, 0, 0}, {0, 1, 0}}};
}

Mat3 incidence_inverse(const Params& p)
{
    // M (x,y,z) = (a x + b y + z, x, y)  =>  M^-1 (u,v,w) = (v, w, u - a v - b w)
    return {{{0, 1, 0}, {0, 0, 1}, {1, -p.a, -p.b}}};
}

std::vector<GammaEdge> PrefixSuffixGraph::out(Letter i) const
{
    std::vector<GammaEdge> r;
    for (const auto& e : edges)
        if (e.from == i) r.push_back(e);
    return r;
}

bool PrefixSuffixGraph::has_edge(Letter from, int prefix, Letter to) const
{
    for (const auto& e : edges)
        if (e.from == from && e.prefix == prefix && e.to == to) return true;
    return false;
}

PrefixSuffixGraph prefix_suffix_graph(const Params& p)
{
    PrefixSuffixGraph g;
    // scan every position of sigma(j) for j = 1, 2, 3
    for (Letter j = 1; j <= 3; ++j) {
        const Word img = apply_substitution(p, std::string(1, char('0' + j)));
        for (std::size_t pos = 0; pos < img.size(); ++pos)
            g.edges.push_back({img[pos] - '0', static_cast<int>(pos), j});
    }
    return g;
}

std::uint64_t gamma_walk_count(const Params& p, Letter i, int n)
{
    const auto g = prefix_suffix_graph(p);
    std::array<std::uint64_t, 3> cnt{1, 1, 1};  // walks of length 0 from each letter
    for (int step = 0; step < n; ++step) {
        std::array<std::uint64_t, 3> next{0, 0, 0};
        for (const auto& e : g.edges) next[e.from - 1] += cnt[e.to - 1];
        cnt = next;
    }
    return cnt[i - 1];
}

} // namespace rauzy
