#pragma once

#include <array>
#include <complex>
#include <vector>

#include "rauzy/substitution.hpp"

namespace rauzy {

using Real = long double;
using Cplx = std::complex<Real>;

enum class ConjKind { ComplexPair, RealPair };

/// Coordinates (u, v) of a point of the contracting plane in the eigenbasis.
struct PlanePoint {
    Real u = 0;
    Real v = 0;
};

/// Pair of pairings (<x, v_alpha1>, <x, v_alpha2>); h acts diagonally on it.
struct EigenCoords {
    Cplx z1{0, 0};
    Cplx z2{0, 0};

    EigenCoords& operator+=(const EigenCoords& o)
    {
        z1 += o.z1;
        z2 += o.z2;
        return *this;
    }
    friend EigenCoords operator+(EigenCoords x, const EigenCoords& y) { return x += y; }
    friend EigenCoords operator-(const EigenCoords& x, const EigenCoords& y) { return {x.z1 - y.z1, x.z2 - y.z2}; }
    friend EigenCoords operator*(Real s, const EigenCoords& x) { return {s * x.z1, s * x.z2}; }
};

/// Result of a Gamma_srs test; `borderline` marks values that needed exact evaluation.
struct SrsTest {
    bool member = false;
    bool borderline = false;
};

Real dominant_root(const Params& p);

/// Numeric data of the cubic Pisot number beta and its conjugates.
class Embedding {
public:
    explicit Embedding(const Params& p);

    const Params& params() const { return p_; }
    Real beta() const { return beta_; }
    ConjKind kind() const { return kind_; }
    Cplx alpha1() const { return alpha1_; }
    Cplx alpha2() const { return alpha2_; }
    Real max_abs_alpha() const;
    /// (27 - 4b^3 + 18ab - a^2 b^2 + 4a^3) / 108, exact numerator over 108.
    long long discriminant_numerator() const;
    Real discriminant() const { return static_cast<Real>(discriminant_numerator()) / 108; }
    int precision_bits() const { return precision_bits_; }
    Real tol() const { return tol_; }

    /// (theta, theta^2 - a theta, 1)
    std::array<Cplx, 3> left_eigenvector(Cplx theta) const;
    std::array<Real, 3> v_beta() const;

    EigenCoords eigen_coords(const LatticeVec& x) const;
    PlanePoint to_plane(const EigenCoords& e) const;
    PlanePoint plane_coords(const LatticeVec& x) const { return to_plane(eigen_coords(x)); }
    EigenCoords contract(const EigenCoords& e) const { return {alpha1_ * e.z1, alpha2_ * e.z2}; }
    EigenCoords contract_pow(const EigenCoords& e, int k) const;
    PlanePoint contraction_apply(const PlanePoint& q) const;

    /// max(|<x,v_alpha1>|, |<x,v_alpha2>|)
    Real lattice_norm(const LatticeVec& x) const;
    Real norm(const EigenCoords& e) const { return std::max(std::abs(e.z1), std::abs(e.z2)); }
    Real plane_norm(const PlanePoint& q) const;

    /// 2 a ||pi(e1)|| / (1 - max|alpha|)
    Real candidate_bound() const { return bound_; }

    Real beta_pairing(const LatticeVec& x) const;
    SrsTest gamma_srs_test(const LatticeVec& x, Letter j) const;
    bool gamma_srs_member(const LatticeVec& x, Letter j) const { return gamma_srs_test(x, j).member; }

private:
    Params p_;
    Real beta_;
    ConjKind kind_;
    Cplx alpha1_, alpha2_;
    Real bound_;
    int precision_bits_;
    Real tol_;
};

/// Sign of c2 beta^2 + c1 beta + c0, decided exactly.
int exact_sign_in_beta(const Params& p, std::int64_t c2, std::int64_t c1, std::int64_t c0);

/// Points sum_{k<n} h^k pi l(p_k) over all length-n prefix-suffix walks from letter i.
std::vector<PlanePoint> tile_points(const Embedding& emb, Letter i, int n);

} // namespace rauzy
