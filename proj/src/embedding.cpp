#include "rauzy/embedding.hpp"

#include <gmpxx.h>

#include <cfloat>
#include <cmath>
#include <cstdlib>
#include <string>

namespace rauzy {

namespace {

Real cubic(const Params& p, Real x) { return ((x - p.a) * x - p.b) * x - 1; }

int precision_from_env()
{
    const char* env = std::getenv("RAUZY_PRECISION_BITS");
    if (!env || !*env) return LDBL_MANT_DIG;
    char* end = nullptr;
    long bits = std::strtol(env, &end, 10);
    if (*end != '\0' || bits < 53)
        throw UsageError(std::string("RAUZY_PRECISION_BITS must be an integer >= 53, got '") + env + "'");
    if (bits > LDBL_MANT_DIG)
        throw UsageError("RAUZY_PRECISION_BITS above " + std::to_string(LDBL_MANT_DIG) +
                         " is not supported by this build");
    return static_cast<int>(bits);
}

} // namespace

Real dominant_root(const Params& p)
{
    // f(a) = -ab - 1 < 0 < f(a + 2)
    Real lo = p.a, hi = p.a + 2;
    for (int i = 0; i < 200 && hi - lo > 1e-6L; ++i) {
        Real mid = (lo + hi) / 2;
        (cubic(p, mid) < 0 ? lo : hi) = mid;
    }
    Real x = (lo + hi) / 2;
    for (int i = 0; i < 50; ++i) {
        Real d = (3 * x - 2 * p.a) * x - p.b;
        Real step = cubic(p, x) / d;
        x -= step;
        if (std::fabs(step) <= LDBL_EPSILON * x) break;
    }
    return x;
}

Embedding::Embedding(const Params& p) : p_(p), beta_(dominant_root(p))
{
    precision_bits_ = precision_from_env();
    tol_ = std::max(1e-18L, std::ldexp(1.0L, -(precision_bits_ - 4)));

    // x^3 - a x^2 - b x - 1 = (x - beta)(x^2 + c1 x + c0)
    const Real c1 = beta_ - p.a;
    const Real c0 = 1 / beta_;
    const Real disc = c1 * c1 - 4 * c0;
    if (disc < 0) {
        kind_ = ConjKind::ComplexPair;
        alpha1_ = Cplx(-c1 / 2, std::sqrt(-disc) / 2);
        alpha2_ = std::conj(alpha1_);
    } else {
        kind_ = ConjKind::RealPair;
        const Real s = std::sqrt(disc);
        // numerically stable pair: larger magnitude root first
        const Real q = -(c1 + (c1 >= 0 ? s : -s)) / 2;
        Real r1 = q, r2 = c0 / q;
        if (std::fabs(r1) < std::fabs(r2)) std::swap(r1, r2);
        alpha1_ = Cplx(r1, 0);
        alpha2_ = Cplx(r2, 0);
    }
    if ((discriminant_numerator() >= 0) != (kind_ == ConjKind::ComplexPair))
        throw VerificationError("conjugate kind disagrees with the sign of D");

    bound_ = 2 * p.a * lattice_norm({1, 0, 0}) / (1 - max_abs_alpha());
}

Real Embedding::max_abs_alpha() const { return std::max(std::abs(alpha1_), std::abs(alpha2_)); }

long long Embedding::discriminant_numerator() const
{
    const long long a = p_.a, b = p_.b;
    return 27 - 4 * b * b * b + 18 * a * b - a * a * b * b + 4 * a * a * a;
}

std::array<Cplx, 3> Embedding::left_eigenvector(Cplx theta) const
{
    return {theta, theta * theta - Real(p_.a) * theta, Cplx(1, 0)};
}

std::array<Real, 3> Embedding::v_beta() const { return {beta_, beta_ * beta_ - p_.a * beta_, 1}; }

EigenCoords Embedding::eigen_coords(const LatticeVec& x) const
{
    const auto v1 = left_eigenvector(alpha1_);
    const auto v2 = left_eigenvector(alpha2_);
    EigenCoords e;
    for (int k = 0; k < 3; ++k) {
        e.z1 += Real(x[k]) * v1[k];
        e.z2 += Real(x[k]) * v2[k];
    }
    return e;
}

PlanePoint Embedding::to_plane(const EigenCoords& e) const
{
    if (kind_ == ConjKind::ComplexPair) return {e.z1.real(), e.z1.imag()};
    return {e.z1.real(), e.z2.real()};
}

EigenCoords Embedding::contract_pow(const EigenCoords& e, int k) const
{
    return {std::pow(alpha1_, k) * e.z1, std::pow(alpha2_, k) * e.z2};
}

PlanePoint Embedding::contraction_apply(const PlanePoint& q) const
{
    if (kind_ == ConjKind::ComplexPair) {
        Cplx z = Cplx(q.u, q.v) * alpha1_;
        return {z.real(), z.imag()};
    }
    return {alpha1_.real() * q.u, alpha2_.real() * q.v};
}

Real Embedding::lattice_norm(const LatticeVec& x) const { return norm(eigen_coords(x)); }

Real Embedding::plane_norm(const PlanePoint& q) const
{
    if (kind_ == ConjKind::ComplexPair) return std::hypot(q.u, q.v);
    return std::max(std::fabs(q.u), std::fabs(q.v));
}

Real Embedding::beta_pairing(const LatticeVec& x) const
{
    const auto v = v_beta();
    return x[0] * v[0] + x[1] * v[1] + x[2] * v[2];
}

int exact_sign_in_beta(const Params& p, std::int64_t c2, std::int64_t c1, std::int64_t c0)
{
    if (c2 == 0 && c1 == 0 && c0 == 0) return 0;
    // beta is irrational of degree 3, so a nonzero quadratic never vanishes at it
    auto f = [&](const mpq_class& x) -> mpq_class { return ((x - p.a) * x - p.b) * x - 1; };
    auto q = [&](const mpq_class& x) -> mpq_class { return (mpq_class(c2) * x + c1) * x + c0; };
    auto dq = [&](const mpq_class& x) -> mpq_class { return mpq_class(2 * c2) * x + c1; };
    mpq_class lo(p.a), hi(p.a + 2);
    for (int it = 0; it < 4000; ++it) {
        const mpq_class qlo = q(lo);
        mpq_class slope = abs(dq(lo));
        mpq_class s2 = abs(dq(hi));
        if (s2 > slope) slope = s2;
        if (abs(qlo) > slope * (hi - lo)) return sgn(qlo);
        mpq_class mid = (lo + hi) / 2;
        (sgn(f(mid)) < 0 ? lo : hi) = mid;
    }
    throw VerificationError("exact sign evaluation did not terminate");
}

SrsTest Embedding::gamma_srs_test(const LatticeVec& x, Letter j) const
{
    const Real val = beta_pairing(x);
    const auto vb = v_beta();
    const Real upper = vb[j - 1];
    const Real scale = 1 + (std::llabs(x[0]) + std::llabs(x[1]) + std::llabs(x[2])) * beta_ * beta_;
    const Real eps = tol_ * scale;
    SrsTest r;
    int lower_sign, upper_sign;  // sign of val, sign of val - upper
    if (std::fabs(val) > eps) {
        lower_sign = val > 0 ? 1 : -1;
    } else {
        r.borderline = true;
        lower_sign = exact_sign_in_beta(p_, x[1], x[0] - p_.a * x[1], x[2]);
    }
    if (std::fabs(val - upper) > eps) {
        upper_sign = val > upper ? 1 : -1;
    } else {
        r.borderline = true;
        std::int64_t c2 = x[1], c1 = x[0] - p_.a * x[1], c0 = x[2];
        if (j == 1) c1 -= 1;
        if (j == 2) { c2 -= 1; c1 += p_.a; }
        if (j == 3) c0 -= 1;
        upper_sign = exact_sign_in_beta(p_, c2, c1, c0);
    }
    r.member = lower_sign >= 0 && upper_sign < 0;
    return r;
}

std::vector<PlanePoint> tile_points(const Embedding& emb, Letter i, int n)
{
    const auto g = prefix_suffix_graph(emb.params());
    const EigenCoords e1 = emb.eigen_coords({1, 0, 0});
    std::vector<PlanePoint> out;
    struct Frame {
        Letter letter;
        int depth;
        EigenCoords sum;
        EigenCoords scale;  // h^depth pi(e1)
    };
    std::vector<Frame> stack{{i, 0, {}, e1}};
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (f.depth == n) {
            out.push_back(emb.to_plane(f.sum));
            continue;
        }
        const auto edges = g.out(f.letter);
        for (auto it = edges.rbegin(); it != edges.rend(); ++it)
            stack.push_back({it->to, f.depth + 1, f.sum + Real(it->prefix) * f.scale, emb.contract(f.scale)});
    }
    return out;
}

} // namespace rauzy
