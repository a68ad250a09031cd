#include <doctest.h>

#include <cmath>
#include <random>

#include "rauzy/embedding.hpp"

using namespace rauzy;

namespace {

/// Largest real root of x^3 - a x^2 - b x - 1 by bisection.
double beta_oracle(int a, int b)
{
    auto f = [&](double x) { return ((x - a) * x - b) * x - 1; };
    double lo = 1, hi = a + b + 2;
    for (int k = 0; k < 200; ++k) {
        const double m = (lo + hi) / 2;
        (f(m) > 0 ? hi : lo) = m;
    }
    return lo;
}

} // namespace

TEST_CASE("dominant root against bisection and frozen values")
{
    CHECK(double(dominant_root(Params(1, 1))) == doctest::Approx(1.839286755214161).epsilon(1e-14));
    for (int a = 1; a <= 12; ++a)
        for (int b = 1; b <= a; ++b) CHECK(double(dominant_root(Params(a, b))) == doctest::Approx(beta_oracle(a, b)).epsilon(1e-13));
}

TEST_CASE("conjugates: Vieta relations and contraction")
{
    for (int a = 1; a <= 10; ++a)
        for (int b = 1; b <= a; ++b) {
            const Embedding emb(Params(a, b));
            const Cplx s = Cplx(emb.beta()) + emb.alpha1() + emb.alpha2();
            const Cplx prod = emb.beta() * emb.alpha1() * emb.alpha2();
            CHECK(double(std::abs(s - Cplx(a))) < 1e-15);
            CHECK(double(std::abs(prod - Cplx(1))) < 1e-15);
            CHECK(emb.max_abs_alpha() < 1);
            // complex pair exactly when the discriminant expression is positive
            CHECK((emb.kind() == ConjKind::ComplexPair) == (emb.discriminant_numerator() > 0));
        }
    CHECK(Embedding(Params(1, 1)).kind() == ConjKind::ComplexPair);
    CHECK(Embedding(Params(10, 7)).kind() == ConjKind::RealPair);
    CHECK(double(Embedding(Params(1, 1)).max_abs_alpha()) == doctest::Approx(0.7373527057603276).epsilon(1e-13));
    CHECK(double(Embedding(Params(10, 7)).max_abs_alpha()) == doctest::Approx(0.462329).epsilon(1e-5));
}

TEST_CASE("left eigenvectors")
{
    const Params p(5, 3);
    const Embedding emb(p);
    const Mat3 m = incidence_matrix(p);
    for (Cplx th : {Cplx(emb.beta()), emb.alpha1(), emb.alpha2()}) {
        const auto v = emb.left_eigenvector(th);
        for (int j = 0; j < 3; ++j) {
            Cplx vm = 0;
            for (int i = 0; i < 3; ++i) vm += v[i] * Real(m[i][j]);
            CHECK(double(std::abs(vm - th * v[j])) < 1e-12);
        }
    }
    for (auto c : emb.v_beta()) CHECK(c > 0);
}

TEST_CASE("the contraction is M on the contracting plane")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-20, 20);
    for (const Params& p : {Params(1, 1), Params(4, 2), Params(10, 7)}) {
        const Embedding emb(p);
        const Mat3 m = incidence_matrix(p);
        for (int k = 0; k < 50; ++k) {
            const LatticeVec x{d(rng), d(rng), d(rng)};
            const EigenCoords lhs = emb.eigen_coords(m * x);
            const EigenCoords rhs = emb.contract(emb.eigen_coords(x));
            CHECK(double(emb.norm(lhs - rhs)) < 1e-12);
            const EigenCoords c3 = emb.contract_pow(emb.eigen_coords(x), 3);
            CHECK(double(emb.norm(c3 - emb.eigen_coords(m * (m * (m * x))))) < 1e-10);
        }
    }
}

TEST_CASE("exact sign in Z[beta] agrees with floating evaluation away from zero")
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(-30, 30);
    for (const Params& p : {Params(1, 1), Params(5, 3), Params(9, 9)}) {
        const long double beta = dominant_root(p);
        for (int k = 0; k < 200; ++k) {
            const int c2 = d(rng), c1 = d(rng), c0 = d(rng);
            const long double v = (c2 * beta + c1) * beta + c0;
            if (std::fabs(double(v)) < 1e-9) continue;
            CHECK(exact_sign_in_beta(p, c2, c1, c0) == (v > 0 ? 1 : -1));
        }
        CHECK(exact_sign_in_beta(p, 0, 0, 0) == 0);
    }
}

TEST_CASE("Gamma_srs membership")
{
    const Embedding emb(Params(1, 1));
    for (Letter j = 1; j <= 3; ++j) CHECK(emb.gamma_srs_member({0, 0, 0}, j));
    // <x, v_beta> = <e_j, v_beta> is excluded
    for (Letter j = 1; j <= 3; ++j) {
        LatticeVec e{0, 0, 0};
        e[j - 1] = 1;
        const auto t = emb.gamma_srs_test(e, j);
        CHECK_FALSE(t.member);
    }
    CHECK_FALSE(emb.gamma_srs_member({-1, 0, 0}, 1));
}

TEST_CASE("tile point counts follow walk counts")
{
    const Params p(2, 1);
    const Embedding emb(p);
    for (Letter i = 1; i <= 3; ++i)
        for (int n = 0; n <= 5; ++n) CHECK(tile_points(emb, i, n).size() == gamma_walk_count(p, i, n));
    CHECK(tile_points(emb, 1, 0).size() == 1);
}
