#include <doctest.h>

#include <random>

#include "rauzy/contact_graph.hpp"
#include "rauzy/numberfield.hpp"

using namespace rauzy;

namespace {

QElem random_elem(std::mt19937& rng)
{
    std::uniform_int_distribution<int> d(-9, 9), q(1, 5);
    QElem x;
    for (auto& c : x) c = mpq_class(d(rng), q(rng));
    for (auto& c : x) c.canonicalize();
    return x;
}

bool equal(const QElem& x, const QElem& y)
{
    for (int k = 0; k < 4; ++k)
        if (x[k] != y[k]) return false;
    return true;
}

} // namespace

TEST_CASE("the generator is a root of the modulus")
{
    for (const Params& p : {Params(1, 1), Params(4, 1), Params(5, 3), Params(12, 12)}) {
        const NumberField K(p);
        const QElem l = K.generator();
        const auto& m = K.modulus();
        QElem v = K.pow(l, 4);
        for (int k = 0; k < 4; ++k) v = K.add(v, K.mul(K.from_int(m[k]), K.pow(l, k)));
        CHECK(NumberField::is_zero(v));
        CHECK(double(NumberField::eval(l, perron_root(p))) == doctest::Approx(double(perron_root(p))));
    }
}

TEST_CASE("field axioms on random elements")
{
    std::mt19937 rng(3);
    const NumberField K(Params(3, 2));
    for (int k = 0; k < 40; ++k) {
        const QElem x = random_elem(rng), y = random_elem(rng), z = random_elem(rng);
        CHECK(equal(K.mul(x, K.add(y, z)), K.add(K.mul(x, y), K.mul(x, z))));
        CHECK(equal(K.mul(x, y), K.mul(y, x)));
        CHECK(equal(K.sub(K.add(x, y), y), x));
        if (!NumberField::is_zero(x)) CHECK(equal(K.mul(x, K.inv(x)), K.from_int(1)));
    }
}

TEST_CASE("evaluation is a ring homomorphism")
{
    std::mt19937 rng(5);
    const Params p(2, 2);
    const NumberField K(p);
    const long double l = perron_root(p);
    for (int k = 0; k < 20; ++k) {
        const QElem x = random_elem(rng), y = random_elem(rng);
        const double lhs = double(NumberField::eval(K.mul(x, y), l));
        const double rhs = double(NumberField::eval(x, l) * NumberField::eval(y, l));
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("string form")
{
    const NumberField K(Params(1, 1));
    CHECK(NumberField::to_string(K.from_rational(mpq_class(1, 2))) == "1/2 0 0 0");
}
