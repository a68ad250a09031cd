#pragma once

#include <gmpxx.h>

#include <array>
#include <string>
#include <vector>

#include "rauzy/params.hpp"

namespace rauzy {

/// Element of Q[x]/(m(x)) for the quartic m = p_{a,b}; coefficients in the power basis.
using QElem = std::array<mpq_class, 4>;

/// Exact arithmetic in Q(lambda), lambda the largest root of
/// x^4 + (1-b) x^3 + (b-a) x^2 - (a+1) x - 1 (irreducible for every a >= b >= 1).
class NumberField {
public:
    explicit NumberField(const Params& p);

    /// Coefficients m0..m3 of the monic modulus x^4 + m3 x^3 + m2 x^2 + m1 x + m0.
    const std::array<long long, 4>& modulus() const { return m_; }

    QElem from_int(long long n) const;
    QElem from_rational(const mpq_class& q) const;
    QElem generator() const;  // lambda
    QElem add(const QElem& x, const QElem& y) const;
    QElem sub(const QElem& x, const QElem& y) const;
    QElem mul(const QElem& x, const QElem& y) const;
    QElem inv(const QElem& x) const;
    QElem div(const QElem& x, const QElem& y) const { return mul(x, inv(y)); }
    QElem pow(const QElem& x, int k) const;
    static bool is_zero(const QElem& x);
    /// Numeric value at a given approximation of lambda.
    static long double eval(const QElem& x, long double lambda);
    static std::string to_string(const QElem& x);

private:
    std::array<long long, 4> m_;
};

} // namespace rauzy
