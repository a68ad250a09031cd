#include "rauzy/numberfield.hpp"

#include <utility>

namespace rauzy {

namespace {

using Poly = std::vector<mpq_class>;  // low degree first

void trim(Poly& p)
{
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// quotient and remainder of a / b over Q
std::pair<Poly, Poly> divmod(Poly a, const Poly& b)
{
    trim(a);
    Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    while (a.size() >= b.size() && !a.empty()) {
        const std::size_t shift = a.size() - b.size();
        mpq_class c = a.back() / b.back();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
        trim(a);
    }
    return {q, a};
}

Poly pmul(const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

Poly psub(Poly a, const Poly& b)
{
    if (a.size() < b.size()) a.resize(b.size(), mpq_class(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

} // namespace

NumberField::NumberField(const Params& p) : m_{-1, -(p.a + 1), p.b - p.a, 1 - p.b} {}

QElem NumberField::from_int(long long n) const { return {mpq_class(static_cast<long>(n)), 0, 0, 0}; }

QElem NumberField::from_rational(const mpq_class& q) const { return {q, 0, 0, 0}; }

QElem NumberField::generator() const { return {0, 1, 0, 0}; }

QElem NumberField::add(const QElem& x, const QElem& y) const
{
    QElem r;
    for (int i = 0; i < 4; ++i) r[i] = x[i] + y[i];
    return r;
}

QElem NumberField::sub(const QElem& x, const QElem& y) const
{
    QElem r;
    for (int i = 0; i < 4; ++i) r[i] = x[i] - y[i];
    return r;
}

QElem NumberField::mul(const QElem& x, const QElem& y) const
{
    std::array<mpq_class, 7> t;
    for (auto& c : t) c = 0;
    for (int i = 0; i < 4; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (int j = 0; j < 4; ++j) t[i + j] += x[i] * y[j];
    }
    // x^4 = -(m3 x^3 + m2 x^2 + m1 x + m0)
    for (int d = 6; d >= 4; --d) {
        if (sgn(t[d]) == 0) continue;
        for (int k = 0; k < 4; ++k) t[d - 4 + k] -= t[d] * static_cast<long>(m_[k]);
        t[d] = 0;
    }
    return {t[0], t[1], t[2], t[3]};
}

QElem NumberField::inv(const QElem& x) const
{
    if (is_zero(x)) throw std::domain_error("division by zero in Q(lambda)");
    // extended Euclid: s x + t m = g, g a nonzero constant since m is irreducible
    Poly m{mpq_class(static_cast<long>(m_[0])), mpq_class(static_cast<long>(m_[1])), mpq_class(static_cast<long>(m_[2])), mpq_class(static_cast<long>(m_[3])), mpq_class(1)};
    Poly r0 = m, r1(x.begin(), x.end());
    trim(r1);
    Poly s0{}, s1{mpq_class(1)};
    while (r1.size() > 1) {
        auto [q, r] = divmod(r0, r1);
        Poly s = psub(s0, pmul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r1.empty()) throw std::domain_error("modulus is reducible");
    QElem out{0, 0, 0, 0};
    auto [q, rem] = divmod(s1, m);
    for (std::size_t i = 0; i < rem.size() && i < 4; ++i) out[i] = rem[i] / r1[0];
    return out;
}

QElem NumberField::pow(const QElem& x, int k) const
{
    QElem base = k < 0 ? inv(x) : x;
    unsigned e = static_cast<unsigned>(k < 0 ? -k : k);
    QElem r = from_int(1);
    while (e) {
        if (e & 1u) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

bool NumberField::is_zero(const QElem& x)
{
    for (const auto& c : x)
        if (sgn(c) != 0) return false;
    return true;
}

long double NumberField::eval(const QElem& x, long double lambda)
{
    long double r = 0;
    for (int i = 3; i >= 0; --i) r = r * lambda + x[i].get_d();
    return r;
}

std::string NumberField::to_string(const QElem& x)
{
    std::string s;
    for (int i = 0; i < 4; ++i) {
        if (i) s += ' ';
        s += x[i].get_str();
    }
    return s;
}

} // namespace rauzy
