#include "rauzy/parametrization.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace rauzy {

namespace {

int resolve(const OrderedGraph& g, int s, int token)
{
    const int omax = g.states[s].omax();
    const int o = token == kMaxOrder ? omax : token;
    if (o < 1 || o > omax)
        throw UsageError("order " + std::to_string(token) + " does not exist at state " + g.states[s].name);
    return o;
}

mpf_class to_mpf(const QElem& x, const mpf_class& lambda, int bits)
{
    mpf_class r(0, bits);
    for (int i = 3; i >= 0; --i) r = r * lambda + mpf_class(x[i], bits);
    return r;
}

std::size_t lasso_window(const Lasso& x, const Lasso& y)
{
    return std::max(x.pre.size(), y.pre.size()) + std::lcm(x.cycle.size(), y.cycle.size());
}

int edge_at(const Lasso& l, std::size_t k)
{
    if (k < l.pre.size()) return l.pre[k];
    return l.cycle[(k - l.pre.size()) % l.cycle.size()];
}

} // namespace

Lasso normalize(const OrderedGraph& g, const Walk& w)
{
    if (w.start < 0 || w.start >= g.state_count()) throw UsageError("walk starts at an unknown state");
    if (w.period.empty()) throw UsageError("walk period must be nonempty");
    const std::size_t n0 = w.orders.size(), q = w.period.size();
    std::vector<int> edges;
    std::map<std::pair<int, std::size_t>, std::size_t> seen;
    int s = w.start;
    for (std::size_t k = 0;; ++k) {
        if (k >= n0) {
            const auto key = std::make_pair(s, (k - n0) % q);
            auto [it, fresh] = seen.emplace(key, k);
            if (!fresh) {
                Lasso l;
                l.start = w.start;
                l.pre.assign(edges.begin(), edges.begin() + it->second);
                l.cycle.assign(edges.begin() + it->second, edges.end());
                return l;
            }
        }
        const int token = k < n0 ? w.orders[k] : w.period[(k - n0) % q];
        const int e = g.states[s].out[resolve(g, s, token) - 1];
        edges.push_back(e);
        s = g.edges[e].to;
    }
}

std::vector<int> expand_orders(const OrderedGraph& g, const Walk& w, int n)
{
    const Lasso l = normalize(g, w);
    std::vector<int> out;
    for (int k = 0; k < n; ++k) out.push_back(g.edges[edge_at(l, k)].order);
    return out;
}

DigitSeq left_digits(const OrderedGraph& g, const Lasso& l)
{
    DigitSeq d;
    for (int e : l.pre) d.pre.push_back(g.edges[e].p1);
    for (int e : l.cycle) d.period.push_back(g.edges[e].p1);
    return d;
}

DigitSeq right_digits(const OrderedGraph& g, const Lasso& l)
{
    DigitSeq d;
    for (int e : l.pre) d.pre.push_back(g.edges[e].p2);
    for (int e : l.cycle) d.period.push_back(g.edges[e].p2);
    return d;
}

int state_at(const OrderedGraph& g, const Lasso& l, std::size_t k)
{
    return k == 0 ? l.start : g.edges[edge_at(l, k - 1)].to;
}

int compare_lex(const OrderedGraph& g, const Walk& x, const Walk& y)
{
    if (x.start != y.start) return x.start < y.start ? -1 : 1;
    const Lasso lx = normalize(g, x), ly = normalize(g, y);
    const std::size_t n = lasso_window(lx, ly);
    for (std::size_t k = 0; k < n; ++k) {
        const int ox = g.edges[edge_at(lx, k)].order, oy = g.edges[edge_at(ly, k)].order;
        if (ox != oy) return ox < oy ? -1 : 1;
    }
    return 0;
}

ProjectedWalk project_P(const OrderedGraph& g, const Walk& w)
{
    const Lasso l = normalize(g, w);
    ProjectedWalk p;
    for (std::size_t k = 0; k <= l.pre.size() + l.cycle.size(); ++k) p.states.push_back(state_at(g, l, k));
    p.left = left_digits(g, l);
    p.right = right_digits(g, l);
    return p;
}

Numeration::Numeration(const OrderedGraph& g, const PerronData& d, int mp_bits)
    : g_(g), K_(g.params), lambda_(d.lambda), bits_(mp_bits)
{
    const int r = g.state_count();
    long double total = 0;
    for (int s = 0; s < g.s_max; ++s) total += d.u[s];
    for (int s = 0; s < r; ++s) w_.push_back(d.u[s] / total);

    wq_ = exact_perron_vector(g, K_);
    QElem qtotal = K_.from_int(0);
    for (int s = 0; s < g.s_max; ++s) qtotal = K_.add(qtotal, wq_[s]);
    const QElem qinv = K_.inv(qtotal);
    for (auto& x : wq_) x = K_.mul(x, qinv);
    for (int s = 0; s < r; ++s)
        if (std::fabs(NumberField::eval(wq_[s], lambda_) - w_[s]) > 1e-12L)
            throw VerificationError("exact and numeric Perron vectors disagree");

    lambda_mp_ = mpf_class(static_cast<double>(lambda_), bits_);
    const Params& p = g.params;
    for (int it = 0; it < 12; ++it) {
        const mpf_class& x = lambda_mp_;
        mpf_class px = (((x + (1 - p.b)) * x + (p.b - p.a)) * x - (p.a + 1)) * x - 1;
        mpf_class dx = ((4 * x + 3 * (1 - p.b)) * x + 2 * (p.b - p.a)) * x - (p.a + 1);
        lambda_mp_ = x - px / dx;
    }

    QElem acc = K_.from_int(0);
    for (int s = 0; s < r; ++s) {
        off_.push_back(s < g.s_max ? NumberField::eval(acc, lambda_) : 0);
        offq_.push_back(s < g.s_max ? acc : K_.from_int(0));
        if (s < g.s_max) acc = K_.add(acc, wq_[s]);
        std::vector<QElem> row{K_.from_int(0)};
        for (int o = 1; o < g.states[s].omax(); ++o) row.push_back(K_.add(row.back(), wq_[g.edge(s, o).to]));
        phi0q_.push_back(row);
        std::vector<long double> rowf;
        std::vector<mpf_class> rowm;
        for (const auto& x : row) {
            rowf.push_back(NumberField::eval(x, lambda_));
            rowm.push_back(to_mpf(x, lambda_mp_, bits_));
        }
        phi0_.push_back(rowf);
        phi0_mp_.push_back(rowm);
        w_mp_.push_back(to_mpf(wq_[s], lambda_mp_, bits_));
        off_mp_.push_back(to_mpf(offq_.back(), lambda_mp_, bits_));
    }
}

long double Numeration::min_weight() const { return *std::min_element(w_.begin(), w_.end()); }

long double Numeration::phi(const Walk& w) const
{
    if (!g_.is_starting(w.start)) throw UsageError("walk does not start at a starting state");
    const Lasso l = normalize(g_, w);
    const long double inv = 1 / lambda_;
    long double t = off_[w.start], scale = 1;
    int s = l.start;
    for (int e : l.pre) {
        scale *= inv;
        t += scale * phi0_[s][g_.edges[e].order - 1];
        s = g_.edges[e].to;
    }
    long double tail = 0, cs = 1;
    for (int e : l.cycle) {
        cs *= inv;
        tail += cs * phi0_[s][g_.edges[e].order - 1];
        s = g_.edges[e].to;
    }
    return t + scale * tail / (1 - cs);
}

mpf_class Numeration::phi_mp(const Walk& w) const
{
    if (!g_.is_starting(w.start)) throw UsageError("walk does not start at a starting state");
    const Lasso l = normalize(g_, w);
    const mpf_class inv = mpf_class(1, bits_) / lambda_mp_;
    mpf_class t(off_mp_[w.start], bits_), scale(1, bits_);
    int s = l.start;
    for (int e : l.pre) {
        scale *= inv;
        t += scale * phi0_mp_[s][g_.edges[e].order - 1];
        s = g_.edges[e].to;
    }
    mpf_class tail(0, bits_), cs(1, bits_);
    for (int e : l.cycle) {
        cs *= inv;
        tail += cs * phi0_mp_[s][g_.edges[e].order - 1];
        s = g_.edges[e].to;
    }
    return t + scale * tail / (1 - cs);
}

QElem Numeration::phi_exact(const Walk& w) const
{
    if (!g_.is_starting(w.start)) throw UsageError("walk does not start at a starting state");
    const Lasso l = normalize(g_, w);
    const QElem inv = K_.inv(K_.generator());
    QElem t = offq_[w.start], scale = K_.from_int(1);
    int s = l.start;
    for (int e : l.pre) {
        scale = K_.mul(scale, inv);
        t = K_.add(t, K_.mul(scale, phi0q_[s][g_.edges[e].order - 1]));
        s = g_.edges[e].to;
    }
    QElem tail = K_.from_int(0), cs = K_.from_int(1);
    for (int e : l.cycle) {
        cs = K_.mul(cs, inv);
        tail = K_.add(tail, K_.mul(cs, phi0q_[s][g_.edges[e].order - 1]));
        s = g_.edges[e].to;
    }
    return K_.add(t, K_.mul(scale, K_.div(tail, K_.sub(K_.from_int(1), cs))));
}

Walk Numeration::phi_inverse(const mpf_class& t, int n) const
{
    if (t < 0 || t > 1) throw UsageError("address must lie in [0, 1]");
    mpf_class eps(1, bits_);
    mpf_div_2exp(eps.get_mpf_t(), eps.get_mpf_t(), bits_ - 8);
    Walk w;
    int s = 0;
    for (int k = g_.s_max - 1; k >= 0; --k)
        if (off_mp_[k] <= t + eps) {
            s = k;
            break;
        }
    w.start = s;
    mpf_class r(t - off_mp_[s], bits_);
    if (r < 0) r = 0;
    if (r > w_mp_[s]) r = w_mp_[s];
    for (int k = 0; k < n; ++k) {
        eps *= lambda_mp_;
        r *= lambda_mp_;
        const auto& row = phi0_mp_[s];
        int o = 1;
        for (int c = static_cast<int>(row.size()); c >= 1; --c)
            if (row[c - 1] <= r + eps) {
                o = c;
                break;
            }
        w.orders.push_back(o);
        const int to = g_.edge(s, o).to;
        r -= row[o - 1];
        if (r < 0) r = 0;
        if (r > w_mp_[to]) r = w_mp_[to];
        s = to;
    }
    w.period = {r * 2 <= w_mp_[s] ? 1 : kMaxOrder};
    return w;
}

Walk Numeration::phi_inverse(long double t, int n) const
{
    return phi_inverse(mpf_class(static_cast<double>(t), bits_) + mpf_class(static_cast<double>(t - static_cast<double>(t)), bits_), n);
}

EigenCoords psi(const Embedding& emb, const DigitSeq& d)
{
    const EigenCoords base = emb.eigen_coords(prefix_vec(1));
    const Cplx a1 = emb.alpha1(), a2 = emb.alpha2();
    auto series = [](const std::vector<int>& digits, Cplx a, Cplx& power) {
        Cplx s = 0;
        for (int p : digits) {
            s += Real(p) * power;
            power *= a;
        }
        return s;
    };
    Cplx pw1 = 1, pw2 = 1;
    Cplx s1 = series(d.pre, a1, pw1), s2 = series(d.pre, a2, pw2);
    Cplx c1 = 1, c2 = 1;
    const Cplx t1 = series(d.period, a1, c1), t2 = series(d.period, a2, c2);
    s1 += pw1 * t1 / (Real(1) - c1);
    s2 += pw2 * t2 / (Real(1) - c2);
    return {base.z1 * s1, base.z2 * s2};
}

EigenCoords psi(const Embedding& emb, const OrderedGraph& g, const Walk& w)
{
    return psi(emb, left_digits(g, normalize(g, w)));
}

BoundaryPoint boundary_point(const Embedding& emb, const Numeration& num, const mpf_class& t, int depth)
{
    BoundaryPoint b;
    b.walk = num.phi_inverse(t, depth);
    b.coords = psi(emb, num.graph(), b.walk);
    b.point = emb.to_plane(b.coords);
    return b;
}

BoundaryPoint boundary_point(const Embedding& emb, const Numeration& num, long double t, int depth)
{
    BoundaryPoint b;
    b.walk = num.phi_inverse(t, depth);
    b.coords = psi(emb, num.graph(), b.walk);
    b.point = emb.to_plane(b.coords);
    return b;
}

std::vector<IdentPair> identification_pairs(const OrderedGraph& g)
{
    std::vector<IdentPair> out;
    for (int s = 0; s + 1 < g.s_max; ++s)
        out.push_back({"cond1", "S=" + std::to_string(s + 1), {s, {}, {kMaxOrder}}, {s + 1, {}, {1}}, 0, {}});
    out.push_back({"cond2", "S=" + std::to_string(g.s_max), {g.s_max - 1, {}, {kMaxOrder}}, {0, {}, {1}}, 0, {}});
    for (int s = 0; s < g.state_count(); ++s)
        for (int o = 1; o < g.states[s].omax(); ++o)
            out.push_back({"cond3", g.states[s].name + " o=" + std::to_string(o), {s, {o + 1}, {1}},
                           {s, {o}, {kMaxOrder}}, 0, {}});
    return out;
}

bool certify_equal(const Embedding& emb, const OrderedGraph& g, const BoundaryGraph& graph, const Walk& x,
                   const Walk& y)
{
    const Lasso lx = normalize(g, x), ly = normalize(g, y);
    DigitSeq dx = left_digits(g, lx), dy = left_digits(g, ly);
    const std::size_t n = lasso_window(lx, ly);
    auto letter = [&](const Lasso& l, std::size_t k) { return g.states[state_at(g, l, k)].vertex.i; };
    std::size_t k = 0;
    while (k < n && dx.at(k) == dy.at(k) && letter(lx, k) == letter(ly, k)) ++k;
    if (k == n) return true;  // identical digit sequences
    auto drop = [](const DigitSeq& d, std::size_t m) {
        DigitSeq r;
        for (std::size_t i = m; i < d.pre.size(); ++i) r.pre.push_back(d.pre[i]);
        const std::size_t shift = m > d.pre.size() ? (m - d.pre.size()) % d.period.size() : 0;
        for (std::size_t i = 0; i < d.period.size(); ++i) r.period.push_back(d.period[(i + shift) % d.period.size()]);
        return r;
    };
    Letter i = letter(lx, k), j = letter(ly, k);
    LatticeVec v{0, 0, 0};
    if (i == j) {
        // equal tiles, different digits: take one step of the edge algebra
        v = incidence_inverse(g.params) * (prefix_vec(dy.at(k)) - prefix_vec(dx.at(k)));
        ++k;
        i = letter(lx, k);
        j = letter(ly, k);
    }
    DigitSeq sx = drop(dx, k), sy = drop(dy, k);
    const bool swap = v == LatticeVec{0, 0, 0} ? i > j : !emb.gamma_srs_member(v, j);
    if (swap) {
        std::swap(sx, sy);
        std::swap(i, j);
        v = -v;
    }
    return point_equality(emb, graph, sx, sy, v, i, j);
}

void check_identification(const Embedding& emb, const OrderedGraph& g, std::vector<IdentPair>& pairs,
                          const BoundaryGraph* certify_in)
{
    for (auto& p : pairs) {
        p.distance = emb.norm(psi(emb, g, p.left) - psi(emb, g, p.right));
        if (certify_in) p.certified = certify_equal(emb, g, *certify_in, p.left, p.right);
    }
}

long double holder_exponent(const Embedding& emb, long double lambda)
{
    return -std::log(emb.max_abs_alpha()) / std::log(lambda);
}

std::optional<long double> hausdorff_dimension(const Embedding& emb, long double lambda)
{
    if (emb.kind() != ConjKind::ComplexPair) return std::nullopt;
    return 2 * std::log(lambda) / std::log(emb.beta());
}

long double holder_constant_bound(const Embedding& emb, const Numeration& num)
{
    const long double s = holder_exponent(emb, num.lambda());
    return 2 * std::sqrt(2.0L) * emb.candidate_bound() * std::pow(num.lambda() / num.min_weight(), s);
}

std::string walk_to_string(const OrderedGraph& g, const Walk& w)
{
    std::ostringstream os;
    auto tok = [](int o) { return o == kMaxOrder ? std::string("max") : std::to_string(o); };
    os << "(" << g.states[w.start].name;
    const char* sep = ";";
    for (int o : w.orders) {
        os << sep << tok(o);
        sep = ",";
    }
    os << sep << "[";
    for (std::size_t k = 0; k < w.period.size(); ++k) os << (k ? "," : "") << tok(w.period[k]);
    os << "]...)";
    return os.str();
}

} // namespace rauzy
