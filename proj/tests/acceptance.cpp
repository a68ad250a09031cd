#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "mutation.hpp"
#include "rauzy/render.hpp"
#include "rauzy/topology.hpp"

using namespace rauzy;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

/// Records the first failures; keeps the detail line short.
struct Log {
    Outcome out;
    int failures = 0;
    void fail(const std::string& s)
    {
        out.pass = false;
        if (failures++ < 3) out.detail += (out.detail.empty() ? "" : "; ") + s;
    }
    void note(const std::string& s) { out.detail += (out.detail.empty() ? "" : "; ") + s; }
};

std::string pname(const Params& p) { return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")"; }

std::string fmt(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", x);
    return buf;
}

Outcome graph_equality()
{
    Log log;
    int n = 0;
    for (int a = 1; a <= 8; ++a)
        for (int b = 1; b <= a; ++b) {
            if (2 * b - a > 3) continue;
            const Params p(a, b);
            const auto full = build_full_boundary_graph(Embedding(p));
            if (full.flagged_count() != 0) log.fail(pname(p) + " has flagged vertices");
            if (!same_graph(full.graph, contact_graph(p).graph)) log.fail(pname(p) + " differs");
            ++n;
        }
    log.note(std::to_string(n) + " parameter pairs");
    return log.out;
}

Outcome strict_containment()
{
    Log log;
    for (const Params& p : {Params(4, 4), Params(5, 5), Params(10, 7)}) {
        const auto full = build_full_boundary_graph(Embedding(p));
        const auto g0 = contact_graph(p).graph;
        if (!is_subgraph(g0, full.graph)) log.fail(pname(p) + " table graph not contained");
        if (same_graph(full.graph, g0)) log.fail(pname(p) + " not strict");
        log.note(pname(p) + " " + std::to_string(full.graph.vertices.size()) + " > " +
                 std::to_string(g0.vertices.size()) + " vertices");
    }
    return log.out;
}

Outcome perron_suite()
{
    Log log;
    double worst = 0;
    for (int a = 1; a <= 12; ++a)
        for (int b = 1; b <= a; ++b) {
            const Params p(a, b);
            const auto d = perron_data(ordered_graph(p));
            const double poly = std::fabs(double(perron_polynomial(p, d.lambda)));
            if (poly >= 1e-9) log.fail(pname(p) + " |p(lambda)| = " + fmt(poly));
            long double sum = 0;
            for (int m = 0; m < d.r(); ++m) {
                long double lu = 0;
                for (int k = 0; k < d.r(); ++k) lu += d.L[m][k] * d.u[k];
                const double r = std::fabs(double(lu - d.lambda * d.u[m]));
                worst = std::max(worst, r);
                if (r >= 1e-9) log.fail(pname(p) + " residual " + fmt(r));
                if (!(d.u[m] > 0)) log.fail(pname(p) + " nonpositive u");
                sum += d.u[m];
            }
            if (std::fabs(double(sum - 1)) >= 1e-12) log.fail(pname(p) + " sum u = " + fmt(double(sum)));
            if (std::fabs(double(d.lambda_power - d.lambda)) >= 1e-9) log.fail(pname(p) + " power iteration disagrees");
        }
    log.note("78 pairs, max residual " + fmt(worst));
    return log.out;
}

Outcome identification_suite()
{
    Log log;
    int total = 0;
    long double worst = 0;
    for (const Params& p : {Params(5, 3), Params(4, 1), Params(3, 3), Params(1, 1)}) {
        const Embedding emb(p);
        const auto g = ordered_graph(p);
        const auto full = build_full_boundary_graph(emb);
        auto pairs = identification_pairs(g);
        check_identification(emb, g, pairs, &full.graph);
        for (const auto& q : pairs) {
            worst = std::max(worst, q.distance);
            if (!(q.distance < 1e-9L)) log.fail(pname(p) + " " + q.label + " distance " + fmt(double(q.distance)));
            if (!q.certified.value_or(false)) log.fail(pname(p) + " " + q.label + " not certified");
        }
        total += int(pairs.size());
    }
    log.note(std::to_string(total) + " pairs, max distance " + fmt(double(worst)) + ", all certified by walks");
    return log.out;
}

Outcome parametrization_properties()
{
    Log log;
    std::mt19937 rng(20240601);
    std::uniform_real_distribution<double> unif(0, 1), expo(1, 6);
    double worst_trip = 0, worst_ratio = 0;
    for (const Params& p : {Params(1, 1), Params(5, 3), Params(4, 1), Params(3, 3), Params(10, 7)}) {
        const Embedding emb(p);
        const auto g = ordered_graph(p);
        const auto d = perron_data(g);
        const Numeration num(g, d);
        const int bits = 320;

        // closed curve
        const auto c0 = boundary_point(emb, num, mpf_class(0, bits));
        const auto c1 = boundary_point(emb, num, mpf_class(1, bits));
        if (!(emb.norm(c0.coords - c1.coords) < 1e-9L)) log.fail(pname(p) + " C(0) != C(1)");

        // round trip
        const mpf_class lam(double(d.lambda), bits);
        mpf_class bound(0, bits);
        mpf_pow_ui(bound.get_mpf_t(), lam.get_mpf_t(), 60);
        bound = 1 / bound;
        for (int k = 0; k < 1000; ++k) {
            mpf_class t(0, bits);
            // 53 random bits are enough to hit generic points
            t = unif(rng);
            const Walk w = num.phi_inverse(t, 64);
            const mpf_class err = abs(num.phi_mp(w) - t);
            worst_trip = std::max(worst_trip, double(err.get_d() / bound.get_d()));
            if (cmp(err, bound) >= 0) log.fail(pname(p) + " round trip error at t=" + fmt(t.get_d()));
        }

        // monotonicity on lexicographically ordered pairs
        auto random_walk = [&](int len) {
            Walk w;
            w.start = std::uniform_int_distribution<int>(0, g.s_max - 1)(rng);
            int s = w.start;
            for (int k = 0; k < len; ++k) {
                const int o = std::uniform_int_distribution<int>(1, g.states[s].omax())(rng);
                w.orders.push_back(o);
                s = g.edge(s, o).to;
            }
            w.period = unif(rng) < 0.5 ? std::vector<int>{1} : std::vector<int>{kMaxOrder};
            return w;
        };
        for (int k = 0; k < 1000; ++k) {
            Walk x = random_walk(12), y = random_walk(12);
            const int c = compare_lex(g, x, y);
            if (c > 0) std::swap(x, y);
            if (cmp(num.phi_mp(x), num.phi_mp(y)) > 0) log.fail(pname(p) + " phi not monotone");
        }

        // sampled Hoelder bound
        if (p == Params(1, 1) || p == Params(10, 7)) {
            const long double s = holder_exponent(emb, d.lambda);
            const long double K = holder_constant_bound(emb, num);
            double ratio = 0;
            for (int k = 0; k < 10000; ++k) {
                const double t = unif(rng);
                const double dt = std::pow(10.0, -expo(rng));
                const mpf_class t1(t, bits);
                mpf_class t2(t, bits);
                t2 += dt;
                if (t2 > 1) t2 = 1;
                const auto a = boundary_point(emb, num, t1), b = boundary_point(emb, num, t2);
                const PlanePoint qa = emb.to_plane(a.coords), qb = emb.to_plane(b.coords);
                const double dist = double(std::hypot(qa.u - qb.u, qa.v - qb.v));
                const double gap = mpf_class(t2 - t1).get_d();
                if (gap <= 0) continue;
                ratio = std::max(ratio, dist / std::pow(gap, double(s)));
            }
            worst_ratio = std::max(worst_ratio, ratio / double(K));
            if (ratio > double(K)) log.fail(pname(p) + " Hoelder ratio " + fmt(ratio) + " > " + fmt(double(K)));
            log.note(pname(p) + " fitted K " + fmt(ratio) + " <= " + fmt(double(K)));
        }
    }
    log.note("round trip max error " + fmt(worst_trip) + " lambda^-60");
    return log.out;
}

Outcome approximation_convergence()
{
    Log log;
    for (const Params& p : {Params(1, 1), Params(10, 7)}) {
        const Embedding emb(p);
        const auto g = ordered_graph(p);
        std::vector<double> ns, logs;
        auto prev = approximation(emb, g, 2);
        for (int n = 2; n <= 7; ++n) {
            auto cur = approximation(emb, g, n + 1);
            const double d = hausdorff_distance(prev, cur);
            if (!(d > 0)) log.fail(pname(p) + " zero distance at n=" + std::to_string(n));
            ns.push_back(n);
            logs.push_back(std::log(d));
            prev = std::move(cur);
        }
        // least-squares slope of log d against n
        const double mn = 4.5;
        double mean_log = 0;
        for (double v : logs) mean_log += v / logs.size();
        double num = 0, den = 0;
        for (std::size_t k = 0; k < ns.size(); ++k) {
            num += (ns[k] - mn) * (logs[k] - mean_log);
            den += (ns[k] - mn) * (ns[k] - mn);
        }
        const double ratio = std::exp(num / den);
        const double target = double(emb.max_abs_alpha());
        if (std::fabs(ratio - target) > 0.1) log.fail(pname(p) + " ratio " + fmt(ratio) + " vs " + fmt(target));
        log.note(pname(p) + " ratio " + fmt(ratio) + " vs max|alpha| " + fmt(target));

        const Numeration num_(g, perron_data(g));
        for (int n = 0; n <= 5; ++n)
            if (!addresses_nested(num_, n)) log.fail(pname(p) + " V_" + std::to_string(n) + " not nested");
    }
    if (approximation(Embedding(Params(1, 1)), ordered_graph(Params(1, 1)), 0).pts.size() != 11)
        log.fail("(1,1) Delta_0 is not an 11-gon");
    for (int a = 2; a <= 12; ++a)
        for (int b = 1; b < a; ++b) {
            const Params p(a, b);
            if (approximation(Embedding(p), ordered_graph(p), 0).pts.size() != 12) log.fail(pname(p) + " Delta_0 size");
        }
    return log.out;
}

Outcome topology_grid()
{
    Log log;
    const auto t0 = std::chrono::steady_clock::now();
    int disks = 0, others = 0;
    for (int a = 1; a <= 8; ++a)
        for (int b = 1; b <= a; ++b) {
            const Params p(a, b);
            DiskEvidence e;
            try {
                e = is_disklike(p, DiskMode::Verified);
            } catch (const VerificationError& err) {
                log.fail(pname(p) + " " + err.what());
                continue;
            }
            if (e.result != criterion(p)) log.fail(pname(p) + " disagrees with the criterion");
            if (criterion(p)) {
                ++disks;
                if (!e.psi || !e.psi->ok || !e.sl || !e.sl->ok) log.fail(pname(p) + " pattern check failed");
            } else {
                ++others;
                if (!e.witness) {
                    log.fail(pname(p) + " no witness");
                    continue;
                }
                const auto& w = *e.witness;
                if (!w.digits_equal) log.fail(pname(p) + " witness digits differ");
                if (!w.addresses_distinct || w.t == w.t_prime) log.fail(pname(p) + " witness t = t'");
                if (!(w.psi_distance < 1e-9L)) log.fail(pname(p) + " witness psi distance " + fmt(double(w.psi_distance)));
            }
        }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= 60) log.fail("grid took " + fmt(secs) + " s");
    log.note(std::to_string(disks) + " disk-like, " + std::to_string(others) + " with witness, " + fmt(secs) + " s");
    return log.out;
}

Outcome table_integrity()
{
    Log log;
    std::mt19937 rng(8);
    int mutations = 0;
    for (const Params& p : {Params(5, 3), Params(4, 1), Params(3, 3), Params(1, 1)}) {
        const auto r = verify_table_consistency(p);
        if (!r.ok()) log.fail(pname(p) + " " + r.failures.front());
        const auto g0 = contact_graph(p);
        const auto gp = ordered_graph(p);
        for (int k = 0; k < 20; ++k) {
            auto c = g0;
            auto o = gp;
            const std::string what = testing::mutate(testing::Mutation(k % 4), rng, c, o);
            if (verify_tables(p, c, o).ok()) log.fail(pname(p) + " undetected " + what);
            ++mutations;
        }
    }
    log.note(std::to_string(mutations) + " mutations detected");
    return log.out;
}

Outcome dimension_value()
{
    Log log;
    const Params p(1, 1);
    // beta by Newton on x^3 - x^2 - x - 1, lambda by bisection on x^4 - 2x - 1
    double beta = 2;
    for (int k = 0; k < 60; ++k) beta -= (((beta - 1) * beta - 1) * beta - 1) / ((3 * beta - 2) * beta - 1);
    double lo = 1, hi = 2;
    for (int k = 0; k < 200; ++k) {
        const double m = (lo + hi) / 2;
        ((m * m * m * m - 2 * m - 1) > 0 ? hi : lo) = m;
    }
    const double independent = 2 * std::log(lo) / std::log(beta);
    const Embedding emb(p);
    const auto dim = hausdorff_dimension(emb, perron_data(ordered_graph(p)).lambda);
    if (!dim) {
        log.fail("no dimension for (1,1)");
        return log.out;
    }
    if (std::fabs(independent - 1.0933) > 0.0005) log.fail("independent value " + fmt(independent));
    if (std::fabs(double(*dim) - independent) > 1e-12) log.fail("library value " + fmt(double(*dim)));
    log.note("dim = " + std::to_string(independent));
    return log.out;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"graph equality for a <= 8, 2b - a <= 3", graph_equality},
        {"strict containment for (4,4), (5,5), (10,7)", strict_containment},
        {"Perron data for all (a,b) with a <= 12", perron_suite},
        {"identification pairs and walk certificates", identification_suite},
        {"parametrization: closed curve, round trip, monotonicity, Hoelder", parametrization_properties},
        {"approximation convergence and nesting", approximation_convergence},
        {"topology decision over a <= 8", topology_grid},
        {"table integrity under mutation", table_integrity},
        {"dimension of the boundary for (1,1)", dimension_value},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] %zu. %s (%s) [%.1f s]\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                    o.detail.c_str(), secs);
        std::fflush(stdout);
        failed += !o.pass;
    }
    std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
