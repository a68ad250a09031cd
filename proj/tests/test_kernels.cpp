#include <doctest.h>

#include <cmath>
#include <random>

#include "rauzy/boundary_graph.hpp"
#include "rauzy/kernels.hpp"

using namespace rauzy;
using kernels::Polyline;
using kernels::Pt;

namespace {

Polyline random_polyline(std::mt19937& rng, int n, bool closed)
{
    std::normal_distribution<double> d(0, 1);
    Polyline l;
    l.closed = closed;
    Pt q{0, 0};
    for (int k = 0; k < n; ++k) {
        q.x += d(rng);
        q.y += d(rng);
        l.pts.push_back(q);
    }
    return l;
}

double seg_dist(const Pt& a, const Pt& b, double x, double y)
{
    const double dx = b.x - a.x, dy = b.y - a.y, len2 = dx * dx + dy * dy;
    const double t = len2 > 0 ? std::clamp(((x - a.x) * dx + (y - a.y) * dy) / len2, 0.0, 1.0) : 0.0;
    return std::hypot(x - a.x - t * dx, y - a.y - t * dy);
}

double brute_distance(const Polyline& l, double x, double y)
{
    double best = INFINITY;
    const std::size_t n = kernels::segment_total(l);
    if (n == 0) return std::hypot(x - l.pts[0].x, y - l.pts[0].y);
    for (std::size_t s = 0; s < n; ++s) best = std::min(best, seg_dist(l.pts[s], l.pts[(s + 1) % l.pts.size()], x, y));
    return best;
}

/// Uniform sampling of every segment with spacing below step.
double brute_directed(const Polyline& from, const Polyline& to, double step)
{
    double worst = 0;
    for (const auto& q : from.pts) worst = std::max(worst, brute_distance(to, q.x, q.y));
    for (std::size_t s = 0; s < kernels::segment_total(from); ++s) {
        const Pt a = from.pts[s], b = from.pts[(s + 1) % from.pts.size()];
        const int n = int(std::ceil(std::hypot(b.x - a.x, b.y - a.y) / step));
        for (int k = 1; k < n; ++k) {
            const double t = double(k) / n;
            worst = std::max(worst, brute_distance(to, a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)));
        }
    }
    return worst;
}

} // namespace

TEST_CASE("lattice scan: parallel equals serial")
{
    for (const Params& p : {Params(1, 1), Params(5, 3), Params(4, 4)}) {
        const Embedding emb(p);
        const auto box = candidate_box(emb);
        CHECK(kernels::scan_box_serial(emb, box) == kernels::scan_box_omp(emb, box));
    }
}

TEST_CASE("tile points: parallel equals serial")
{
    const Embedding emb(Params(2, 1));
    for (Letter i = 1; i <= 3; ++i)
        for (int n : {0, 3, 7}) {
            const auto a = tile_points(emb, i, n), b = kernels::tile_points_omp(emb, i, n);
            REQUIRE(a.size() == b.size());
            bool same = true;
            for (std::size_t k = 0; k < a.size(); ++k) same = same && a[k].u == b[k].u && a[k].v == b[k].v;
            CHECK(same);
        }
}

TEST_CASE("segment index distance equals brute force")
{
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> u(-8, 8);
    for (bool closed : {true, false}) {
        const Polyline l = random_polyline(rng, 300, closed);
        const kernels::SegmentIndex idx(l);
        long hint = -1;
        for (int k = 0; k < 500; ++k) {
            const double x = u(rng), y = u(rng);
            CHECK(idx.distance(x, y, hint) == doctest::Approx(brute_distance(l, x, y)).epsilon(1e-12));
        }
    }
}

TEST_CASE("directed Hausdorff distance: parallel, serial and brute force")
{
    std::mt19937 rng(37);
    for (int trial = 0; trial < 6; ++trial) {
        const Polyline a = random_polyline(rng, 80, trial % 2 == 0), b = random_polyline(rng, 120, true);
        const double step = 0.05;
        const double s = kernels::directed_hausdorff_serial(a, b, step);
        const double o = kernels::directed_hausdorff_omp(a, b, step);
        CHECK(s == o);
        CHECK(kernels::vertex_distances_serial(a, b) == kernels::vertex_distances_omp(a, b));
        // both samplings lie within half their spacing of the supremum
        const double brute = brute_directed(a, b, step / 8);
        CHECK(s <= brute + step / 16);
        CHECK(s >= brute - step / 2);
        // a floor only hides values below it
        CHECK(kernels::directed_hausdorff_serial(a, b, step, nullptr, s / 2) == s);
        CHECK(kernels::directed_hausdorff_omp(a, b, step, nullptr, 2 * s) == 2 * s);
    }
}

TEST_CASE("degenerate polylines")
{
    Polyline p;
    p.pts = {{0, 0}};
    Polyline q;
    q.pts = {{3, 4}};
    CHECK(kernels::directed_hausdorff_serial(p, q, 0.1) == doctest::Approx(5));
    CHECK(kernels::directed_hausdorff_omp(p, q, 0.1) == doctest::Approx(5));
    CHECK(kernels::directed_hausdorff_serial(p, p, 0.1) == 0);
}
