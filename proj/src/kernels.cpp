#include "rauzy/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rauzy::kernels {

namespace {

struct ScanSetup {
    EigenCoords col[3];
    Real vb[3];
    Real beta_lim;
    Real bound;
    Real bound_inflated;
};

ScanSetup make_setup(const Embedding& emb)
{
    ScanSetup s;
    for (int k = 0; k < 3; ++k) {
        LatticeVec e{0, 0, 0};
        e[k] = 1;
        s.col[k] = emb.eigen_coords(e);
    }
    const auto vb = emb.v_beta();
    for (int k = 0; k < 3; ++k) s.vb[k] = vb[k];
    s.beta_lim = emb.beta() * (1 + emb.tol());
    s.bound = emb.candidate_bound();
    s.bound_inflated = s.bound * (1 + emb.tol());
    return s;
}

void scan_slice(const ScanSetup& s, std::int64_t x0, const std::array<std::int64_t, 3>& half,
                std::vector<ScanHit>& out)
{
    for (std::int64_t x1 = -half[1]; x1 <= half[1]; ++x1) {
        const Real p01 = x0 * s.vb[0] + x1 * s.vb[1];
        const EigenCoords e01 = Real(x0) * s.col[0] + Real(x1) * s.col[1];
        for (std::int64_t x2 = -half[2]; x2 <= half[2]; ++x2) {
            const Real pairing = p01 + x2 * s.vb[2];
            if (std::fabs(pairing) >= s.beta_lim) continue;
            const EigenCoords e = e01 + Real(x2) * s.col[2];
            const Real n = std::max(std::abs(e.z1), std::abs(e.z2));
            if (n > s.bound_inflated) continue;
            out.push_back({{x0, x1, x2}, n > s.bound});
        }
    }
}

bool hit_less(const ScanHit& a, const ScanHit& b) { return a.x < b.x; }

} // namespace

std::vector<ScanHit> scan_box_serial(const Embedding& emb, const std::array<std::int64_t, 3>& half)
{
    const ScanSetup s = make_setup(emb);
    std::vector<ScanHit> out;
    for (std::int64_t x0 = -half[0]; x0 <= half[0]; ++x0) scan_slice(s, x0, half, out);
    return out;
}

std::vector<ScanHit> scan_box_omp(const Embedding& emb, const std::array<std::int64_t, 3>& half)
{
    const ScanSetup s = make_setup(emb);
    const std::int64_t n0 = 2 * half[0] + 1;
    std::vector<std::vector<ScanHit>> slices(static_cast<std::size_t>(n0));
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t k = 0; k < n0; ++k) scan_slice(s, k - half[0], half, slices[k]);
    std::vector<ScanHit> out;
    for (auto& sl : slices) out.insert(out.end(), sl.begin(), sl.end());
    std::sort(out.begin(), out.end(), hit_less);
    return out;
}

namespace {

/// Uniform grid over the segments of a polyline, stored in compressed rows.
struct SegmentGrid {
    double x0 = 0, y0 = 0, cell = 1;
    int nx = 1, ny = 1;
    std::vector<std::uint32_t> start;
    std::vector<std::uint32_t> ids;
    const Polyline* line = nullptr;

    std::size_t segment_count() const { return segment_total(*line); }

    void segment(std::size_t s, double& ax, double& ay, double& bx, double& by) const
    {
        const auto& p = line->pts;
        const auto& a = p[s];
        const auto& b = p[(s + 1) % p.size()];
        ax = a.x;
        ay = a.y;
        bx = b.x;
        by = b.y;
    }

    template <class F>
    void for_cells(std::size_t s, F f) const
    {
        double ax, ay, bx, by;
        segment(s, ax, ay, bx, by);
        const int cx0 = clampx(std::min(ax, bx)), cx1 = clampx(std::max(ax, bx));
        const int cy0 = clampy(std::min(ay, by)), cy1 = clampy(std::max(ay, by));
        for (int cy = cy0; cy <= cy1; ++cy)
            for (int cx = cx0; cx <= cx1; ++cx) f(static_cast<std::size_t>(cy) * nx + cx);
    }

    explicit SegmentGrid(const Polyline& l) : line(&l)
    {
        double minx = std::numeric_limits<double>::max(), miny = minx;
        double maxx = -minx, maxy = -minx;
        for (const auto& q : l.pts) {
            minx = std::min(minx, q.x);
            maxx = std::max(maxx, q.x);
            miny = std::min(miny, q.y);
            maxy = std::max(maxy, q.y);
        }
        const std::size_t nseg = segment_count();
        const double w = std::max(maxx - minx, 1e-300), h = std::max(maxy - miny, 1e-300);
        // fractal polylines are long relative to their extent, so cells are finer than sqrt(n)
        const double target = 8 * std::max(1.0, std::sqrt(double(std::max<std::size_t>(nseg, 1))));
        cell = std::max(w, h) / std::min(target, 8192.0);
        nx = std::max(1, int(std::ceil(w / cell)));
        ny = std::max(1, int(std::ceil(h / cell)));
        x0 = minx;
        y0 = miny;
        start.assign(static_cast<std::size_t>(nx) * ny + 1, 0);
        for (std::size_t s = 0; s < nseg; ++s) for_cells(s, [&](std::size_t c) { ++start[c + 1]; });
        for (std::size_t c = 1; c < start.size(); ++c) start[c] += start[c - 1];
        ids.resize(start.back());
        std::vector<std::uint32_t> fill(start.begin(), start.end() - 1);
        for (std::size_t s = 0; s < nseg; ++s)
            for_cells(s, [&](std::size_t c) { ids[fill[c]++] = static_cast<std::uint32_t>(s); });
    }

    int clampx(double x) const { return std::clamp(int(std::floor((x - x0) / cell)), 0, nx - 1); }
    int clampy(double y) const { return std::clamp(int(std::floor((y - y0) / cell)), 0, ny - 1); }

    double seg_dist(std::size_t s, double qx, double qy) const
    {
        double ax, ay, bx, by;
        segment(s, ax, ay, bx, by);
        const double dx = bx - ax, dy = by - ay;
        const double len2 = dx * dx + dy * dy;
        double t = len2 > 0 ? ((qx - ax) * dx + (qy - ay) * dy) / len2 : 0.0;
        t = std::clamp(t, 0.0, 1.0);
        return std::hypot(qx - (ax + t * dx), qy - (ay + t * dy));
    }

    /// Distance from q to the polyline; `hint` is a segment used as initial upper bound.
    double distance(double qx, double qy, long& hint) const
    {
        double best = std::numeric_limits<double>::infinity();
        if (hint >= 0) best = seg_dist(std::size_t(hint), qx, qy);
        const int cx = clampx(qx), cy = clampy(qy);
        const int rmax = std::max(nx, ny);
        // distance from q to the outside of the searched square of radius r
        const double fx = (qx - x0) / cell - cx, fy = (qy - y0) / cell - cy;
        const double inner = std::min({fx, 1 - fx, fy, 1 - fy});
        for (int r = 0; r <= rmax; ++r) {
            if (r > 0 && best <= (r - 1 + std::max(0.0, inner)) * cell) break;
            for (int yy = cy - r; yy <= cy + r; ++yy) {
                if (yy < 0 || yy >= ny) continue;
                const bool edge_row = (yy == cy - r || yy == cy + r);
                const int stride = edge_row || r == 0 ? 1 : 2 * r;
                for (int xx = cx - r; xx <= cx + r; xx += stride) {
                    if (xx < 0 || xx >= nx) continue;
                    const std::size_t c = static_cast<std::size_t>(yy) * nx + xx;
                    for (std::uint32_t k = start[c]; k < start[c + 1]; ++k) {
                        const double d = seg_dist(ids[k], qx, qy);
                        if (d < best) {
                            best = d;
                            hint = ids[k];
                        }
                    }
                }
            }
        }
        return best;
    }
};

/// Maximum of the distance to `to` over the dyadic samples of segment s of `from`, bisected
/// until pieces are no longer than `step`. A piece is pruned when it cannot exceed `floor`:
/// the distance is 1-Lipschitz, and the distance to one fixed segment is convex along a line.
/// Pruning never changes max(floor, result).
template <class Index>
double segment_max(const Index& grid, const Polyline& from, const std::vector<double>& vd, std::size_t s,
                   double step, double floor, long& hint)
{
    const auto& p = from.pts;
    const std::size_t s2 = (s + 1) % p.size();
    const Pt a = p[s], b = p[s2];
    const double len = std::hypot(b.x - a.x, b.y - a.y);
    double worst = std::max(vd[s], vd[s2]);
    if ((vd[s] + vd[s2] + len) / 2 <= std::max(floor, worst) || len <= step) return worst;
    struct Piece {
        double t0, t1, d0, d1;
        long n0, n1;
    };
    auto at = [&](double t) { return Pt{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)}; };
    long n0 = hint, n1;
    grid.distance(a.x, a.y, n0);
    n1 = n0;
    grid.distance(b.x, b.y, n1);
    hint = n1;
    std::vector<Piece> stack{{0.0, 1.0, vd[s], vd[s2], n0, n1}};
    while (!stack.empty()) {
        const Piece c = stack.back();
        stack.pop_back();
        const double lim = std::max(floor, worst);
        const double plen = (c.t1 - c.t0) * len;
        if (plen <= step || (c.d0 + c.d1 + plen) / 2 <= lim) continue;
        const Pt q0 = at(c.t0), q1 = at(c.t1);
        auto convex = [&](long n) {
            return n >= 0 && std::max(grid.segment_distance(std::size_t(n), q0.x, q0.y), grid.segment_distance(std::size_t(n), q1.x, q1.y)) <= lim;
        };
        if (convex(c.n0) || convex(c.n1)) continue;
        const double tm = (c.t0 + c.t1) / 2;
        const Pt m = at(tm);
        long nm = c.n0;
        const double dm = grid.distance(m.x, m.y, nm);
        worst = std::max(worst, dm);
        stack.push_back({tm, c.t1, dm, c.d1, nm, c.n1});
        stack.push_back({c.t0, tm, c.d0, dm, c.n0, nm});
    }
    return worst;
}

} // namespace

std::size_t segment_total(const Polyline& l)
{
    const std::size_t n = l.pts.size();
    return l.closed ? n : (n ? n - 1 : 0);
}

struct SegmentIndex::Grid : SegmentGrid {
    using SegmentGrid::SegmentGrid;
};

SegmentIndex::SegmentIndex(const Polyline& to) : grid_(std::make_unique<Grid>(to)) {}
SegmentIndex::~SegmentIndex() = default;
SegmentIndex::SegmentIndex(SegmentIndex&&) noexcept = default;
SegmentIndex& SegmentIndex::operator=(SegmentIndex&&) noexcept = default;

const Polyline& SegmentIndex::line() const { return *grid_->line; }

double SegmentIndex::distance(double x, double y, long& hint) const { return grid_->distance(x, y, hint); }

double SegmentIndex::segment_distance(std::size_t s, double x, double y) const { return grid_->seg_dist(s, x, y); }

std::vector<double> vertex_distances_serial(const Polyline& from, const SegmentIndex& to)
{
    std::vector<double> vd(from.pts.size(), 0);
    if (to.line().pts.empty()) return vd;
    long hint = -1;
    for (std::size_t k = 0; k < from.pts.size(); ++k) vd[k] = to.distance(from.pts[k].x, from.pts[k].y, hint);
    return vd;
}

std::vector<double> vertex_distances_omp(const Polyline& from, const SegmentIndex& to)
{
    std::vector<double> vd(from.pts.size(), 0);
    if (to.line().pts.empty()) return vd;
    const long n = static_cast<long>(from.pts.size());
#pragma omp parallel
    {
        long hint = -1;
#pragma omp for schedule(static)
        for (long k = 0; k < n; ++k) vd[k] = to.distance(from.pts[k].x, from.pts[k].y, hint);
    }
    return vd;
}

std::vector<double> vertex_distances_serial(const Polyline& from, const Polyline& to)
{
    return vertex_distances_serial(from, SegmentIndex(to));
}

std::vector<double> vertex_distances_omp(const Polyline& from, const Polyline& to)
{
    return vertex_distances_omp(from, SegmentIndex(to));
}

double directed_hausdorff_serial(const Polyline& from, const SegmentIndex& to, double step,
                                 const std::vector<double>* vdp, double floor)
{
    if (from.pts.empty() || to.line().pts.empty()) return floor;
    const std::vector<double> vd = vdp ? *vdp : vertex_distances_serial(from, to);
    double worst = std::max(floor, *std::max_element(vd.begin(), vd.end()));
    long hint = -1;
    if (from.pts.size() > 1)
        for (std::size_t s = 0; s < segment_total(from); ++s)
            worst = std::max(worst, segment_max(to, from, vd, s, step, worst, hint));
    return worst;
}

double directed_hausdorff_omp(const Polyline& from, const SegmentIndex& to, double step,
                              const std::vector<double>* vdp, double floor)
{
    if (from.pts.size() <= 1 || to.line().pts.empty()) return directed_hausdorff_serial(from, to, step, vdp, floor);
    const std::vector<double> vd = vdp ? *vdp : vertex_distances_omp(from, to);
    const double base = std::max(floor, *std::max_element(vd.begin(), vd.end()));
    const long nseg = static_cast<long>(segment_total(from));
    double worst = base;
#pragma omp parallel
    {
        long hint = -1;
        double local = base;
#pragma omp for schedule(dynamic, 4096)
        for (long s = 0; s < nseg; ++s) local = std::max(local, segment_max(to, from, vd, std::size_t(s), step, local, hint));
#pragma omp critical
        worst = std::max(worst, local);
    }
    return worst;
}

double directed_hausdorff_serial(const Polyline& from, const Polyline& to, double step,
                                 const std::vector<double>* vdp, double floor)
{
    return directed_hausdorff_serial(from, SegmentIndex(to), step, vdp, floor);
}

double directed_hausdorff_omp(const Polyline& from, const Polyline& to, double step,
                              const std::vector<double>* vdp, double floor)
{
    return directed_hausdorff_omp(from, SegmentIndex(to), step, vdp, floor);
}

std::vector<PlanePoint> tile_points_omp(const Embedding& emb, Letter i, int n)
{
    const auto g = prefix_suffix_graph(emb.params());
    const EigenCoords e1 = emb.eigen_coords({1, 0, 0});
    struct Node {
        Letter letter;
        EigenCoords sum;
        EigenCoords scale;
    };
    // expand a frontier in lexicographic order, then finish each branch independently
    const int split = std::min(n, 4);
    std::vector<Node> frontier{{i, {}, e1}};
    for (int d = 0; d < split; ++d) {
        std::vector<Node> next;
        for (const auto& nd : frontier)
            for (const auto& e : g.out(nd.letter))
                next.push_back({e.to, nd.sum + Real(e.prefix) * nd.scale, emb.contract(nd.scale)});
        frontier.swap(next);
    }
    std::vector<std::vector<PlanePoint>> parts(frontier.size());
    const int rest = n - split;
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < long(frontier.size()); ++k) {
        struct Frame {
            Node node;
            int depth;
        };
        std::vector<Frame> stack{{frontier[k], 0}};
        while (!stack.empty()) {
            Frame f = stack.back();
            stack.pop_back();
            if (f.depth == rest) {
                parts[k].push_back(emb.to_plane(f.node.sum));
                continue;
            }
            const auto edges = g.out(f.node.letter);
            for (auto it = edges.rbegin(); it != edges.rend(); ++it)
                stack.push_back({{it->to, f.node.sum + Real(it->prefix) * f.node.scale, emb.contract(f.node.scale)},
                                 f.depth + 1});
        }
    }
    std::vector<PlanePoint> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

} // namespace rauzy::kernels
