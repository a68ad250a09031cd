#include "rauzy/render.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

namespace rauzy {

namespace {

constexpr std::uint64_t kTilePointCap = 20'000'000;

struct Frame {
    double minx, miny, scale, offx, offy;
    int height;
};

Frame fit(const std::vector<kernels::Pt>& pts, const RenderOptions& opt)
{
    double minx = std::numeric_limits<double>::max(), miny = minx, maxx = -minx, maxy = -minx;
    for (const auto& p : pts) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }
    if (pts.empty()) minx = miny = maxx = maxy = 0;
    const double w = std::max(maxx - minx, 1e-12), h = std::max(maxy - miny, 1e-12);
    const double aw = opt.width * (1 - 2 * opt.margin), ah = opt.height * (1 - 2 * opt.margin);
    const double scale = std::min(aw / w, ah / h);
    return {minx, miny, scale, (opt.width - scale * w) / 2, (opt.height - scale * h) / 2, opt.height};
}

std::string fmt(double v)
{
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << v;
    return os.str();
}

void check_options(const RenderOptions& opt)
{
    if (opt.width <= 0 || opt.height <= 0) throw UsageError("image dimensions must be positive");
    if (opt.margin < 0 || opt.margin >= 0.5) throw UsageError("margin must lie in [0, 0.5)");
}

} // namespace

LexWalks::LexWalks(const OrderedGraph& g, int n) : g_(g), n_(n)
{
    if (n < 0) throw UsageError("approximation level must be nonnegative");
}

bool LexWalks::next()
{
    if (start_ < 0) {
        start_ = 0;
        states_.assign(1, 0);
        orders_.clear();
        changed_ = 0;
    } else {
        // increment the last order that can grow
        int k = n_ - 1;
        while (k >= 0 && orders_[k] == g_.states[states_[k]].omax()) --k;
        if (k < 0) {
            if (++start_ >= g_.s_max) return false;
            states_.assign(1, start_);
            orders_.clear();
            changed_ = 0;
        } else {
            ++orders_[k];
            orders_.resize(k + 1);
            states_.resize(k + 1);
            changed_ = k;
            states_.push_back(g_.edge(states_[k], orders_[k]).to);
        }
    }
    while (int(orders_.size()) < n_) {
        orders_.push_back(1);
        states_.push_back(g_.edge(states_.back(), 1).to);
    }
    return true;
}

std::uint64_t walk_count(const OrderedGraph& g, int n)
{
    std::vector<std::uint64_t> cnt(g.state_count(), 1);
    for (int k = 0; k < n; ++k) {
        std::vector<std::uint64_t> next(g.state_count(), 0);
        for (const auto& e : g.edges) next[e.from] += cnt[e.to];
        cnt = next;
    }
    std::uint64_t total = 0;
    for (int s = 0; s < g.s_max; ++s) total += cnt[s];
    return total;
}

kernels::Polyline approximation(const Embedding& emb, const OrderedGraph& g, int n)
{
    std::vector<EigenCoords> tail;
    for (int s = 0; s < g.state_count(); ++s) tail.push_back(psi(emb, g, Walk{s, {}, {1}}));
    const EigenCoords base = emb.eigen_coords(prefix_vec(1));
    const Cplx a1 = emb.alpha1(), a2 = emb.alpha2();
    // partial[k] = sum_{m<k} h^m pi l(p_m); power[k] = h^k
    std::vector<EigenCoords> partial(n + 1);
    std::vector<Cplx> pw1(n + 1, 1), pw2(n + 1, 1);
    for (int k = 1; k <= n; ++k) {
        pw1[k] = pw1[k - 1] * a1;
        pw2[k] = pw2[k - 1] * a2;
    }
    kernels::Polyline poly;
    poly.closed = true;
    poly.pts.reserve(walk_count(g, n));
    LexWalks it(g, n);
    while (it.next()) {
        for (int k = it.changed_from(); k < n; ++k) {
            const int p = g.edge(it.states()[k], it.orders()[k]).p1;
            partial[k + 1] = {partial[k].z1 + Real(p) * pw1[k] * base.z1, partial[k].z2 + Real(p) * pw2[k] * base.z2};
        }
        const EigenCoords& t = tail[it.states()[n]];
        const EigenCoords z{partial[n].z1 + pw1[n] * t.z1, partial[n].z2 + pw2[n] * t.z2};
        const PlanePoint q = emb.to_plane(z);
        poly.pts.push_back({double(q.u), double(q.v)});
    }
    return poly;
}

namespace {

/// Exact address of the current walk of `it`, updated incrementally.
class AddressStream {
public:
    AddressStream(const Numeration& num, int n) : num_(num), it_(num.graph(), n), n_(n)
    {
        const NumberField& K = num.field();
        const QElem inv = K.inv(K.generator());
        scale_.push_back(K.from_int(1));
        for (int k = 1; k <= n; ++k) scale_.push_back(K.mul(scale_.back(), inv));
        partial_.assign(n + 1, K.from_int(0));
    }

    bool next()
    {
        if (!it_.next()) return false;
        const NumberField& K = num_.field();
        const int from = it_.changed_from();
        if (from == 0) partial_[0] = num_.offset_exact(it_.start());
        for (int k = from; k < n_; ++k)
            partial_[k + 1] = K.add(partial_[k], K.mul(scale_[k + 1], num_.phi0_exact(it_.states()[k], it_.orders()[k])));
        return true;
    }

    const QElem& value() const { return partial_[n_]; }

private:
    const Numeration& num_;
    LexWalks it_;
    int n_;
    std::vector<QElem> scale_;
    std::vector<QElem> partial_;
};

mpf_class approx(const QElem& x, const mpf_class& lambda)
{
    mpf_class r(0, lambda.get_prec());
    for (int i = 3; i >= 0; --i) r = r * lambda + mpf_class(x[i], lambda.get_prec());
    return r;
}

} // namespace

std::vector<QElem> approximation_addresses(const Numeration& num, int n)
{
    std::vector<QElem> out;
    AddressStream s(num, n);
    while (s.next()) out.push_back(s.value());
    return out;
}

bool addresses_nested(const Numeration& num, int n)
{
    const NumberField& K = num.field();
    // lambda to 256 bits for ordering; equality is decided exactly
    mpf_class lam(static_cast<double>(num.lambda()), 256);
    const Params& p = num.graph().params;
    for (int it = 0; it < 10; ++it) {
        mpf_class px = (((lam + (1 - p.b)) * lam + (p.b - p.a)) * lam - (p.a + 1)) * lam - 1;
        mpf_class dx = ((4 * lam + 3 * (1 - p.b)) * lam + 2 * (p.b - p.a)) * lam - (p.a + 1);
        lam -= px / dx;
    }
    AddressStream coarse(num, n), fine(num, n + 1);
    bool have_fine = fine.next();
    while (coarse.next()) {
        for (;;) {
            if (!have_fine) return false;
            const QElem d = K.sub(fine.value(), coarse.value());
            if (NumberField::is_zero(d)) break;
            // phi is monotone along the lexicographic order: once past, the address is missing
            if (approx(d, lam) > 0) return false;
            have_fine = fine.next();
        }
    }
    return true;
}

double hausdorff_distance(const kernels::Polyline& p, const kernels::Polyline& q, double rel_step)
{
    if (p.pts.empty() || q.pts.empty()) return 0;
    const kernels::SegmentIndex ip(p), iq(q);
    const auto vpq = kernels::vertex_distances_omp(p, iq);
    const auto vqp = kernels::vertex_distances_omp(q, ip);
    const double mpq = *std::max_element(vpq.begin(), vpq.end());
    const double mqp = *std::max_element(vqp.begin(), vqp.end());
    double scale = std::max(mpq, mqp);
    if (scale <= 0) {
        for (std::size_t k = 0; k + 1 < p.pts.size(); ++k)
            scale = std::max(scale, std::hypot(p.pts[k + 1].x - p.pts[k].x, p.pts[k + 1].y - p.pts[k].y));
        if (scale <= 0) return 0;
    }
    const double step = rel_step * scale;
    // the direction with the larger vertex distances first; its value bounds the other from below
    if (mpq >= mqp) {
        const double d = kernels::directed_hausdorff_omp(p, iq, step, &vpq);
        return kernels::directed_hausdorff_omp(q, ip, step, &vqp, d);
    }
    const double d = kernels::directed_hausdorff_omp(q, ip, step, &vqp);
    return kernels::directed_hausdorff_omp(p, iq, step, &vpq, d);
}

void render_boundary(const Embedding& emb, const Numeration& num, int n, const RenderOptions& opt, std::ostream& out)
{
    check_options(opt);
    const auto poly = approximation(emb, num.graph(), n);
    if (opt.format == RenderOptions::Format::Csv) {
        out << "t_coeffs;x;y\n";
        AddressStream s(num, n);
        std::size_t k = 0;
        out << std::setprecision(17);
        while (s.next()) {
            out << NumberField::to_string(s.value()) << ';' << poly.pts[k].x << ';' << poly.pts[k].y << '\n';
            ++k;
        }
        return;
    }
    const Frame f = fit(poly.pts, opt);
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opt.width << "\" height=\""
        << opt.height << "\" viewBox=\"0 0 " << opt.width << ' ' << opt.height << "\">\n"
        << "<polygon fill=\"none\" stroke=\"black\" stroke-width=\"" << fmt(opt.stroke) << "\" points=\"";
    for (std::size_t k = 0; k < poly.pts.size(); ++k) {
        const double x = f.offx + (poly.pts[k].x - f.minx) * f.scale;
        const double y = f.height - (f.offy + (poly.pts[k].y - f.miny) * f.scale);
        out << (k ? " " : "") << fmt(x) << ',' << fmt(y);
    }
    out << "\"/>\n</svg>\n";
}

int max_tile_depth(const Params& p)
{
    int d = 0;
    while (gamma_walk_count(p, 1, d + 1) + gamma_walk_count(p, 2, d + 1) + gamma_walk_count(p, 3, d + 1) <= kTilePointCap)
        ++d;
    return d;
}

void render_tiles(const Embedding& emb, int depth, const RenderOptions& opt, std::ostream& out)
{
    check_options(opt);
    if (depth < 0) throw UsageError("depth must be nonnegative");
    const Params& p = emb.params();
    if (depth > max_tile_depth(p))
        throw UsageError("depth " + std::to_string(depth) + " exceeds the memory cap; use at most " +
                         std::to_string(max_tile_depth(p)));
    std::array<std::vector<kernels::Pt>, 3> pts;
    std::vector<kernels::Pt> all;
    for (Letter i = 1; i <= 3; ++i) {
        for (const auto& q : kernels::tile_points_omp(emb, i, depth)) pts[i - 1].push_back({double(q.u), double(q.v)});
        all.insert(all.end(), pts[i - 1].begin(), pts[i - 1].end());
    }
    if (opt.format == RenderOptions::Format::Csv) {
        out << "letter;x;y\n" << std::setprecision(17);
        for (int i = 0; i < 3; ++i)
            for (const auto& q : pts[i]) out << i + 1 << ';' << q.x << ';' << q.y << '\n';
        return;
    }
    const Frame f = fit(all, opt);
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opt.width << "\" height=\""
        << opt.height << "\" viewBox=\"0 0 " << opt.width << ' ' << opt.height << "\">\n";
    const double r = std::max(0.2, opt.stroke / 2);
    for (int i = 0; i < 3; ++i) {
        out << "<g fill=\"" << opt.colors[i] << "\">\n";
        for (const auto& q : pts[i]) {
            const double x = f.offx + (q.x - f.minx) * f.scale;
            const double y = f.height - (f.offy + (q.y - f.miny) * f.scale);
            out << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"" << fmt(r) << "\"/>\n";
        }
        out << "</g>\n";
    }
    out << "</svg>\n";
}

} // namespace rauzy
