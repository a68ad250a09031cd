#include <doctest.h>

#include <set>
#include <sstream>

#include "rauzy/render.hpp"

using namespace rauzy;

namespace {

/// Walk counts from powers of the state adjacency restricted to the starting states.
std::uint64_t count_oracle(const OrderedGraph& g, int n)
{
    const PerronData d = perron_data(g);
    std::vector<std::uint64_t> v(g.state_count(), 1);
    for (int k = 0; k < n; ++k) {
        std::vector<std::uint64_t> w(v.size(), 0);
        for (int m = 0; m < g.state_count(); ++m)
            for (int q = 0; q < g.state_count(); ++q) w[m] += std::uint64_t(d.L[m][q]) * v[q];
        v = w;
    }
    std::uint64_t total = 0;
    for (int s = 0; s < g.s_max; ++s) total += v[s];
    return total;
}

} // namespace

TEST_CASE("vertex counts of the approximations")
{
    const Params tri(1, 1);
    const Embedding emb(tri);
    const auto g = ordered_graph(tri);
    const std::uint64_t frozen[] = {11, 16, 22, 32, 44, 60, 86, 120, 164, 232};
    for (int n = 0; n < 10; ++n) {
        CHECK(walk_count(g, n) == frozen[n]);
        CHECK(walk_count(g, n) == count_oracle(g, n));
    }
    for (int n = 0; n < 6; ++n) CHECK(approximation(emb, g, n).pts.size() == frozen[n]);
    for (const Params& p : {Params(2, 1), Params(5, 3), Params(10, 7)})
        CHECK(approximation(Embedding(p), ordered_graph(p), 0).pts.size() == 12);
    const Params p(10, 7);
    CHECK(walk_count(ordered_graph(p), 3) == count_oracle(ordered_graph(p), 3));
}

TEST_CASE("lexicographic walk enumeration")
{
    const auto g = ordered_graph(Params(3, 2));
    LexWalks it(g, 4);
    std::optional<Walk> prev;
    std::uint64_t n = 0;
    while (it.next()) {
        Walk w{it.start(), it.orders(), {1}};
        if (prev) CHECK(compare_lex(g, *prev, w) < 0);
        int s = it.start();
        for (std::size_t k = 0; k < it.orders().size(); ++k) {
            CHECK(it.states()[k] == s);
            s = g.edge(s, it.orders()[k]).to;
        }
        prev = w;
        ++n;
    }
    CHECK(n == walk_count(g, 4));
}

TEST_CASE("approximation vertices are boundary points in order")
{
    const Params p(1, 1);
    const Embedding emb(p);
    const auto g = ordered_graph(p);
    const Numeration num(g, perron_data(g));
    const auto poly = approximation(emb, g, 3);
    const auto addr = approximation_addresses(num, 3);
    REQUIRE(addr.size() == poly.pts.size());
    CHECK(poly.closed);
    for (std::size_t k = 0; k < poly.pts.size(); ++k) {
        const double t = double(NumberField::eval(addr[k], num.lambda()));
        const auto c = boundary_point(emb, num, mpf_class(t, 320));
        const PlanePoint q = c.point;
        // addresses are exact; the point at the rounded address stays close
        CHECK(std::hypot(double(q.u) - poly.pts[k].x, double(q.v) - poly.pts[k].y) < 1e-6);
        if (k) CHECK(NumberField::eval(addr[k - 1], num.lambda()) < NumberField::eval(addr[k], num.lambda()));
    }
}

TEST_CASE("approximations are nested")
{
    const Params p(1, 1);
    const auto g = ordered_graph(p);
    const Numeration num(g, perron_data(g));
    for (int n = 0; n <= 4; ++n) CHECK(addresses_nested(num, n));
}

TEST_CASE("Hausdorff distance")
{
    const Params p(1, 1);
    const Embedding emb(p);
    const auto g = ordered_graph(p);
    const auto a = approximation(emb, g, 3), b = approximation(emb, g, 4), c = approximation(emb, g, 5);
    CHECK(hausdorff_distance(a, a) == 0);
    CHECK(hausdorff_distance(a, b) == doctest::Approx(hausdorff_distance(b, a)).epsilon(1e-12));
    CHECK(hausdorff_distance(b, c) < hausdorff_distance(a, b));
    // frozen values at the default sampling
    CHECK(hausdorff_distance(a, b) == doctest::Approx(0.05545).epsilon(0.01));
}

TEST_CASE("boundary rendering")
{
    const Params p(1, 1);
    const Embedding emb(p);
    const auto g = ordered_graph(p);
    const Numeration num(g, perron_data(g));
    RenderOptions opt;
    std::ostringstream s1, s2;
    render_boundary(emb, num, 3, opt, s1);
    render_boundary(emb, num, 3, opt, s2);
    CHECK(s1.str() == s2.str());
    CHECK(s1.str().rfind("<?xml", 0) == 0);
    CHECK(s1.str().find("<polygon") != std::string::npos);
    opt.format = RenderOptions::Format::Csv;
    std::ostringstream csv;
    render_boundary(emb, num, 3, opt, csv);
    std::istringstream in(csv.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "t_coeffs;x;y");
    std::size_t rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == walk_count(g, 3));
    opt.width = 0;
    std::ostringstream bad;
    CHECK_THROWS_AS(render_boundary(emb, num, 1, opt, bad), UsageError);
}

TEST_CASE("tile rendering")
{
    const Params p(1, 1);
    const Embedding emb(p);
    RenderOptions opt;
    opt.format = RenderOptions::Format::Csv;
    std::ostringstream csv;
    render_tiles(emb, 0, opt, csv);
    std::istringstream in(csv.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "letter;x;y");
    std::size_t rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 3);
    std::ostringstream svg;
    opt.format = RenderOptions::Format::Svg;
    render_tiles(emb, 6, opt, svg);
    CHECK(svg.str().find("<circle") != std::string::npos);
    std::ostringstream big;
    CHECK_THROWS_AS(render_tiles(emb, max_tile_depth(p) + 1, opt, big), UsageError);
}
