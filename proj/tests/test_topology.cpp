#include <doctest.h>

#include "rauzy/topology.hpp"

using namespace rauzy;

TEST_CASE("closed-form criterion")
{
    CHECK(criterion(Params(1, 1)));
    CHECK(criterion(Params(5, 3)));
    CHECK(criterion(Params(3, 3)));
    CHECK_FALSE(criterion(Params(4, 4)));
    CHECK_FALSE(criterion(Params(10, 7)));
}

TEST_CASE("pattern check accepts disk-like cases and rejects the others")
{
    for (const Params& p : {Params(1, 1), Params(5, 3), Params(4, 1), Params(3, 3), Params(4, 4), Params(10, 7)}) {
        const Embedding emb(p);
        const auto g = ordered_graph(p);
        const auto phi = build_product(emb, g, ProductKind::Phi);
        const auto psi = prune_admissible(build_product(emb, g, ProductKind::Psi));
        const auto r = pattern_check(g, psi, phi);
        CHECK_MESSAGE(r.ok == criterion(p), p.a, ",", p.b, " ", r.reason);
        if (!r.ok) {
            REQUIRE(r.left.has_value());
            REQUIRE(r.right.has_value());
            // the offending pair shares its right digit sequence
            const auto dl = right_digits(g, normalize(g, *r.left));
            const auto dr = right_digits(g, normalize(g, *r.right));
            for (std::size_t k = 0; k < 60; ++k) CHECK(dl.at(k) == dr.at(k));
        }
    }
}

TEST_CASE("pruned automata keep only admissible states")
{
    const Params p(5, 3);
    const Embedding emb(p);
    const auto g = ordered_graph(p);
    for (auto kind : {ProductKind::Psi, ProductKind::Sl}) {
        const auto full = build_product(emb, g, kind);
        const auto pruned = prune_admissible(full);
        CHECK(pruned.states.size() <= full.states.size());
        CHECK(!pruned.starts.empty());
        bool diverged = false;
        for (const auto& s : pruned.states) diverged = diverged || s.diverged;
        CHECK(diverged);
        for (const auto& e : pruned.edges) {
            CHECK(e.from < int(pruned.states.size()));
            CHECK(e.to < int(pruned.states.size()));
        }
    }
}

TEST_CASE("witness of a non disk-like fractal")
{
    for (const Params& p : {Params(4, 4), Params(6, 5), Params(10, 7)}) {
        const Embedding emb(p);
        const auto g = ordered_graph(p);
        const Numeration num(g, perron_data(g));
        const Witness w = find_witness(emb, g, num);
        CHECK(w.digits_equal);
        CHECK(w.addresses_distinct);
        CHECK(w.psi_distance < 1e-12L);
        CHECK(std::fabs(double(w.t - w.t_prime)) > 1e-3);
    }
    const Params p(5, 3);
    const auto g = ordered_graph(p);
    const Numeration num(g, perron_data(g));
    CHECK_THROWS_AS(find_witness(Embedding(p), g, num), UsageError);
}

TEST_CASE("decision modes")
{
    for (const Params& p : {Params(1, 1), Params(4, 4), Params(7, 5), Params(6, 1)}) {
        const auto fast = is_disklike(p, DiskMode::Fast);
        const auto verified = is_disklike(p, DiskMode::Verified);
        CHECK(fast.result == criterion(p));
        CHECK(verified.result == criterion(p));
        CHECK(verified.verified);
        if (criterion(p)) {
            REQUIRE(verified.psi.has_value());
            REQUIRE(verified.sl.has_value());
            CHECK(verified.psi->ok);
            CHECK(verified.sl->ok);
            CHECK(verified.graph_equal);
        } else {
            CHECK(verified.witness.has_value());
        }
    }
}
