#include <doctest.h>

#include "rauzy/substitution.hpp"

using namespace rauzy;

namespace {

std::vector<Params> grid(int amax)
{
    std::vector<Params> v;
    for (int a = 1; a <= amax; ++a)
        for (int b = 1; b <= a; ++b) v.emplace_back(a, b);
    return v;
}

} // namespace

TEST_CASE("parameters outside a >= b >= 1 are rejected")
{
    CHECK_THROWS_AS(Params(1, 2), UsageError);
    CHECK_THROWS_AS(Params(3, 0), UsageError);
    CHECK_NOTHROW(Params(1, 1));
}

TEST_CASE("contact case dispatch")
{
    CHECK(Params(1, 1).contact_case() == Case::A1B1);
    CHECK(Params(3, 3).contact_case() == Case::AEqB);
    CHECK(Params(4, 1).contact_case() == Case::BEq1);
    CHECK(Params(5, 3).contact_case() == Case::AGtB);
}

TEST_CASE("substitution images")
{
    const Params tri(1, 1);
    CHECK(apply_substitution(tri, "1") == "12");
    CHECK(apply_substitution(tri, "2") == "13");
    CHECK(apply_substitution(tri, "3") == "1");
    CHECK(apply_substitution(tri, "123") == "12131");
    const Params p(3, 2);
    CHECK(apply_substitution(p, "1") == "1112");
    CHECK(apply_substitution(p, "2") == "113");
}

TEST_CASE("incidence matrix is the abelianization of the images and is unimodular")
{
    for (const auto& p : grid(6)) {
        const Mat3 m = incidence_matrix(p);
        for (int j = 0; j < 3; ++j) {
            const LatticeVec col = abelianization(apply_substitution(p, std::string(1, char('1' + j))));
            for (int i = 0; i < 3; ++i) CHECK(m[i][j] == col[i]);
        }
        CHECK(det(m) == 1);
        const Mat3 id = incidence_inverse(p) * m;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK(id[i][j] == (i == j ? 1 : 0));
        // l(sigma(w)) = M l(w)
        const Word w = "3121123";
        CHECK(abelianization(apply_substitution(p, w)) == m * abelianization(w));
    }
}

TEST_CASE("prefix-suffix graph edges describe the images")
{
    for (const auto& p : grid(7)) {
        const auto g = prefix_suffix_graph(p);
        CHECK(int(g.edges.size()) == p.a + p.b + 3);
        int into1 = 0;
        for (const auto& e : g.edges) {
            const Word img = apply_substitution(p, std::string(1, char('0' + e.to)));
            REQUIRE(e.prefix < int(img.size()));
            CHECK(img.substr(0, e.prefix) == std::string(e.prefix, '1'));
            CHECK(img[e.prefix] == char('0' + e.from));
            CHECK(g.has_edge(e.from, e.prefix, e.to));
            into1 += e.to == 1;
        }
        CHECK(into1 == p.a + 1);
        // every occurrence of a letter in an image is an edge
        int occurrences = 0;
        for (int j = 1; j <= 3; ++j) occurrences += int(apply_substitution(p, std::string(1, char('0' + j))).size());
        CHECK(occurrences == int(g.edges.size()));
    }
}

TEST_CASE("walk counts equal lengths of iterated images")
{
    // the number of length-n walks ending anywhere from i equals |sigma^n(i)| counted through predecessors,
    // here checked against the direct dynamic program over edges
    for (const auto& p : grid(4)) {
        const auto g = prefix_suffix_graph(p);
        for (Letter i = 1; i <= 3; ++i) {
            std::array<std::uint64_t, 4> cnt{0, 0, 0, 0};
            cnt[i] = 1;
            for (int n = 0; n <= 6; ++n) {
                std::uint64_t total = cnt[1] + cnt[2] + cnt[3];
                CHECK(gamma_walk_count(p, i, n) == total);
                std::array<std::uint64_t, 4> next{0, 0, 0, 0};
                for (const auto& e : g.edges) next[e.to] += cnt[e.from];
                cnt = next;
            }
        }
    }
    // |sigma^n(1)| for the Tribonacci substitution
    const Params tri(1, 1);
    Word w = "1";
    for (int n = 0; n < 8; ++n) w = apply_substitution(tri, w);
    CHECK(w.size() == 149);
}
