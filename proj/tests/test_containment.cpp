#include "oracles.hpp"

#include "orturan/canon.hpp"
#include "orturan/containment.hpp"

#include <doctest.h>

using namespace orturan;

TEST_CASE("containsCopy agrees with exhaustive injections")
{
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const auto host = oracle::randomGraph(static_cast<Vertex>(2 + seed % 6), seed, 1 + seed % 3, 3);
        const auto f = oracle::randomGraph(static_cast<Vertex>(1 + (seed / 6) % 4), seed * 3 + 5, 1, 2);
        const auto found = containsCopy(host, f);
        CHECK(found.has_value() == oracle::naiveContains(oracle::toDense(host), oracle::toDense(f)));
        if (found)
            CHECK(isEmbedding(host, f, *found));
    }
}

TEST_CASE("containsCopyUsing only reports copies through the vertex")
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto host = oracle::randomGraph(static_cast<Vertex>(3 + seed % 5), seed, 2, 3);
        const auto f = OrientedGraph::fromArcs(3, {{0, 1}, {1, 2}});
        const Vertex v = static_cast<Vertex>(seed % host.n());
        // Ordered triples through v.
        bool through = false;
        const auto d = oracle::toDense(host);
        for (Vertex a = 0; a < host.n(); ++a)
            for (Vertex b = 0; b < host.n(); ++b)
                for (Vertex c = 0; c < host.n(); ++c)
                    if (a != b && b != c && a != c && (a == v || b == v || c == v) && d.adj[a][b] && d.adj[b][c])
                        through = true;
        const auto found = containsCopyUsing(host, f, v);
        CHECK(found.has_value() == through);
        if (found) {
            CHECK(isEmbedding(host, f, *found));
            bool usesV = false;
            for (auto& a : found->assignment)
                usesV = usesV || *a == v;
            CHECK(usesV);
        }
    }
}

TEST_CASE("isEmbedding requires injectivity")
{
    const auto host = OrientedGraph::fromArcs(3, {{0, 1}, {1, 2}});
    const auto f = OrientedGraph::fromArcs(3, {{0, 1}});
    VertexMap m(3, 3);
    m.assignment = {0, 1, 1};
    CHECK_FALSE(isEmbedding(host, f, m));
    m.assignment = {0, 1, 2};
    CHECK(isEmbedding(host, f, m));
}

TEST_CASE("universal checks over tournaments")
{
    const auto c3 = OrientedGraph::fromArcs(3, {{0, 1}, {1, 2}, {2, 0}});
    auto r = allTournamentsContain(3, c3);
    CHECK_FALSE(r.holds);
    REQUIRE(r.counterexample);
    CHECK(isIsomorphic(*r.counterexample, OrientedGraph::fromArcs(3, {{0, 1}, {0, 2}, {1, 2}})));

    for (Vertex k = 2; k <= 5; ++k) {
        std::vector<Arc> arcs;
        for (Vertex i = 0; i + 1 < k; ++i)
            arcs.emplace_back(i, i + 1);
        const auto path = OrientedGraph::fromArcs(k, arcs);
        CHECK(allTournamentsContain(k, path).holds);
        CHECK(allTournamentsContain(k, path, 4).holds);
        // Cross-check on labeled tournaments.
        bool all = true;
        oracle::forEachLabeled(k, true, [&](const oracle::Dense& t) {
            all = all && oracle::naiveContains(t, oracle::toDense(path));
        });
        CHECK(all);
    }
}

TEST_CASE("universal checks over orientations")
{
    // Every orientation of a triangle has a directed P3; the alternating C4 does not.
    UndirectedGraph triangle{3, {{0, 1}, {0, 2}, {1, 2}}};
    const auto p3 = OrientedGraph::fromArcs(3, {{0, 1}, {1, 2}});
    CHECK(allOrientationsContain(triangle, p3).holds);
    UndirectedGraph square{4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}};
    const auto r = allOrientationsContain(square, p3);
    CHECK_FALSE(r.holds);
    REQUIRE(r.counterexample);
    CHECK(isFree(*r.counterexample, p3));
    CHECK(allOrientationsContain(square, p3, 3).counterexample == r.counterexample);

    const auto arc = OrientedGraph::fromArcs(2, {{0, 1}});
    CHECK(allOrientationsContain(triangle, arc).holds);

    UndirectedGraph tooBig{8, {}};
    for (Vertex i = 0; i < 8; ++i)
        for (Vertex j = i + 1; j < 8; ++j)
            tooBig.edges.emplace_back(i, j);
    CHECK_THROWS_AS(allOrientationsContain(tooBig, arc), Error);
}
