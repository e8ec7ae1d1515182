#include "../support/oracles.hpp"

#include <kempe/generators.hpp>
#include <kempe/graph.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace kempe;

namespace {

auto random_graph(std::mt19937_64 & rng, int n, double p) -> Graph
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.emplace_back(u, v);
    return Graph(n, edges);
}

} // namespace

TEST(GraphConstruction, RejectsLoopsParallelEdgesAndBadIndices)
{
    EXPECT_THROW(Graph(3, {{0, 0}}), GraphError);
    EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), GraphError);
    EXPECT_THROW(Graph(3, {{0, 3}}), GraphError);
    EXPECT_THROW(Graph(-1), GraphError);
}

TEST(GraphConstruction, NeighbourListsAreSortedAndSymmetric)
{
    Graph g(5, {{3, 1}, {0, 3}, {4, 3}, {1, 2}});
    auto nb = g.neighbors(3);
    EXPECT_EQ(std::vector<int>(nb.begin(), nb.end()), (std::vector<int>{0, 1, 4}));
    for (auto [u, v] : g.edges()) {
        EXPECT_LT(u, v);
        EXPECT_TRUE(g.adjacent(v, u));
    }
    EXPECT_EQ(g.size(), 4U);
}

TEST(Components, PathIsOneComponent)
{
    auto comps = components(family({"path", {3}}));
    ASSERT_EQ(comps.size(), 1U);
    EXPECT_EQ(comps[0].size(), 3);
}

TEST(Components, EdgelessGraphGivesSingletons)
{
    auto comps = components(Graph(3));
    ASSERT_EQ(comps.size(), 3U);
    for (int i = 0; i < 3; ++i)
        EXPECT_EQ(comps[static_cast<std::size_t>(i)], VertexSet(3, {i}));
}

TEST(Components, G7WithoutTheAntipodalPair)
{
    auto g = family({"g7", {}});
    auto within = g.vertex_set();
    within.erase(0);
    within.erase(3);
    auto comps = components(g, within);
    ASSERT_EQ(comps.size(), 3U);
    EXPECT_EQ(comps[0], VertexSet(7, {1, 2}));
    EXPECT_EQ(comps[1], VertexSet(7, {4, 5}));
    EXPECT_EQ(comps[2], VertexSet(7, {6}));
}

TEST(Components, PartitionIntoConnectedPiecesOnRandomGraphs)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        auto g = random_graph(rng, 1 + static_cast<int>(rng() % 12), 0.15);
        auto comps = components(g);
        auto m = oracle::matrix(g);
        VertexSet seen(g.order());
        int last_min = -1;
        for (const auto & c : comps) {
            EXPECT_FALSE(seen.intersects(c));
            seen |= c;
            EXPECT_GT(c.first(), last_min);
            last_min = c.first();
            std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
            c.for_each([&](int v) { in[static_cast<std::size_t>(v)] = 1; });
            EXPECT_TRUE(oracle::connected(m, in));
            // maximal: no edge leaves the component
            c.for_each([&](int v) {
                for (int w : g.neighbors(v))
                    EXPECT_TRUE(c.contains(w));
            });
        }
        EXPECT_EQ(seen, g.vertex_set());
    }
}

TEST(Contract, PathInsideSixCycleGivesFourCycle)
{
    auto c6 = family({"cycle", {6}});
    std::vector<VertexSet> parts{VertexSet(6, {0, 1, 2})};
    auto result = contract(c6, parts);
    EXPECT_EQ(result.graph.edges(), (std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}}));
    EXPECT_EQ(canonical_key(result.graph), canonical_key(family({"cycle", {4}})));
    EXPECT_EQ(result.map, (std::vector<int>{0, 0, 0, 1, 2, 3}));
}

TEST(Contract, SingletonPartIsIdentity)
{
    auto g = family({"petersen", {}});
    std::vector<VertexSet> parts{VertexSet(10, {4})};
    auto result = contract(g, parts);
    EXPECT_EQ(result.graph, g);
    for (int v = 0; v < 10; ++v)
        EXPECT_EQ(result.map[static_cast<std::size_t>(v)], v);
}

TEST(Contract, EdgeOfTriangleCollapsesToK2)
{
    std::vector<VertexSet> parts{VertexSet(3, {0, 1})};
    auto result = contract(family({"complete", {3}}), parts);
    EXPECT_EQ(result.graph, family({"complete", {2}}));
}

TEST(Contract, RejectsDisconnectedAndOverlappingParts)
{
    auto c6 = family({"cycle", {6}});
    std::vector<VertexSet> disconnected{VertexSet(6, {0, 2})};
    EXPECT_THROW(contract(c6, disconnected), PreconditionError);
    std::vector<VertexSet> overlapping{VertexSet(6, {0, 1}), VertexSet(6, {1, 2})};
    EXPECT_THROW(contract(c6, overlapping), PreconditionError);
}

TEST(Contract, UnmergedAdjacencyIsPreserved)
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = random_graph(rng, 8, 0.35);
        int v = static_cast<int>(rng() % 8);
        if (g.degree(v) == 0)
            continue;
        int w = g.neighbors(v)[0];
        std::vector<VertexSet> parts{VertexSet(8, {v, w})};
        auto r = contract(g, parts);
        for (int a = 0; a < 8; ++a)
            for (int b = 0; b < 8; ++b) {
                if (a == b || a == v || a == w || b == v || b == w)
                    continue;
                EXPECT_EQ(g.adjacent(a, b), r.graph.adjacent(r.map[static_cast<std::size_t>(a)], r.map[static_cast<std::size_t>(b)]));
            }
        for (int a = 0; a < 8; ++a)
            if (a != v && a != w) {
                EXPECT_EQ(g.adjacent(a, v) || g.adjacent(a, w),
                    r.graph.adjacent(r.map[static_cast<std::size_t>(a)], r.map[static_cast<std::size_t>(v)]));
            }
    }
}

TEST(CanonicalKey, InvariantUnderRelabelling)
{
    auto c4 = family({"cycle", {4}});
    std::vector<int> perm{0, 1, 2, 3};
    do {
        EXPECT_EQ(canonical_key(relabel(c4, perm)), canonical_key(c4));
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(CanonicalKey, DistinguishesCycleFromPath)
{
    EXPECT_NE(canonical_key(family({"cycle", {4}})), canonical_key(family({"path", {4}})));
}

TEST(CanonicalKey, ElevenClassesOnFourVertices)
{
    std::set<std::string> keys;
    for (std::uint32_t mask = 0; mask < 64; ++mask) {
        std::vector<Edge> edges;
        int bit = 0;
        for (int j = 1; j < 4; ++j)
            for (int i = 0; i < j; ++i, ++bit)
                if ((mask >> bit) & 1U)
                    edges.emplace_back(i, j);
        keys.insert(canonical_key(Graph(4, edges)));
    }
    EXPECT_EQ(keys.size(), oracle::count_unlabelled(4));
    EXPECT_EQ(keys.size(), 11U);
}

TEST(CanonicalKey, AgreesWithBruteForceIsomorphismOnRandomPairs)
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 1 + static_cast<int>(rng() % 7);
        auto g = random_graph(rng, n, 0.5);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        EXPECT_EQ(canonical_key(g), canonical_key(relabel(g, perm)));
        auto h = random_graph(rng, n, 0.5);
        EXPECT_EQ(canonical_key(g) == canonical_key(h), oracle::canonical_form(oracle::matrix(g)) == oracle::canonical_form(oracle::matrix(h)));
    }
}

TEST(CanonicalKey, RejectsLargeGraphs) { EXPECT_THROW(canonical_key(Graph(11)), SizeLimitError); }

TEST(Structure, GirthBipartiteAndTriangles)
{
    EXPECT_EQ(girth(family({"petersen", {}})), 5);
    EXPECT_EQ(girth(family({"g7", {}})), 5);
    EXPECT_EQ(girth(family({"path", {5}})), 0);
    EXPECT_TRUE(is_bipartite(family({"cycle", {6}})));
    EXPECT_FALSE(is_bipartite(family({"cycle", {5}})));
    EXPECT_TRUE(is_triangle_free(family({"wagner", {}})));
    EXPECT_FALSE(is_triangle_free(family({"prism", {}})));
}

TEST(Structure, CutVerticesMatchBruteForce)
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = random_graph(rng, 2 + static_cast<int>(rng() % 8), 0.3);
        auto cuts = cut_vertices(g);
        auto before = components(g).size();
        for (int v = 0; v < g.order(); ++v) {
            auto within = g.vertex_set();
            within.erase(v);
            bool cut = components(g, within).size() > before - (g.degree(v) == 0 ? 1 : 0);
            EXPECT_EQ(cut, std::find(cuts.begin(), cuts.end(), v) != cuts.end()) << "vertex " << v;
        }
    }
}
