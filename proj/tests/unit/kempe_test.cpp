#include "../support/oracles.hpp"

#include <kempe/codec.hpp>
#include <kempe/generators.hpp>
#include <kempe/kempe.hpp>
#include <kempe/zmodel.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace kempe;

namespace {

auto singletons(const Graph & g) -> ColoredInstance
{
    std::vector<int> labels(static_cast<std::size_t>(g.order()));
    std::iota(labels.begin(), labels.end(), 0);
    return ColoredInstance(g, Coloring::from_labels(labels), Transversal{labels});
}

auto oracle_edges(const ColoredInstance & inst) -> std::vector<Edge>
{
    auto h = oracle::h_matrix(oracle::plain(inst));
    std::vector<Edge> out;
    for (int a = 0; a < h.n; ++a)
        for (int b = a + 1; b < h.n; ++b)
            if (h.at(a, b))
                out.emplace_back(a, b);
    return out;
}

} // namespace

TEST(Instance, RejectsImproperColoringsAndBadTransversals)
{
    Graph p3(3, {{0, 1}, {1, 2}});
    EXPECT_THROW(ColoredInstance(p3, Coloring::from_labels(std::vector<int>{0, 0, 1}), Transversal{{0, 2}}), InstanceError);
    EXPECT_THROW(ColoredInstance(p3, Coloring::from_labels(std::vector<int>{0, 1, 0}), Transversal{{0}}), InstanceError);
    EXPECT_THROW(ColoredInstance(p3, Coloring::from_labels(std::vector<int>{0, 1, 0}), Transversal{{1, 1}}), InstanceError);
    EXPECT_THROW(Coloring(3, {{0, 1}, {1, 2}}), InstanceError);
    EXPECT_THROW(Coloring(3, {{0, 1}}), InstanceError);
    EXPECT_THROW(Coloring(3, {{0, 1, 2}, {}}), InstanceError);
}

TEST(KempeChains, ZOfK2IsOnePathOnFourVertices)
{
    auto z = z_of(family({"complete", {2}}));
    auto chains = kempe_chains(z.inst);
    ASSERT_EQ(chains.size(), 1U);
    EXPECT_EQ(chains[0].vertices.size(), 4);
    EXPECT_EQ(z.inst.graph().size(), 3U);
    auto path = two_colored_path(z.inst, 0, 1);
    EXPECT_EQ(path.size(), 4U);
    EXPECT_EQ(path.front(), z.inst.rep(0));
    EXPECT_EQ(path.back(), z.inst.rep(1));
}

TEST(KempeChains, NoEdgeMeansNoChain)
{
    auto inst = singletons(Graph(2));
    EXPECT_TRUE(kempe_chains(inst).empty());
    EXPECT_EQ(kempe_chains(inst, true).size(), 2U);
}

TEST(KempeChains, TwoColouredFourCycleIsOneChain)
{
    auto c4 = family({"cycle", {4}});
    ColoredInstance inst(c4, Coloring::from_labels(std::vector<int>{0, 1, 0, 1}), Transversal{{0, 1}});
    auto chains = kempe_chains(inst);
    ASSERT_EQ(chains.size(), 1U);
    EXPECT_EQ(chains[0].vertices, c4.vertex_set());
}

TEST(KempeChains, DisjointPerPairAndEveryEdgeInExactlyOne)
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        int k = 2 + static_cast<int>(rng() % 4);
        auto inst = oracle::random_instance(rng, k + static_cast<int>(rng() % 8), k, 0.35);
        auto chains = kempe_chains(inst);
        std::map<std::pair<int, int>, VertexSet> used;
        for (const auto & c : chains) {
            EXPECT_LT(c.class_a, c.class_b);
            auto & u = used.try_emplace({c.class_a, c.class_b}, VertexSet(inst.graph().order())).first->second;
            EXPECT_FALSE(u.intersects(c.vertices));
            u |= c.vertices;
            EXPECT_TRUE(is_connected_subset(inst.graph(), c.vertices));
        }
        for (auto [u, v] : inst.graph().edges()) {
            int hits = 0;
            for (const auto & c : chains)
                hits += c.vertices.contains(u) && c.vertices.contains(v);
            EXPECT_EQ(hits, 1);
        }
    }
}

TEST(HGraph, MatchesDirectSearchOnRandomInstances)
{
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 300; ++trial) {
        int k = 1 + static_cast<int>(rng() % 6);
        auto inst = oracle::random_instance(rng, k + static_cast<int>(rng() % 9), k, 0.3);
        EXPECT_EQ(h_graph(inst).graph.edges(), oracle_edges(inst));
    }
}

TEST(HGraph, ZOfC5IsIsomorphicToC5)
{
    auto c5 = family({"cycle", {5}});
    auto h = h_graph(z_of(c5).inst).graph;
    EXPECT_EQ(canonical_key(h), canonical_key(c5));
    EXPECT_EQ(h, c5); // via (x,1) -> x
}

TEST(HGraph, SingletonK5IsComplete) { EXPECT_EQ(h_graph(singletons(family({"complete", {5}}))).graph.size(), 10U); }

TEST(HGraph, ZOfG7HasEightEdges) { EXPECT_EQ(h_graph(z_of(family({"g7", {}})).inst).graph.size(), 8U); }

TEST(HGraph, ZOfEveryGraphUpToSixIsTheGraph)
{
    for (int n = 1; n <= 6; ++n)
        for (const auto & g : enumerate_graphs(n))
            EXPECT_EQ(canonical_key(h_graph(z_of(g).inst).graph), canonical_key(g)) << to_graph6(g);
}

TEST(KempeColoring, Examples)
{
    auto k5 = is_kempe_coloring(singletons(family({"complete", {5}})));
    EXPECT_TRUE(k5.kempe);
    EXPECT_EQ(k5.connected_pairs, 10);

    auto g7 = is_kempe_coloring(z_of(family({"g7", {}})).inst);
    EXPECT_FALSE(g7.kempe);
    EXPECT_EQ(g7.connected_pairs, 8);

    Graph two_edges(4, {{0, 1}, {2, 3}});
    auto split = is_kempe_coloring(ColoredInstance(two_edges, Coloring::from_labels(std::vector<int>{0, 1, 0, 1}), Transversal{{0, 1}}));
    EXPECT_FALSE(split.kempe);
    EXPECT_EQ(split.connected_pairs, 0);
}

TEST(KempeColoring, ImpliesCompleteH)
{
    std::mt19937_64 rng(17);
    int seen = 0;
    for (int trial = 0; trial < 2000 && seen < 50; ++trial) {
        int k = 2 + static_cast<int>(rng() % 6);
        auto inst = oracle::random_instance(rng, k + static_cast<int>(rng() % 6), k, 0.7);
        if (! is_kempe_coloring(inst).kempe)
            continue;
        ++seen;
        EXPECT_EQ(h_graph(inst).graph.size(), static_cast<std::size_t>(k * (k - 1) / 2));
    }
    EXPECT_GT(seen, 0);
}

TEST(Transform, AddTransversalEdgeJoinsTheClasses)
{
    ColoredInstance inst(Graph(4), Coloring::from_labels(std::vector<int>{0, 1, 0, 1}), Transversal{{0, 1}});
    EXPECT_EQ(h_graph(inst).graph.size(), 0U);
    auto out = transform_instance(inst, AddTransversalEdge{0, 1});
    EXPECT_TRUE(h_graph(out).graph.adjacent(0, 1));
}

TEST(Transform, DisjointCliqueAddsMutuallyAdjacentClasses)
{
    auto inst = singletons(family({"path", {3}}));
    auto out = transform_instance(inst, DisjointClique{2});
    EXPECT_EQ(out.class_count(), 5);
    auto h = h_graph(out).graph;
    EXPECT_TRUE(h.adjacent(3, 4));
    EXPECT_FALSE(h.adjacent(2, 3));
    EXPECT_EQ(out.rep(3), 3);
    EXPECT_EQ(out.rep(4), 4);
}

TEST(Transform, DegenerateEdgeIsRejected)
{
    auto inst = singletons(family({"path", {3}}));
    EXPECT_THROW(transform_instance(inst, AddTransversalEdge{1, 1}), PreconditionError);
    EXPECT_THROW(transform_instance(inst, AddTransversalEdge{0, 7}), PreconditionError);
}
