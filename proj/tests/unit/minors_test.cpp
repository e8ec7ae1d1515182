#include "../support/oracles.hpp"

#include <kempe/codec.hpp>
#include <kempe/generators.hpp>
#include <kempe/minors.hpp>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <gtest/gtest.h>

using namespace kempe;

namespace {

auto boost_planar(const Graph & g) -> bool
{
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS> bg(static_cast<std::size_t>(g.order()));
    for (auto [u, v] : g.edges())
        boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

auto k(int n) -> Graph { return family({"complete", {n}}); }

} // namespace

TEST(Minor, PetersenHasK5)
{
    auto p = family({"petersen", {}});
    auto emb = has_minor(p, k(5));
    ASSERT_TRUE(emb);
    EXPECT_TRUE(oracle::embedding_ok(p, k(5), emb->bags));
    EXPECT_TRUE(embedding_problems(p, k(5), *emb).empty());
}

TEST(Minor, SmallerHostsHaveNone)
{
    EXPECT_FALSE(has_minor(k(4), k(5)));
    EXPECT_FALSE(has_minor(k(5), family({"complete_bipartite", {3, 3}})));
    EXPECT_FALSE(has_minor(family({"wagner", {}}), k(5)));
}

TEST(Minor, EmbeddingProblemsNameTheFault)
{
    auto p = family({"petersen", {}});
    auto emb = *has_minor(p, k(5));
    auto broken = emb;
    broken.bags[0] = VertexSet(10);
    EXPECT_FALSE(embedding_problems(p, k(5), broken).empty());
    broken = emb;
    broken.bags.pop_back();
    EXPECT_FALSE(embedding_problems(p, k(5), broken).empty());
}

TEST(Minor, AgreesWithBruteForceUpToSeven)
{
    std::vector<Graph> patterns = {k(3), k(4), family({"cycle", {4}})};
    for (int n = 1; n <= 7; ++n)
        for (const auto & g : enumerate_graphs(n))
            for (const auto & h : patterns) {
                auto emb = has_minor(g, h);
                EXPECT_EQ(emb.has_value(), oracle::brute_minor_exists(oracle::matrix(g), oracle::matrix(h))) << to_graph6(g);
                if (emb) {
                    EXPECT_TRUE(oracle::embedding_ok(g, h, emb->bags));
                }
            }
}

TEST(Minor, SizeLimits)
{
    EXPECT_THROW(has_minor(k(5), k(minor_pattern_limit + 1)), SizeLimitError);
    EXPECT_THROW(has_minor(Graph(minor_host_limit + 1), k(3)), SizeLimitError);
}

TEST(Planarity, Examples)
{
    EXPECT_TRUE(is_planar(k(4)));
    EXPECT_FALSE(is_planar(family({"petersen", {}})));
    auto w = nonplanarity_witness(family({"wagner", {}}));
    ASSERT_TRUE(w);
    EXPECT_EQ(w->minor, "K3,3");
    EXPECT_TRUE(oracle::embedding_ok(family({"wagner", {}}), family({"complete_bipartite", {3, 3}}), w->embedding.bags));
}

TEST(Planarity, AgreesWithBoyerMyrvoldAndEuler)
{
    for (int n = 1; n <= 7; ++n)
        for (const auto & g : enumerate_graphs(n)) {
            bool planar = is_planar(g);
            EXPECT_EQ(planar, boost_planar(g)) << to_graph6(g);
            if (planar && n >= 3) {
                EXPECT_LE(g.size(), static_cast<std::size_t>(3 * n - 6)) << to_graph6(g);
            }
        }
}

TEST(Remarks, NineOfTenPairsMeansPremisesFail)
{
    auto edges = k(5).edges();
    edges.pop_back();
    Graph nine(5, edges);
    auto sys = random_path_system({nine, 5, 2, 0.0, false});
    auto r = validate_remarks(sys.instance);
    EXPECT_FALSE(r.premises_ok);
    EXPECT_FALSE(r.counterexample);
}

TEST(Remarks, KempeCompleteInstancesAreNonplanarWithK5)
{
    auto k5 = k(5);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto sys = random_path_system({k5, seed, 2, 0.0, seed % 2 == 1});
        auto r = validate_remarks(sys.instance);
        EXPECT_TRUE(r.premises_ok);
        EXPECT_FALSE(r.counterexample);
        EXPECT_FALSE(r.planar);
        EXPECT_TRUE(r.has_k5_minor);
        EXPECT_EQ(r.planar, boost_planar(sys.instance.graph()));
    }
}

TEST(Remarks, NeedsFiveClasses)
{
    auto sys = random_path_system({k(4), 1, 0, 0.0, false});
    EXPECT_THROW(validate_remarks(sys.instance), PreconditionError);
}
