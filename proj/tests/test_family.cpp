#include "oracles.hpp"
#include "rsat/construct.hpp"
#include "rsat/enumerate.hpp"
#include "rsat/family.hpp"
#include "rsat/named_graphs.hpp"

#include <gtest/gtest.h>

using namespace rsat;

TEST(Fhat, SpecExamples)
{
    EXPECT_TRUE(in_family_Fhat(lambda2(), 2));
    auto k3 = in_family_Fhat(ColoredGraph::rainbow(graphs::complete(3)), 2);
    EXPECT_FALSE(k3);
    EXPECT_EQ(k3.witness.property, 1);
    EXPECT_TRUE(in_family_Fhat(lambda3_alt(), 3));
    EXPECT_TRUE(in_family_Fhat(lambda3(), 3));
    EXPECT_TRUE(in_family_Fhat(ColoredGraph(2), 1));
}

TEST(Fhat, WitnessesNameTheProperty)
{
    // Path on three vertices: deleting the middle leaves no edge.
    auto p3 = in_family_Fhat(ColoredGraph::rainbow(graphs::path(3)), 2);
    ASSERT_FALSE(p3);
    EXPECT_EQ(p3.witness.property, 2);
    EXPECT_EQ(p3.witness.vertices, (std::vector<Vertex>{1}));

    // Two disjoint edges of one color: every K_2 uses it.
    auto mono = in_family_Fhat(ColoredGraph::monochrome(graphs::copies(2, graphs::complete(2))), 2);
    ASSERT_FALSE(mono);
    EXPECT_EQ(mono.witness.property, 3);
    EXPECT_EQ(mono.witness.color, 0);
}

TEST(Fhat, AgreesWithNaiveDefinition)
{
    std::mt19937 rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        auto g = oracle::random_colored(rng, 2 + trial % 5, 0.7, 2 + trial % 4);
        for (int k = 1; k <= 3; ++k)
            EXPECT_EQ(in_family_Fhat(g, k).holds, oracle::in_fhat(g, k));
    }
}

TEST(Fhat, MembersAreLargeEnough)
{
    std::mt19937 rng(43);
    for (int trial = 0; trial < 400; ++trial) {
        auto g = oracle::random_colored(rng, 2 + trial % 5, 0.8, 2 + trial % 5);
        for (int k = 1; k <= 4; ++k) {
            if (!in_family_Fhat(g, k))
                continue;
            EXPECT_GE(g.order(), k + 1);
            if (k >= 3) {
                EXPECT_GE(g.order(), k + 2);
            }
        }
    }
}

TEST(Fhat, InvariantUnderRelabelingAndRenaming)
{
    std::mt19937 rng(47);
    for (const auto& base : {lambda2(), lambda3(), lambda3_alt(), nonstab_lambda(3)}) {
        for (int trial = 0; trial < 10; ++trial) {
            auto perm = oracle::random_permutation(rng, base.order());
            ColoredGraph h(base.order());
            for (const auto& e : base.edges())
                h.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)],
                           7 * base.color(e) + 3);
            for (int k = 2; k <= 3; ++k)
                EXPECT_EQ(in_family_Fhat(h, k).holds, in_family_Fhat(base, k).holds);
        }
    }
}

TEST(Matching, AgreesWithBruteForce)
{
    std::mt19937 rng(53);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = oracle::random_graph(rng, trial % 11, 0.3);
        EXPECT_EQ(maximum_matching_size(g), oracle::max_matching(g));
    }
    EXPECT_EQ(maximum_matching_size(graphs::cycle(5)), 2);
    EXPECT_EQ(maximum_matching_size(graphs::petersen()), 5);
}

TEST(FDoublePrime, SpecExamples)
{
    EXPECT_TRUE(in_family_F_doubleprime(complement(graphs::copies(2, graphs::complete(2))), 4));
    EXPECT_FALSE(in_family_F_doubleprime(graphs::complete(4), 4));
    EXPECT_FALSE(in_family_F_doubleprime(graphs::empty(4), 4));
    EXPECT_THROW(in_family_F_doubleprime(graphs::empty(2), 2), ParameterError);
}

TEST(Lemma2, SpecExamples)
{
    const Graph two_triangles = graphs::copies(2, graphs::complete(3));
    EXPECT_TRUE(lemma2_hypothesis(two_triangles));
    EXPECT_TRUE(lemma2_conclusion(two_triangles));
    EXPECT_FALSE(lemma2_hypothesis(graphs::complete(3)));
    const Graph cp = complement(graphs::petersen());
    EXPECT_TRUE(lemma2_hypothesis(cp));
    EXPECT_TRUE(lemma2_conclusion(cp));
    EXPECT_TRUE(robust_clique_check(cp, 2));
    EXPECT_EQ(cp.order(), 10);
}

TEST(Lemma2, HoldsOnAllSmallGraphs)
{
    for (int n = 0; n <= 7; ++n)
        for (const auto& g : enumerate_graphs(n))
            if (lemma2_hypothesis(g)) {
                EXPECT_TRUE(lemma2_conclusion(g)) << n;
            }
}

TEST(RobustClique, SpecExamples)
{
    EXPECT_FALSE(robust_clique_check(graphs::complete(5), 1));
    EXPECT_TRUE(robust_clique_check(graphs::copies(3, graphs::complete(4)), 2));
    EXPECT_FALSE(robust_clique_check(graphs::copies(2, graphs::complete(4)), 2));
    EXPECT_TRUE(robust_clique_check(graphs::complete(5), 0));
    EXPECT_THROW(robust_clique_check(graphs::complete(5), -1), ParameterError);
}

TEST(RobustClique, AgreesWithNaiveDeletion)
{
    std::mt19937 rng(59);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = oracle::random_graph(rng, 3 + trial % 6, 0.6);
        const int omega = oracle::clique_number(g);
        for (int t = 0; t <= 2; ++t) {
            bool robust = true;
            for (int s = 0; s <= t; ++s)
                oracle::for_each_subset(g.order(), s, [&](const std::vector<int>& drop) {
                    VertexSet d;
                    for (int v : drop)
                        d.set(v);
                    robust = robust && oracle::clique_number(remove_vertices(g, d)) == omega;
                });
            EXPECT_EQ(robust_clique_check(g, t), robust);
        }
    }
}
