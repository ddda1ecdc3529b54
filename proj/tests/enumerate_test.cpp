// Weight-ordered global enumeration of paths and cycles.

#include <gtest/gtest.h>

#include "kssp/enumerate.hpp"
#include "kssp/oracles.hpp"
#include "kssp/random_graph.hpp"
#include "test_graphs.hpp"

using namespace kssp;
namespace tg = kssp::testgraphs;

namespace {

std::vector<VertexPath> brute_all_paths(const Graph& g) {
    std::vector<VertexPath> all;
    for (VertexId x = 1; x <= g.vertex_count(); ++x)
        for (VertexId y = 1; y <= g.vertex_count(); ++y) {
            if (x == y) continue;
            auto paths = oracles::brute_paths(g, x, y, std::numeric_limits<std::size_t>::max());
            all.insert(all.end(), paths.begin(), paths.end());
        }
    std::sort(all.begin(), all.end(), path_less);
    return all;
}

Graph complete_digraph(std::uint32_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Weight> weight(1, 10);
    std::vector<Edge> edges;
    for (VertexId u = 1; u <= n; ++u)
        for (VertexId v = 1; v <= n; ++v)
            if (u != v) edges.push_back({u, v, weight(rng)});
    return Graph::build(n, true, std::move(edges));
}

}  // namespace

TEST(AllSisp, TriangleEmitsAllSixPaths) {
    auto paths = all_sisp(tg::tri(), 10);
    ASSERT_EQ(paths.size(), 6u);
    std::vector<Weight> wts;
    for (const auto& p : paths) wts.push_back(p.weight.wt);
    EXPECT_EQ(wts, (std::vector<Weight>{1, 1, 1, 2, 2, 2}));
}

TEST(AllSisp, SingleEdgeGraph) {
    Graph g = Graph::build(2, true, {{1, 2, 5}});
    auto paths = all_sisp(g, 10);
    ASSERT_EQ(paths.size(), 1u);
    EXPECT_EQ(paths[0].weight.wt, 5u);
}

TEST(AllSisp, DiamondPrefixMatchesBruteForce) {
    auto want = brute_all_paths(tg::diamond());
    auto got = all_sisp(tg::diamond(), 8);
    ASSERT_GE(want.size(), 8u);
    for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(got[i], want[i]);
}

TEST(AllSisp, CursorIsResumable) {
    AllSispCursor cursor(tg::diamond());
    std::vector<VertexPath> first_batch, second_batch;
    for (int i = 0; i < 3; ++i) first_batch.push_back(*cursor.next());
    while (auto p = cursor.next()) second_batch.push_back(*p);
    auto all = all_sisp(tg::diamond(), 1000);
    ASSERT_EQ(first_batch.size() + second_batch.size(), all.size());
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(first_batch[i], all[i]);
    for (std::size_t i = 3; i < all.size(); ++i) EXPECT_EQ(second_batch[i - 3], all[i]);
}

TEST(AllSisp, CompleteEmissionEqualsBruteForce) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        RandomGraphParams params{2 + static_cast<std::uint32_t>(seed % 5), 0.45, 1, 10,
                                 seed % 3 == 0 ? 0.2 : 0.0, seed % 5 != 0};
        Graph g = random_graph(params, seed);
        auto want = brute_all_paths(g);
        auto got = all_sisp(g, want.size() + 5);
        ASSERT_EQ(got.size(), want.size()) << "seed " << seed;
        for (std::size_t i = 0; i < want.size(); ++i) EXPECT_EQ(got[i], want[i]) << "seed " << seed;
    }
    for (std::uint32_t n = 3; n <= 5; ++n) {
        Graph g = complete_digraph(n, n);
        auto want = brute_all_paths(g);
        auto got = all_sisp(g, want.size() + 5);
        ASSERT_EQ(got.size(), want.size());
        for (std::size_t i = 0; i < want.size(); ++i) EXPECT_EQ(got[i], want[i]);
    }
}

TEST(AllSisp, ExtensionSetsStaySmall) {
    Graph g = complete_digraph(6, 99);
    AllSispCursor cursor(g);
    while (cursor.next()) {
    }
    const std::uint32_t n = g.vertex_count();
    for (PathId id = 0; id < cursor.record_count(); ++id) {
        bool trivial = cursor.store().rec(id).first_edge == kNoEdge;
        if (trivial) continue;
        EXPECT_LE(cursor.left_set(id).size(), n - 2);
        EXPECT_LE(cursor.right_set(id).size(), n - 2);
    }
}

TEST(AllSisc, SpecExamples) {
    auto cycles = all_sisc(tg::cyc2(), 2);
    ASSERT_EQ(cycles.size(), 2u);
    EXPECT_EQ(cycles[0].weight.wt, 2u);
    EXPECT_EQ(cycles[1].weight.wt, 5u);

    auto tri_cycles = all_sisc(tg::tri(), 3);
    ASSERT_EQ(tri_cycles.size(), 1u);
    EXPECT_EQ(tri_cycles[0].weight.wt, 3u);

    EXPECT_TRUE(all_sisc(tg::dag(), 5).empty());
}

TEST(AllSisc, RefusesUndirected) {
    Graph g = Graph::build(3, false, {{1, 2, 1}, {2, 3, 1}, {1, 3, 1}});
    EXPECT_THROW(all_sisc(g, 1), std::invalid_argument);
}

TEST(AllSisc, CompleteEmissionEqualsBruteForce) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        RandomGraphParams params{2 + static_cast<std::uint32_t>(seed % 5), 0.45, 1, 10,
                                 seed % 3 == 0 ? 0.2 : 0.0, true};
        Graph g = random_graph(params, seed);
        auto want = oracles::brute_cycles(g, std::numeric_limits<std::size_t>::max());
        auto got = all_sisc(g, want.size() + 5);
        ASSERT_EQ(got.size(), want.size()) << "seed " << seed;
        for (std::size_t i = 0; i < want.size(); ++i) {
            EXPECT_EQ(got[i].vertices, want[i].vertices) << "seed " << seed;
            EXPECT_EQ(got[i].weight, want[i].weight) << "seed " << seed;
        }
    }
}

TEST(AllSisc, CursorIsResumable) {
    AllSiscCursor cursor(tg::cyc2());
    auto first = cursor.next();
    ASSERT_TRUE(first);
    EXPECT_EQ(first->weight.wt, 2u);
    auto second = cursor.next();
    ASSERT_TRUE(second);
    EXPECT_EQ(second->weight.wt, 5u);
    EXPECT_FALSE(cursor.next());
}
