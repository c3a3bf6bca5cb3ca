#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "packlab/errors.hpp"
#include "packlab/graph.hpp"

namespace packlab {
namespace {

using namespace fixtures;

TEST(BuildGraph, TriangleAndCycle) {
    const Graph t = k3();
    EXPECT_EQ(t.vertex_count(), 3u);
    EXPECT_EQ(t.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}}));
    const Graph c = c4();
    EXPECT_EQ(c.edge_count(), 4u);
    for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(c.degree(v), 2u);
}

TEST(BuildGraph, RejectsLoopsDuplicatesAndRange) {
    EXPECT_THROW(build_graph(2, {{0, 0}}), InputError);
    EXPECT_THROW(build_graph(3, {{0, 1}, {1, 0}}), InputError);
    EXPECT_THROW(build_graph(3, {{0, 1}, {0, 1}}), InputError);
    EXPECT_THROW(build_graph(3, {{0, 3}}), InputError);
}

TEST(Distances, PathAndUnreachable) {
    const auto t = shortest_path_distances(p4(), Vertex{0});
    ASSERT_EQ(t.source(), Vertex{0});
    for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(t.at(0, v), Distance{v});
    const Graph k3k1 = build_graph(4, {{0, 1}, {1, 2}, {0, 2}});
    EXPECT_EQ(shortest_path_distances(k3k1, Vertex{0}).at(0, 3), std::nullopt);
}

TEST(Distances, ClauseGadgetAToB) {
    using namespace gadget;
    EXPECT_EQ(shortest_path_distances(clause_gadget(), Vertex{a}).at(a, b), Distance{3});
}

TEST(Distances, AllPairsSymmetricAndTriangleInequality) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = random_graph(9, 0.3, seed);
        const auto t = shortest_path_distances(g);
        const auto f = oracle::floyd(g);
        for (Vertex u = 0; u < 9; ++u)
            for (Vertex v = 0; v < 9; ++v) {
                EXPECT_EQ(t.at(u, v), t.at(v, u));
                if (f[u][v] >= oracle::kInf) {
                    EXPECT_FALSE(t.at(u, v).has_value());
                } else {
                    EXPECT_EQ(t.at(u, v), Distance{static_cast<std::uint32_t>(f[u][v])});
                }
                for (Vertex w = 0; w < 9; ++w)
                    if (t.at(u, w) && t.at(w, v)) { EXPECT_LE(*t.at(u, v), *t.at(u, w) + *t.at(w, v)); }
            }
    }
}

TEST(GraphPower, Examples) {
    EXPECT_EQ(graph_power(p4(), 2), build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3}}));
    const Graph g = random_graph(8, 0.4, 3);
    EXPECT_EQ(graph_power(g, 1), g);
    const Graph k6 = oracle::graph_from_mask(6, (1u << 15) - 1);
    EXPECT_EQ(graph_power(c6(), 3), k6);
    EXPECT_THROW(graph_power(g, 0), InputError);
}

TEST(GraphPower, KeepsComponentsApart) {
    const Graph two_edges = build_graph(4, {{0, 1}, {2, 3}});
    EXPECT_EQ(graph_power(two_edges, 5), two_edges);
}

// Property: d_{G^a}(u,v) = ceil(d_G(u,v) / a), and (G^a)^b = G^{ab}.
TEST(GraphPower, DistanceCeilingAndComposition) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const std::size_t n = 4 + seed % 9;
        const Graph g = random_graph(n, 0.25, seed);
        const auto dg = oracle::floyd(g);
        for (unsigned a = 1; a <= 3; ++a) {
            const auto dp = oracle::floyd(graph_power(g, a));
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = 0; v < n; ++v) {
                    if (dg[u][v] >= oracle::kInf) {
                        EXPECT_GE(dp[u][v], oracle::kInf);
                    } else {
                        EXPECT_EQ(dp[u][v], (dg[u][v] + static_cast<int>(a) - 1) / static_cast<int>(a));
                    }
                }
            for (unsigned b = 1; b <= 3; ++b) EXPECT_EQ(graph_power(graph_power(g, a), b), graph_power(g, a * b));
        }
    }
}

TEST(LineGraph, Examples) {
    EXPECT_EQ(line_graph(k3()).graph, k3());
    EXPECT_EQ(line_graph(p4()).graph, build_graph(3, {{0, 1}, {1, 2}}));
    const LineGraph ls = line_graph(star13());
    EXPECT_EQ(ls.graph, k3());
    EXPECT_EQ(ls.edge_map, (std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}}));
}

TEST(LineGraph, AdjacencyIffSharedEndpoint) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = random_graph(8, 0.4, seed);
        const LineGraph lg = line_graph(g);
        ASSERT_TRUE(std::is_sorted(lg.edge_map.begin(), lg.edge_map.end()));
        for (Vertex i = 0; i < lg.edge_map.size(); ++i)
            for (Vertex j = i + 1; j < lg.edge_map.size(); ++j) {
                const Edge a = lg.edge_map[i], b = lg.edge_map[j];
                const bool share = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
                EXPECT_EQ(lg.graph.adjacent(i, j), share);
            }
    }
}

TEST(Simplicial, Examples) {
    EXPECT_TRUE(simplicial_vertices(c4()).empty());
    EXPECT_EQ(simplicial_vertices(star13()), (VertexSet{1, 2, 3}));
    EXPECT_EQ(simplicial_vertices(k3()), (VertexSet{0, 1, 2}));
    EXPECT_EQ(simplicial_vertices(build_graph(2, {})), (VertexSet{0, 1}));
}

TEST(TwinClasses, Examples) {
    EXPECT_EQ(twin_classes(k3()).classes, (std::vector<VertexSet>{{0, 1, 2}}));
    EXPECT_EQ(twin_classes(star13()).classes, (std::vector<VertexSet>{{1}, {2}, {3}}));
    EXPECT_EQ(twin_classes(two_triangles_bridged()).classes, (std::vector<VertexSet>{{0, 1}, {4, 5}}));
}

TEST(Transversal, Examples) {
    EXPECT_EQ(transversal(twin_classes(k3())), (VertexSet{0}));
    EXPECT_EQ(transversal(twin_classes(k3()), TieBreak::HighestId), (VertexSet{2}));
    EXPECT_EQ(transversal(twin_classes(star13())), (VertexSet{1, 2, 3}));
    EXPECT_TRUE(transversal(TwinClassPartition{}).empty());
}

// Properties over all graphs on 5 vertices: transversals are independent and
// the simplicial vertices induce disjoint cliques whose vertex sets are the twin classes.
TEST(TwinClasses, StructureOnAllFiveVertexGraphs) {
    for (std::uint64_t mask = 0; mask < 1024; ++mask) {
        const Graph g = oracle::graph_from_mask(5, mask);
        const auto p = twin_classes(g);
        EXPECT_TRUE(is_independent(g, transversal(p)));
        EXPECT_TRUE(is_independent(g, transversal(p, TieBreak::HighestId)));

        VertexSet all;
        for (const auto& cls : p.classes) {
            EXPECT_TRUE(is_clique(g, cls));
            for (Vertex u : cls)
                for (Vertex v : cls) EXPECT_EQ(g.closed_neighborhood(u), g.closed_neighborhood(v));
            all.insert(all.end(), cls.begin(), cls.end());
        }
        std::sort(all.begin(), all.end());
        EXPECT_EQ(all, simplicial_vertices(g));
        // Components of G[S(G)] are exactly the classes.
        for (std::size_t a = 0; a < p.classes.size(); ++a)
            for (std::size_t b = a + 1; b < p.classes.size(); ++b)
                for (Vertex u : p.classes[a])
                    for (Vertex v : p.classes[b]) EXPECT_FALSE(g.adjacent(u, v));
    }
}

TEST(RandomGraph, ExtremesAndDeterminism) {
    EXPECT_EQ(random_graph(5, 0.0, 42).edge_count(), 0u);
    EXPECT_EQ(random_graph(5, 1.0, 42).edge_count(), 10u);
    EXPECT_EQ(random_graph(10, 0.3, 7), random_graph(10, 0.3, 7));
    EXPECT_NE(random_graph(30, 0.3, 7), random_graph(30, 0.3, 8));
    EXPECT_THROW(random_graph(5, 1.5, 0), InputError);
}

TEST(Connectivity, DiameterAndConnected) {
    EXPECT_EQ(diameter(p4()), Distance{3});
    EXPECT_EQ(diameter(build_graph(3, {{0, 1}})), std::nullopt);
    EXPECT_TRUE(is_connected(build_graph(1, {})));
    EXPECT_FALSE(is_connected(build_graph(0, {})));
}

}  // namespace
}  // namespace packlab
