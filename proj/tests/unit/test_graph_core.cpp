#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "topocode/combinatorics.hpp"
#include "topocode/graph.hpp"

using namespace topocode;

namespace {

std::vector<int> bfs_distances(const Graph& g, int s) {
    auto adj = g.adjacency();
    std::vector<int> dist(g.p, -1), queue = {s};
    dist[s] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (int w : adj[queue[i]])
            if (dist[w] < 0) dist[w] = dist[queue[i]] + 1, queue.push_back(w);
    return dist;
}

int brute_diameter(const Graph& g) {
    int best = 0;
    for (int s = 0; s < g.p; ++s) {
        auto d = bfs_distances(g, s);
        best = std::max(best, *std::max_element(d.begin(), d.end()));
    }
    return best;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    std::vector<Edge> es;
    for (auto [u, v] : g.edges) es.push_back({perm[u], perm[v]});
    return Graph::make(g.p, es);
}

}  // namespace

TEST(LinForm, ArithmeticAndOrder) {
    LinForm a(1, 3), b(0, 5);
    EXPECT_EQ(a + b, LinForm(1, 8));
    EXPECT_EQ(a - b, LinForm(1, -2));
    EXPECT_EQ(3 * a, LinForm(3, 9));
    EXPECT_LT(LinForm(0, 1000), LinForm(1, 0));
    EXPECT_EQ(sym_abs(LinForm(-1, 4)), LinForm(1, -4));
    EXPECT_EQ(sym_abs(LinForm(0, -4)), LinForm(0, 4));
    EXPECT_EQ(a.eval(7, 5), 22);
}

TEST(LinForm, ParseAndFormatRoundTrip) {
    for (const auto& f : {LinForm(0, 0), LinForm(1, 0), LinForm(2, 5), LinForm(-1, 4), LinForm(0, -7), LinForm(3, -2)})
        EXPECT_EQ(parse_linform(to_string(f)), f);
    EXPECT_EQ(parse_linform("k+3d"), LinForm(1, 3));
    EXPECT_EQ(parse_linform("2k - d"), LinForm(2, -1));
    EXPECT_EQ(parse_linform("12"), LinForm(0, 12));
    EXPECT_THROW(parse_linform("k++"), Error);
    EXPECT_THROW(parse_linform(""), Error);
}

TEST(LinForm, OverflowIsAnError) {
    LinForm big(0, std::numeric_limits<std::int64_t>::max());
    EXPECT_THROW(big + LinForm(0, 1), Error);
}

TEST(Graph, MakeValidatesAndSortsEdges) {
    Graph g = Graph::make(3, {{2, 1}, {0, 1}});
    EXPECT_EQ(g.edges, (std::vector<Edge>{{0, 1}, {1, 2}}));
    EXPECT_EQ(g.edge_index(1, 2), 1);
    EXPECT_THROW(Graph::make(2, {{0, 0}}), Error);
    EXPECT_THROW(Graph::make(2, {{0, 1}, {1, 0}}), Error);
    EXPECT_THROW(Graph::make(2, {{0, 2}}), Error);
    EXPECT_THROW(Graph::make(2, {{0, 1}}, {0, 0}), Error);
}

TEST(Graph, TwoColoringOfEvenAndOddCycles) {
    EXPECT_TRUE(two_coloring(cycle_graph(6)).has_value());
    EXPECT_FALSE(two_coloring(cycle_graph(5)).has_value());
    Graph b = with_bipartition(path_graph(4));
    EXPECT_EQ(b.X(), (std::vector<int>{0, 2}));
}

TEST(Graph, RandomTreesAreTrees) {
    for (std::uint64_t s = 1; s <= 50; ++s) {
        Rng rng(s);
        Graph t = random_tree(1 + static_cast<int>(rng.below(20)), rng);
        EXPECT_TRUE(t.is_tree());
    }
}

TEST(Graph, LongestPathMatchesBruteDiameter) {
    for (std::uint64_t s = 1; s <= 100; ++s) {
        Rng rng(s);
        Graph t = random_tree(2 + static_cast<int>(rng.below(15)), rng);
        int D = brute_diameter(t);
        EXPECT_EQ(diameter(t), D);
        auto path = longest_path(t);
        ASSERT_EQ(static_cast<int>(path.size()), D + 1);
        for (std::size_t i = 0; i + 1 < path.size(); ++i) EXPECT_TRUE(t.has_edge(std::min(path[i], path[i + 1]), std::max(path[i], path[i + 1])));
    }
}

TEST(Graph, PeelLevelsFollowDiameter) {
    for (std::uint64_t s = 1; s <= 200; ++s) {
        Rng rng(s);
        Graph t = random_tree(3 + static_cast<int>(rng.below(15)), rng);
        PeelTrace tr = peel_leaves(t);
        const int D = brute_diameter(t);
        EXPECT_EQ(tr.m() + 1, (D + 1) / 2) << "seed " << s;
        std::set<int> seen;
        for (const auto& lvl : tr.removed) seen.insert(lvl.begin(), lvl.end());
        seen.insert(tr.center);
        seen.insert(tr.star_leaves.begin(), tr.star_leaves.end());
        EXPECT_EQ(static_cast<int>(seen.size()), t.p);
    }
}

TEST(Graph, K2PeelsToHigherIdCenter) {
    PeelTrace tr = peel_leaves(path_graph(2));
    EXPECT_EQ(tr.center, 1);
}

TEST(Graph, AddThenRemoveLeavesIsIdentity) {
    for (std::uint64_t s = 1; s <= 30; ++s) {
        Rng rng(s);
        Graph t = random_tree(2 + static_cast<int>(rng.below(10)), rng);
        LeafPlan plan = random_leaf_plan(t, 1 + static_cast<int>(rng.below(6)), s);
        Graph big = add_leaves(t, plan);
        EXPECT_EQ(big.p, t.p + plan.total());
        EXPECT_TRUE(big.is_tree());
        std::vector<bool> drop(big.p, false);
        for (int v = t.p; v < big.p; ++v) drop[v] = true;
        EXPECT_EQ(remove_vertices(big, drop).graph, t);
    }
}

TEST(Graph, VertexSplitToTreeKeepsEdges) {
    for (const Graph& g : {complete_graph(4), cycle_graph(5), complete_bipartite(2, 3)}) {
        VertexMapped vm = vertex_split_to_tree(g, 3);
        EXPECT_TRUE(vm.graph.is_tree());
        EXPECT_EQ(vm.graph.q(), g.q());
        std::multiset<Edge> images;
        for (auto [u, v] : vm.graph.edges) {
            int a = vm.map[u], b = vm.map[v];
            images.insert({std::min(a, b), std::max(a, b)});
        }
        EXPECT_EQ(images, std::multiset<Edge>(g.edges.begin(), g.edges.end()));
    }
}

TEST(Graph, CoincideAndJoin) {
    VertexMapped c = vertex_coincide(path_graph(4), 0, 3);
    EXPECT_EQ(c.graph.p, 3);
    EXPECT_EQ(c.graph.q(), 3);
    Graph j = edge_join(path_graph(3), star_graph(2), 2, 0);
    EXPECT_EQ(j.p, 6);
    EXPECT_EQ(j.q(), 5);
    EXPECT_TRUE(j.is_tree());
}

TEST(Graph, LabeledPmClosureOnFourVerticesIsCayley) {
    PmTreeSet s = enumerate_pm_tree_set(path_graph(4), 1000, true);
    EXPECT_EQ(s.closure.size(), 16u);
    EXPECT_FALSE(s.partial);
}

TEST(Graph, PmMoveFromStarReachesPath) {
    PmMove mv = pm_edge_op(star_graph(3), {0, 3}, {2, 3});
    EXPECT_TRUE(mv.is_tree);
    EXPECT_TRUE(isomorphic(mv.graph, path_graph(4)));
    EXPECT_EQ(pm_distance_uncolored(star_graph(3), path_graph(4), 3), 1);
}

TEST(Graph, CanonicalFormIsRelabelingInvariant) {
    for (std::uint64_t s = 1; s <= 30; ++s) {
        Rng rng(s);
        Graph t = random_tree(2 + static_cast<int>(rng.below(8)), rng);
        std::vector<int> perm(t.p);
        std::iota(perm.begin(), perm.end(), 0);
        rng.shuffle(perm);
        EXPECT_EQ(canonical_form(t), canonical_form(relabel(t, perm)));
    }
    EXPECT_FALSE(isomorphic(star_graph(3), path_graph(4)));
}

TEST(Combinatorics, PartitionCounts) {
    EXPECT_EQ(count_partitions(10, 6), 35);
    EXPECT_EQ(count_partitions(0, 3), 1);
    EXPECT_EQ(count_partitions(5, 0), 0);
    EXPECT_EQ(count_partitions(100, 100), BigInt("190569292"));
    EXPECT_EQ(factorial(18), BigInt("6402373705728000"));
}

TEST(Combinatorics, LeafIdentity) {
    for (std::uint64_t s = 1; s <= 50; ++s) {
        Rng rng(s);
        Graph t = random_tree(2 + static_cast<int>(rng.below(30)), rng);
        auto [a, b] = leaf_identity_sides(t);
        EXPECT_EQ(a, b);
    }
}
