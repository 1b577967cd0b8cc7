#include <gtest/gtest.h>

#include "reference_data.hpp"
#include "topocode/constructors.hpp"
#include "topocode/groups.hpp"

using namespace topocode;

TEST(Groups, StarFamilyMatchesReference) {
    auto stars = ref::star_group();
    MatrixGroup G = build_every_zero_family(stars[0], 4, EdgeFn::sum);
    EXPECT_EQ(G.members, stars);
    EXPECT_TRUE(check_group_laws(G));
}

TEST(Groups, EveryMemberActsAsZero) {
    MatrixGroup G = build_every_zero_family(ref::star_group()[0], 4, EdgeFn::sum);
    for (std::int64_t z = 1; z <= 4; ++z)
        for (std::int64_t i = 1; i <= 4; ++i) {
            EXPECT_EQ(group_add(G, i, z, z).index, i);
            for (std::int64_t j = 1; j <= 4; ++j) {
                GroupOpResult s = group_add(G, i, j, z);
                EXPECT_EQ(s.value, G.member(s.index));
                EXPECT_EQ(group_sub(G, s.index, j, z).index, i);
            }
        }
}

TEST(Groups, AbsDifferenceFamily) {
    IntMatrix base{{1, 2}, {2, 1}, {3, 3}};
    MatrixGroup G = build_every_zero_family(base, 5, EdgeFn::abs_difference);
    EXPECT_EQ(G.members.size(), 5u);
    for (const auto& m : G.members)
        for (std::size_t c = 0; c < m.q(); ++c) EXPECT_EQ(m.E[c], apply_edge_fn(EdgeFn::abs_difference, m.X[c], m.Y[c]));
    EXPECT_TRUE(check_group_laws(G));
}

TEST(Groups, EdgeFnNames) {
    EXPECT_EQ(parse_edge_fn(edge_fn_name(EdgeFn::sum)), EdgeFn::sum);
    EXPECT_EQ(parse_edge_fn(edge_fn_name(EdgeFn::abs_difference)), EdgeFn::abs_difference);
    EXPECT_THROW(parse_edge_fn("product"), Error);
}

TEST(Homomorphism, PathFoldsOntoEdge) {
    Graph T = path_graph(4), G = path_graph(2);
    EXPECT_TRUE(homomorphism_check(T, G, {0, 1, 0, 1}, std::nullopt, {}).pass);
    HomoReport bad = homomorphism_check(T, G, {0, 0, 1, 1}, std::nullopt, {});
    EXPECT_FALSE(bad.pass);
    EXPECT_FALSE(bad.failures.empty());
}

TEST(Homomorphism, CoincideSameColorsIsAColoredHomomorphism) {
    ColoredGraph cg = tree_kd_coloring(path_graph(5), Family::graceful, {});
    TotalColoring f = cg.coloring;
    f.v[4] = f.v[0];
    Coincided c = coincide_same_colors(cg.graph, f);
    EXPECT_LT(c.graph.p, cg.graph.p);
    HomoReport r = homomorphism_check(cg.graph, c.graph, c.phi, std::make_pair(f, c.coloring), {0, 3});
    EXPECT_TRUE(r.pass);
}

TEST(Homomorphism, PmEDistanceOfIdenticalTreesIsZero) {
    ColoredGraph cg = tree_kd_coloring(path_graph(4), Family::graceful, {});
    EXPECT_EQ(pm_e_distance(cg.graph, cg.coloring, cg.graph, cg.coloring, 2), std::optional<int>(0));
}
