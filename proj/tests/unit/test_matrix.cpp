#include <gtest/gtest.h>

#include <algorithm>

#include "reference_data.hpp"
#include "topocode/constructors.hpp"
#include "topocode/matrix.hpp"

using namespace topocode;

TEST(Matrix, FromColoredGraphFollowsEdgeOrder) {
    ColoredGraph cg = color_complete_bipartite(1, 2);
    TopcodeMatrix m = from_colored_graph(cg.graph, cg.coloring);
    ASSERT_EQ(m.q(), 2u);
    for (std::size_t i = 0; i < m.q(); ++i) EXPECT_EQ(sym_abs(m.Y[i] - m.X[i]), m.E[i]);
}

TEST(Matrix, UnitMatrixAndParameterize) {
    TopcodeMatrix u = unit_matrix(3);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(u.X[i], LinForm(0, 0));
        EXPECT_EQ(u.E[i], LinForm(1, 0));
        EXPECT_EQ(u.Y[i], LinForm(1, 0));
    }
    EXPECT_EQ(parameterize(ref::base22()), ref::param22());
    EXPECT_EQ(evaluate(ref::param22(), 1, 2), ref::example11());
}

TEST(Matrix, WorkedAlgebra) {
    const IntMatrix A = ref::alg_a(), B = ref::alg_b();
    EXPECT_EQ(union_sum(A, B).q(), 7u);
    EXPECT_EQ(unite(A, B), ref::alg_a_union_b());
    EXPECT_EQ(subtract(B, A), ref::alg_b_minus_a());
    EXPECT_EQ(subtract(A, B), ref::alg_a_minus_b());
    EXPECT_EQ(intersect(A, B), ref::alg_a_cap_b());
    EXPECT_EQ(subtract(union_sum(A, B), B), A);
    EXPECT_TRUE(multiset_equal(subtract(union_sum(A, B), A), B));
    EXPECT_THROW(subtract_strict(A, B), Error);
}

TEST(Matrix, CoincideThenSplitRecoversOperands) {
    const IntMatrix A = ref::alg_a(), B = ref::alg_b(), H = ref::alg_a_cap_b();
    IntMatrix C = coincide(A, B, H);
    EXPECT_EQ(C.q(), A.q() + B.q() - H.q());
    auto [t1, t2] = split(C, H, A.q() - H.q());
    EXPECT_TRUE(multiset_equal(t1, A));
    EXPECT_TRUE(multiset_equal(t2, B));
}

TEST(Matrix, ExchangesPreserveSimilarity) {
    IntMatrix m = ref::example11();
    IntMatrix x = line_exchange(column_exchange(m, 0, 9), 3);
    EXPECT_TRUE(is_similar(m, x));
    IntMatrix y = m;
    y.E[0] += 1;
    EXPECT_FALSE(is_similar(m, y));
    EXPECT_THROW(column_exchange(m, 0, 10), Error);
}

TEST(Matrix, LinearCombine) {
    TopcodeMatrix a = ref::param22(), b = unit_matrix(10);
    TopcodeMatrix c = linear_combine({2, 3}, {a, b});
    for (std::size_t i = 0; i < c.q(); ++i) EXPECT_EQ(c.E[i], a.E[i] * 2 + b.E[i] * 3);
    EXPECT_THROW(linear_combine({0, 0}, {a, b}), Error);
    EXPECT_THROW(linear_combine({-1, 2}, {a, b}), Error);
}

TEST(Matrix, TextFormatRoundTrip) {
    TopcodeMatrix m = ref::h2_matrix();
    EXPECT_EQ(parse_matrix_text(format_matrix(m)), m);
    EXPECT_THROW(parse_matrix_text("1 2\n3 4\n"), Error);
}

TEST(Matrix, PathMatrixHasOneConnectedRealization) {
    // Repeated X and Y values may each be one vertex or two, giving four
    // realizations; only merging both yields the path itself.
    TopcodeMatrix m;
    m.push({LinForm::plain(0), LinForm::plain(3), LinForm::plain(3)});
    m.push({LinForm::plain(1), LinForm::plain(2), LinForm::plain(3)});
    m.push({LinForm::plain(1), LinForm::plain(1), LinForm::plain(2)});
    GraphsFromMatrix r = graphs_from_matrix(m, 6, 1'000'000);
    EXPECT_FALSE(r.partial);
    EXPECT_EQ(r.graphs.size(), 4u);
    int trees = 0;
    for (const auto& g : r.graphs) {
        EXPECT_TRUE(multiset_equal(from_colored_graph(g.graph, g.coloring), m));
        if (g.graph.is_tree()) {
            ++trees;
            EXPECT_TRUE(isomorphic(g.graph, path_graph(4)));
        }
    }
    EXPECT_EQ(trees, 1);
}

TEST(Matrix, SharedMatrixHasSeveralGraphs) {
    TopcodeMatrix m = to_topcode(ref::example11());
    GraphsFromMatrix r = graphs_from_matrix(m, 20, 20'000'000);
    EXPECT_GE(r.graphs.size(), 6u);
    std::vector<CanonKey> uncolored;
    for (const auto& g : r.graphs) {
        EXPECT_TRUE(multiset_equal(from_colored_graph(g.graph, g.coloring), m));
        if (g.graph.p <= 10) uncolored.push_back(canonical_form(g.graph));
    }
    std::sort(uncolored.begin(), uncolored.end());
    uncolored.erase(std::unique(uncolored.begin(), uncolored.end()), uncolored.end());
    EXPECT_GE(uncolored.size(), 1u);
}
