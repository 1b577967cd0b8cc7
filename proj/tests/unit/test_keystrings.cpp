#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "reference_data.hpp"
#include "topocode/constructors.hpp"
#include "topocode/keystrings.hpp"

using namespace topocode;

TEST(KeyStrings, RowMajorReferenceStrings) {
    EXPECT_EQ(string_from_matrix(ref::g2_matrix(), OrderSpec::rowmajor()), ref::g2_string);
    EXPECT_EQ(string_from_matrix(evaluate(ref::h2_matrix(), 7, 5), OrderSpec::rowmajor()), ref::h2_string_7_5);
}

TEST(KeyStrings, PermutedOrdersKeepTheDigitMultiset) {
    const IntMatrix m = ref::g2_matrix();
    const std::string base = string_from_matrix(m, OrderSpec::rowmajor());
    Rng rng(7);
    for (int n = 0; n < 20; ++n) {
        std::vector<int> perm(18);
        for (int i = 0; i < 18; ++i) perm[i] = i;
        rng.shuffle(perm);
        std::string s = string_from_matrix(m, OrderSpec::permutation(perm));
        EXPECT_TRUE(string_multiset_equal(s, base));
    }
}

TEST(KeyStrings, OrderParsing) {
    EXPECT_EQ(OrderSpec::parse("rowmajor").cells(2), (std::vector<int>{0, 1, 2, 3, 4, 5}));
    EXPECT_EQ(OrderSpec::parse("perm:5,4,3,2,1,0").cells(2), (std::vector<int>{5, 4, 3, 2, 1, 0}));
    EXPECT_THROW(OrderSpec::parse("perm:0,0,1,2,3,4").cells(2), Error);
    EXPECT_THROW(OrderSpec::parse("sideways"), Error);
}

TEST(KeyStrings, UnrankIsABijection) {
    std::set<std::vector<int>> seen;
    for (int r = 0; r < 24; ++r) {
        auto p = unrank_permutation(4, r);
        auto sorted = p;
        std::sort(sorted.begin(), sorted.end());
        EXPECT_EQ(sorted, (std::vector<int>{0, 1, 2, 3}));
        seen.insert(p);
    }
    EXPECT_EQ(seen.size(), 24u);
    EXPECT_EQ(unrank_permutation(4, 0), (std::vector<int>{0, 1, 2, 3}));
    EXPECT_THROW(unrank_permutation(4, 24), Error);
}

TEST(KeyStrings, CountsForSmallMatrix) {
    IntMatrix m{{1}, {1}, {2}};
    StringCounts c = count_strings(m);
    EXPECT_EQ(c.factorial_bound, 6);
    EXPECT_EQ(c.arrangements, 3);
    EXPECT_EQ(c.distinct, 3);
}

TEST(KeyStrings, PnbspRecoversAPlantedMatrix) {
    Graph t = path_graph(3);
    ColoredGraph cg = tree_kd_coloring(t, Family::graceful, {});
    IntMatrix m = evaluate(canonical_order(from_colored_graph(cg.graph, cg.coloring)), 4, 3);
    std::string s = string_from_matrix(m, OrderSpec::rowmajor());
    FamilySpec spec;
    PnbspResult r = pnbsp_solve(s, 2, spec);
    bool found = false;
    for (const auto& sol : r.solutions) {
        EXPECT_EQ(string_from_matrix(sol.matrix, OrderSpec::rowmajor()), s);
        EXPECT_EQ(evaluate(sol.base, sol.k0, sol.d0), sol.matrix);
        EXPECT_FALSE(sol.graphs.empty());
        found = found || (sol.matrix == m && sol.k0 == 4 && sol.d0 == 3);
    }
    EXPECT_TRUE(found);
}

TEST(KeyStrings, PnbspIsDeterministicAcrossJobs) {
    FamilySpec spec;
    PnbspOptions one, many;
    many.jobs = 4;
    PnbspResult a = pnbsp_solve("101112", 1, spec, one), b = pnbsp_solve("101112", 1, spec, many);
    ASSERT_EQ(a.solutions.size(), b.solutions.size());
    for (std::size_t i = 0; i < a.solutions.size(); ++i) {
        EXPECT_EQ(a.solutions[i].matrix, b.solutions[i].matrix);
        EXPECT_EQ(a.solutions[i].k0, b.solutions[i].k0);
        EXPECT_EQ(a.solutions[i].d0, b.solutions[i].d0);
    }
}

TEST(KeyStrings, StringGroupWrapsModulo) {
    const std::vector<std::string> S = {"01", "12", "23", "30"};
    StringGroupResult r = string_group_op(S, 2, 3, 1, 4, true);
    EXPECT_EQ(r.index, 4);
    EXPECT_EQ(r.value, S[3]);
    r = string_group_op(S, 3, 4, 1, 4, true);
    EXPECT_EQ(r.index, 2);
    EXPECT_EQ(r.value, S[1]);
    r = string_group_op(S, 1, 2, 1, 4, false);
    EXPECT_EQ(r.index, 4);
    EXPECT_EQ(r.value, S[3]);
    EXPECT_THROW(string_group_op({"05"}, 1, 1, 1, 4, true), Error);
}
