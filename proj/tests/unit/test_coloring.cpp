#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "topocode/coloring.hpp"
#include "topocode/constructors.hpp"

using namespace topocode;

namespace {

Graph seeded_tree(std::uint64_t seed, int lo, int hi) {
    Rng rng(seed);
    return random_tree(static_cast<int>(rng.range(lo, hi)), rng);
}

const std::vector<Family> kSix = {Family::graceful,      Family::harmonious,          Family::edge_difference,
                                  Family::graceful_difference, Family::felicitous_difference, Family::edge_magic};

}  // namespace

TEST(Families, NamesRoundTrip) {
    for (Family f : all_families()) EXPECT_EQ(parse_family(family_name(f)), f);
    EXPECT_THROW(parse_family("no-such-family"), Error);
}

TEST(Families, ArithSet) {
    auto s = arith_set(2, LinForm::K(), 1, LinForm::D());
    EXPECT_EQ(s, (std::vector<LinForm>{{1, 1}, {1, 2}, {1, 3}}));
    auto o = odd_set(3, LinForm::K(), LinForm::D(), false);
    EXPECT_EQ(o, (std::vector<LinForm>{{1, 1}, {1, 3}, {1, 5}}));
}

TEST(Verify, CompleteBipartiteIsGraceful) {
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            ColoredGraph cg = color_complete_bipartite(m, n);
            EXPECT_EQ(cg.graph.q(), m * n);
            FamilySpec spec;
            EXPECT_TRUE(verify(cg.graph, cg.coloring, spec, Params::sym()).pass) << m << "," << n;
            EXPECT_TRUE(verify(cg.graph, cg.coloring, spec, Params::at(3, 2)).pass);
        }
}

TEST(Verify, MutatedColoringFails) {
    ColoredGraph cg = color_complete_bipartite(2, 3);
    FamilySpec spec;
    TotalColoring bad = cg.coloring;
    bad.e[0] += LinForm::D();
    VerifyReport r = verify(cg.graph, bad, spec, Params::sym());
    EXPECT_FALSE(r.pass);
    EXPECT_FALSE(r.violations.empty());
    bad = cg.coloring;
    std::swap(bad.v[0], bad.v[1]);
    EXPECT_FALSE(verify(cg.graph, bad, spec, Params::sym()).pass);
}

TEST(Verify, WrongConstantFails) {
    Graph t = seeded_tree(3, 4, 8);
    ColoredGraph cg = tree_kd_coloring(t, Family::edge_magic, {});
    FamilySpec spec;
    spec.family = Family::edge_magic;
    VerifyReport ok = verify(cg.graph, cg.coloring, spec, Params::sym());
    ASSERT_TRUE(ok.pass);
    ASSERT_TRUE(ok.constant_found.has_value());
    spec.constant = *ok.constant_found + LinForm::D();
    EXPECT_FALSE(verify(cg.graph, cg.coloring, spec, Params::sym()).pass);
}

TEST(Constructors, TreeColoringsVerifyForAllChoices) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        Graph t = seeded_tree(seed, 2, 12);
        const int L = choice_length(t);
        for (int mask = 0; mask < std::min(1 << L, 8); ++mask) {
            ChoiceVector ch(L);
            for (int i = 0; i < L; ++i) ch[i] = (mask >> i) & 1;
            for (Family fam : kSix) {
                ColoredGraph cg = tree_kd_coloring(t, fam, ch);
                FamilySpec spec;
                spec.family = fam;
                EXPECT_TRUE(verify(cg.graph, cg.coloring, spec, Params::sym()).pass)
                    << family_name(fam) << " seed " << seed << " choices " << format_choices(ch);
            }
        }
    }
}

TEST(Constructors, RejectsNonTrees) {
    EXPECT_THROW(tree_kd_coloring(cycle_graph(4), Family::graceful, {}), Error);
}

TEST(Constructors, ChoicesParse) {
    EXPECT_EQ(parse_choices("0110"), (ChoiceVector{0, 1, 1, 0}));
    EXPECT_EQ(format_choices({1, 0}), "10");
    EXPECT_THROW(parse_choices("012"), Error);
}

TEST(Constructors, SetOrderedSearchAndDerivations) {
    SetOrderedSearch s = find_set_ordered_graceful(path_graph(6));
    ASSERT_EQ(s.status, SearchStatus::found);
    EXPECT_NO_THROW(require_set_ordered_graceful(s.graph, s.labeling));
    TotalColoring f = kd_from_labeling(s.graph, s.labeling);
    FamilySpec graceful;
    EXPECT_TRUE(verify(s.graph, f, graceful, Params::sym()).pass);
    for (Family fam : {Family::edge_magic, Family::edge_difference, Family::graceful_difference,
                       Family::felicitous_difference, Family::harmonious}) {
        Derived dv = derive_equivalent(s.graph, f, fam);
        FamilySpec spec;
        spec.family = fam;
        VerifyReport r = verify(s.graph, dv.coloring, spec, Params::sym());
        EXPECT_TRUE(r.pass) << family_name(fam);
        if (dv.constant) EXPECT_EQ(r.constant_found, dv.constant);
    }
}

TEST(Constructors, GracefulDifferenceConstantIsZero) {
    SetOrderedSearch s = find_set_ordered_graceful(star_graph(4));
    ASSERT_EQ(s.status, SearchStatus::found);
    Derived dv = derive_equivalent(s.graph, kd_from_labeling(s.graph, s.labeling), Family::graceful_difference);
    EXPECT_EQ(dv.constant, LinForm(0, 0));
}

TEST(Constructors, RlaAddsLeavesAndKeepsFamily) {
    SetOrderedSearch s = find_set_ordered_graceful(path_graph(5));
    ASSERT_EQ(s.status, SearchStatus::found);
    LeafPlan plan = random_leaf_plan(s.graph, 3, 9);
    for (Family fam : {Family::graceful_difference, Family::edge_difference, Family::felicitous_difference,
                       Family::edge_magic}) {
        RlaResult r = rla(s.graph, s.labeling, plan, fam);
        EXPECT_EQ(r.graph.p, s.graph.p + 3);
        EXPECT_TRUE(r.graph.is_tree());
        FamilySpec spec;
        spec.family = fam;
        VerifyReport rep = verify(r.graph, r.coloring, spec, Params::sym());
        EXPECT_TRUE(rep.pass) << family_name(fam);
        EXPECT_EQ(rep.constant_found, r.constant);
    }
}

TEST(Constructors, CycleHasNoSetOrderedLabeling) {
    EXPECT_NE(find_set_ordered_graceful(cycle_graph(5)).status, SearchStatus::found);
}

TEST(Transform, MirrorAndReverseMovesAreInvolutions) {
    ColoredGraph cg = tree_kd_coloring(seeded_tree(5, 6, 10), Family::graceful, {});
    for (int mv = 6; mv <= 11; ++mv)
        EXPECT_EQ(transform(cg.graph, cg.coloring, {mv, mv}), cg.coloring) << "move " << mv;
    EXPECT_EQ(transform(cg.graph, cg.coloring, {}), cg.coloring);
    EXPECT_THROW(transform(cg.graph, cg.coloring, {12}), Error);
}

TEST(Constructors, ForestAndBookVerify) {
    std::vector<ColoredGraph> comps;
    for (int n : {3, 4, 5}) {
        SetOrderedSearch s = find_set_ordered_graceful(path_graph(n));
        ASSERT_EQ(s.status, SearchStatus::found);
        comps.push_back({s.graph, s.labeling});
    }
    ColoredGraph forest = flawed_forest_labeling(comps);
    EXPECT_EQ(forest.graph.q(), 2 + 3 + 4);
    std::set<LinForm> edges(forest.coloring.e.begin(), forest.coloring.e.end());
    EXPECT_EQ(static_cast<int>(edges.size()), forest.graph.q());
}
