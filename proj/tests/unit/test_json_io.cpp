#include <gtest/gtest.h>

#include "reference_data.hpp"
#include "topocode/constructors.hpp"
#include "topocode/json_io.hpp"

using namespace topocode;

TEST(JsonIo, LinFormForms) {
    EXPECT_EQ(linform_from_json(to_json(LinForm(2, -3))), LinForm(2, -3));
    EXPECT_EQ(linform_from_json(Json(7)), LinForm(0, 7));
    EXPECT_EQ(linform_from_json(Json("k+3d")), LinForm(1, 3));
}

TEST(JsonIo, GraphRoundTrip) {
    Graph g = with_bipartition(path_graph(5));
    EXPECT_EQ(graph_from_json(to_json(g)), g);
    Graph h = complete_graph(4);
    EXPECT_EQ(graph_from_json(to_json(h)), h);
}

TEST(JsonIo, ColoredGraphRoundTrip) {
    ColoredGraph cg = tree_kd_coloring(path_graph(6), Family::edge_magic, {});
    ColoredGraph back = colored_graph_from_json(to_json(cg));
    EXPECT_EQ(back.graph, cg.graph);
    EXPECT_EQ(back.coloring, cg.coloring);
}

TEST(JsonIo, EdgeColorsFollowFileOrder) {
    Json j = Json::parse(R"({"p": 3, "edges": [[1, 2], [0, 1]],
                             "coloring": {"vertices": [0, 2, 1], "edges": [1, 2]}})");
    ColoredGraph cg = colored_graph_from_json(j);
    EXPECT_EQ(cg.coloring.e[cg.graph.edge_index(1, 2)], LinForm(0, 1));
    EXPECT_EQ(cg.coloring.e[cg.graph.edge_index(0, 1)], LinForm(0, 2));
}

TEST(JsonIo, MatrixAndSetColoringRoundTrip) {
    TopcodeMatrix m = ref::h2_matrix();
    EXPECT_EQ(matrix_from_json(to_json(m)), m);
    SetColoring sc = ref::k4_set_coloring();
    EXPECT_EQ(set_coloring_from_json(to_json(sc)), sc);
}

TEST(JsonIo, MalformedInputThrows) {
    EXPECT_ANY_THROW(graph_from_json(Json::parse(R"({"edges": [[0, 1]]})")));
    EXPECT_ANY_THROW(linform_from_json(Json::parse("[1]")));
}
