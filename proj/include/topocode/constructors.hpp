#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "topocode/coloring.hpp"
#include "topocode/graph.hpp"
#include "topocode/total_coloring.hpp"

namespace topocode {

// A graph together with a coloring; the graph's bipartition is oriented the
// way the coloring expects (X gets the d-multiples).
struct ColoredGraph {
    Graph graph;
    TotalColoring coloring;
};

// One bit per peel level; bit 0 is the SL variant, bit 1 the LS variant.
using ChoiceVector = std::vector<int>;
ChoiceVector parse_choices(const std::string& bits);
std::string format_choices(const ChoiceVector& c);
int choice_length(const Graph& tree);

ColoredGraph color_complete_bipartite(int m, int n);

// Families: graceful, harmonious, edge-difference, graceful-difference,
// felicitous-difference, edge-magic. An empty choice vector means all zeros.
ColoredGraph tree_kd_coloring(const Graph& t, Family family, const ChoiceVector& choices);

// Integer labeling f (plain colors) -> X: f*d, Y and edges: k+(f-1)*d.
TotalColoring kd_from_labeling(const Graph& g, const TotalColoring& f);

// Checks the set-ordered graceful labeling contract; throws not-set-ordered.
void require_set_ordered_graceful(const Graph& g, const TotalColoring& f);

enum class RlaVariant { A, B, C, D };
RlaVariant rla_variant_for(Family f);

struct RlaResult {
    Graph graph;
    TotalColoring coloring;
    LinForm constant;
    Family family;
};

// f is a set-ordered graceful integer labeling of g (g carries its bipartition).
RlaResult rla(const Graph& g, const TotalColoring& f, const LeafPlan& plan, Family family);

ColoredGraph flawed_forest_labeling(const std::vector<ColoredGraph>& components);

ColoredGraph build_graph_book(const std::vector<ColoredGraph>& pages, int spine_size);

enum class SearchStatus { found, nonexistent, unknown };
std::string status_name(SearchStatus s);

struct SetOrderedSearch {
    SearchStatus status = SearchStatus::unknown;
    Graph graph;  // bipartition oriented so that X carries the small labels
    TotalColoring labeling;
    std::int64_t nodes = 0;
};

SetOrderedSearch find_set_ordered_graceful(const Graph& g, std::int64_t budget = 5'000'000, std::uint64_t seed = 0);

}  // namespace topocode
