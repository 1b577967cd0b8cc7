#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "topocode/linform.hpp"
#include "topocode/rng.hpp"

namespace topocode {

using Edge = std::pair<int, int>;

// Simple undirected graph on ids [0, p). Edges are stored with u < v and
// sorted, so an edge's position in `edges` is a stable index that colorings
// align with. `side` is either empty (no bipartition) or holds 0 for X and
// 1 for Y per vertex.
struct Graph {
    int p = 0;
    std::vector<Edge> edges;
    std::vector<int> side;

    static Graph make(int p, std::vector<Edge> edges, std::vector<int> side = {});

    int q() const { return static_cast<int>(edges.size()); }
    bool has_bipartition() const { return !side.empty(); }
    int edge_index(int u, int v) const;
    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }
    std::vector<std::vector<int>> adjacency() const;
    std::vector<int> degrees() const;
    std::vector<int> X() const;
    std::vector<int> Y() const;
    bool connected() const;
    bool is_tree() const { return p >= 1 && q() == p - 1 && connected(); }

    friend bool operator==(const Graph&, const Graph&) = default;
};

std::optional<std::vector<int>> two_coloring(const Graph& g);
// Attaches a BFS 2-coloring (lowest id of each component goes to X).
Graph with_bipartition(const Graph& g);

Graph path_graph(int n);
Graph star_graph(int leaves);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int m, int n);
Graph random_tree(int n, Rng& rng);

struct VertexMapped {
    Graph graph;
    std::vector<int> map;  // meaning documented per producer
};

// New parts beyond the first get fresh ids p, p+1, ...; map sends every new
// vertex id to the vertex of g it came from.
VertexMapped vertex_split(const Graph& g, int v, const std::vector<std::vector<int>>& parts);
VertexMapped vertex_split_to_tree(const Graph& g, std::uint64_t seed);

// Merging ops compact ids stably; map sends old ids to new ids.
VertexMapped vertex_coincide(const Graph& g, int u, int v);
VertexMapped coincide_classes(const Graph& g, const std::vector<int>& cls);
VertexMapped remove_vertices(const Graph& g, const std::vector<bool>& drop);

Graph edge_join(const Graph& g1, const Graph& g2, int u, int x);

struct LeafPlan {
    std::vector<int> counts;  // leaves to hang on each vertex
    std::uint64_t seed = 0;
    int total() const;
};

LeafPlan random_leaf_plan(const Graph& g, int m, std::uint64_t seed);
// Leaves are appended in parent-id order; returns the parent of each new id.
std::vector<int> leaf_parents(const Graph& g, const LeafPlan& plan);
Graph add_leaves(const Graph& g, const LeafPlan& plan);

struct PeelTrace {
    // alive[i] lists the original ids forming T_{i+1}; removed[i] are the
    // leaves L(T_{i+1}) taken away to reach T_{i+2}.
    std::vector<std::vector<int>> alive;
    std::vector<std::vector<int>> removed;
    int center = -1;
    std::vector<int> star_leaves;
    int levels() const { return static_cast<int>(alive.size()); }
    int m() const { return levels() - 1; }
};

PeelTrace peel_leaves(const Graph& t);
int diameter(const Graph& t);
// Longest path by double BFS, lowest-id tie-breaking.
std::vector<int> longest_path(const Graph& t);
std::vector<int> bfs_parents(const Graph& t, int root);

struct PmMove {
    Graph graph;
    bool is_tree = false;
};
PmMove pm_edge_op(const Graph& t, Edge remove, Edge add);

struct PmTreeSet {
    std::vector<Graph> one_step;  // includes t itself
    std::vector<Graph> closure;   // BFS order
    std::vector<int> distance;    // aligned with closure
    bool partial = false;
};
PmTreeSet enumerate_pm_tree_set(const Graph& t, int max_nodes, bool labeled);
std::optional<int> pm_distance_uncolored(const Graph& a, const Graph& b, int bound);

using CanonKey = std::vector<std::int64_t>;
// Uncolored canonical form; refuses graphs on more than 10 vertices.
CanonKey canonical_form(const Graph& g);
CanonKey canonical_form_colored(const Graph& g, const std::vector<LinForm>& vcol,
                                const std::vector<LinForm>& ecol,
                                std::int64_t leaf_budget = 10'000'000);
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace topocode
