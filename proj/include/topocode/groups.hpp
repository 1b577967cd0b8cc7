#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "topocode/graph.hpp"
#include "topocode/matrix.hpp"
#include "topocode/total_coloring.hpp"

namespace topocode {

enum class EdgeFn { sum, abs_difference };
std::string edge_fn_name(EdgeFn f);
EdgeFn parse_edge_fn(const std::string& s);
std::int64_t apply_edge_fn(EdgeFn f, std::int64_t x, std::int64_t y);

// Members T^1..T^M; T^i shifts the vertex rows of the base by i-1 modulo M
// (representatives in [1,M]) and recomputes E with f.
struct MatrixGroup {
    std::vector<IntMatrix> members;
    std::int64_t M = 1;
    EdgeFn f = EdgeFn::sum;
    const IntMatrix& member(std::int64_t i) const { return members.at(static_cast<std::size_t>(i - 1)); }
};

MatrixGroup build_every_zero_family(const IntMatrix& base, std::int64_t M, EdgeFn f);

struct GroupOpResult {
    std::int64_t index = 0;
    IntMatrix value;
};
GroupOpResult group_add(const MatrixGroup& G, std::int64_t i, std::int64_t j, std::int64_t zero);
GroupOpResult group_sub(const MatrixGroup& G, std::int64_t i, std::int64_t j, std::int64_t zero);
// Every member as zero: identity and inverses, plus entrywise closure.
bool check_group_laws(const MatrixGroup& G);

// Condition 0 is vertex color preservation f(x) = g(phi(x)); 1..8 are the
// bipartite / edge-difference / edge-homomorphism / color-set / set-ordered
// clauses.
struct HomoReport {
    bool pass = false;
    std::vector<std::string> failures;
};

std::vector<int> homo_conditions(const std::string& kind);

HomoReport homomorphism_check(const Graph& T, const Graph& G, const std::vector<int>& phi,
                              const std::optional<std::pair<TotalColoring, TotalColoring>>& colored = std::nullopt,
                              const std::vector<int>& conditions = {0, 2, 3});

struct Coincided {
    Graph graph;
    std::vector<int> phi;
    TotalColoring coloring;
};
Coincided coincide_same_colors(const Graph& T, const TotalColoring& f,
                               const std::optional<std::vector<int>>& classes = std::nullopt);

std::optional<int> pm_e_distance(const Graph& t1, const TotalColoring& f1, const Graph& t2, const TotalColoring& f2,
                                 int bound);

}  // namespace topocode
