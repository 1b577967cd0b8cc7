#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "topocode/coloring.hpp"
#include "topocode/graph.hpp"
#include "topocode/total_coloring.hpp"

namespace topocode {

using ValueSet = std::vector<LinForm>;  // sorted, no duplicates

ValueSet make_set(std::vector<LinForm> v);
ValueSet set_intersection(const ValueSet& a, const ValueSet& b);
ValueSet set_union(const ValueSet& a, const ValueSet& b);

struct SetColoring {
    std::vector<ValueSet> v;
    std::vector<ValueSet> e;  // aligned with Graph::edges
    SetColoring eval(std::int64_t k0, std::int64_t d0) const;
    friend bool operator==(const SetColoring&, const SetColoring&) = default;
};

enum class WOp { abs_difference, sum };
WOp default_w(Family f);
WOp parse_w(const std::string& s);
LinForm apply_w(WOp w, const LinForm& a, const LinForm& b);

// Intersection of the end sets plus every W<a,b>.
ValueSet w_edge_set(const ValueSet& a, const ValueSet& b, WOp w);

SetColoring vset_coloring(const Graph& t, const TotalColoring& f);

enum class PwcscVariant { A, B, C, D, E };
PwcscVariant parse_pwcsc(const std::string& s);
SetColoring pwcsc(const Graph& t, const TotalColoring& f, PwcscVariant variant, WOp w);
// Variant A followed by n-1 neighbour-union rounds.
SetColoring pwcsc_a_nfold(const Graph& t, const TotalColoring& f, int n, WOp w);

enum class LiftMode { origin, side };
// Values must be plain integers. Origin mode maps a value that labels an X
// vertex to value*d and anything else to k+value*d; side mode lifts X vertex
// sets by d and every other set by k+d.
SetColoring lift_kd(const Graph& t, const TotalColoring& f, const SetColoring& sc, LiftMode mode = LiftMode::origin);

struct Hypergraph {
    ValueSet lambda;
    std::vector<ValueSet> edges;  // distinct, first-appearance order
    bool covers = true;
};
enum class HyperScope { vertices, edges, total };
Hypergraph extract_hypergraph(const SetColoring& sc, HyperScope scope);

struct SetCheck {
    std::string name;
    bool pass = false;
    std::string detail;
    std::optional<LinForm> constant;
    std::vector<LinForm> witnesses;  // per edge, for graceful/harmonious
};

struct SetVerifyReport {
    bool pass = true;
    std::vector<SetCheck> checks;
};

struct MagicSpec {
    Family family;
    std::optional<LinForm> constant;
};

struct SetVerifyOptions {
    std::vector<std::string> constraints;  // "Nset-1".."Nset-10", "Chyper-1".."Chyper-5"
    int rank = 2;                          // r for Chyper-2
    std::optional<ValueSet> lambda;        // ground set for Nset-7
    std::vector<MagicSpec> magic;          // graceful, harmonious and the four magic families
    bool strict = false;                   // universal instead of existential witnesses
};

SetVerifyReport verify_set_coloring(const Graph& g, const SetColoring& sc, const SetVerifyOptions& opt);

struct SixSetColoring {
    SetColoring coloring;
    Graph tree;
    std::vector<int> tree_to_graph;
    std::vector<MagicSpec> families;  // the six families with their constants
};
SixSetColoring graph_kd_total_set_coloring(const Graph& g, std::uint64_t seed);

}  // namespace topocode
