#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "topocode/graph.hpp"
#include "topocode/linform.hpp"
#include "topocode/total_coloring.hpp"

namespace topocode {

enum class Family {
    graceful,
    odd_graceful,
    edge_antimagic,
    harmonious,
    odd_elegant,
    edge_magic,
    edge_difference,
    graceful_difference,
    felicitous_difference,
    odd_edge_magic,
    odd_edge_difference,
    odd_edge_felicitous_difference,
    odd_edge_graceful_difference,
    vd_ek,
    vk_ed,
    model_graceful,
    six_c,
};

std::string family_name(Family f);
Family parse_family(const std::string& name);
const std::vector<Family>& all_families();

struct FamilySpec {
    Family family = Family::graceful;
    std::optional<LinForm> constant;
    bool labeling = false;  // demand |f(V)| = p (odd-edge families: otherwise < p)
    bool set_ordered = false;
    bool odd_alt = false;  // odd set {k+2(i-1)d} instead of {k+(2i-1)d}
    Family inner = Family::edge_difference;  // W-constraint used by vd-ek / vk-ed
};

// Symbolic mode proves identities in k and d; concrete mode substitutes.
struct Params {
    bool symbolic = true;
    std::int64_t k = 0;
    std::int64_t d = 1;
    static Params sym() { return {}; }
    static Params at(std::int64_t k0, std::int64_t d0) { return {false, k0, d0}; }
};

struct Violation {
    int edge = -1;  // -1 when the problem is not tied to one edge
    int vertex = -1;
    std::string reason;
};

struct VerifyReport {
    bool pass = false;
    std::optional<LinForm> constant_found;
    std::vector<LinForm> edge_set_found;  // sorted edge colors (evaluated in concrete mode)
    std::vector<Violation> violations;
    std::vector<int> reduced_edges;  // harmonious/odd-elegant edges where mod* wrapped around
};

// S_{s,k,r,d} = {k+rd, ..., k+(r+s)d} written with the mode's K and D.
std::vector<LinForm> arith_set(std::int64_t s, LinForm K, std::int64_t r, LinForm D);
std::vector<LinForm> odd_set(std::int64_t q, LinForm K, LinForm D, bool alt);

VerifyReport verify(const Graph& g, const TotalColoring& f, const FamilySpec& spec, const Params& params);

// The fixed cross-check grid for symbolic verdicts.
const std::vector<std::pair<std::int64_t, std::int64_t>>& verification_grid();

// Tra-1..Tra-11. The monotone naming x_1..x_s, y_1..y_t, e_1..e_q is taken
// from f (ties by id) and kept for the whole move list.
TotalColoring transform(const Graph& g, const TotalColoring& f, const std::vector<int>& moves);

struct Derived {
    TotalColoring coloring;
    std::optional<LinForm> constant;
};

// From a graceful (k,d)-total coloring (symbolic index form) to one of:
// graceful, edge-magic, edge-difference, graceful-difference,
// felicitous-difference, harmonious, edge-antimagic.
Derived derive_equivalent(const Graph& g, const TotalColoring& f, Family target);

enum class DualMode { vertex, edge, ve };

struct DualityResult {
    bool holds = false;
    std::int64_t a = 0, r = 0;  // vertex sums a*k + r*d
    std::int64_t b = 0, s = 0;  // edge sums b*k + s*d
};

DualityResult check_duality(const TotalColoring& f, const TotalColoring& g, const std::vector<int>& vertex_map,
                            const std::vector<int>& edge_map, DualMode mode);

bool check_twin(const Graph& G, const TotalColoring& f, const Graph& H, const TotalColoring& g, std::int64_t k0,
                std::int64_t d0);

struct AbcResult {
    LinForm spread;
    std::optional<LinForm> constant;
    std::vector<LinForm> values;
};

AbcResult abc_constraint(const Graph& g, const TotalColoring& f, std::int64_t a, std::int64_t b, std::int64_t c,
                         Family kind);

}  // namespace topocode
