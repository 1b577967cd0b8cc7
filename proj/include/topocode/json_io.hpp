#pragma once

#include <string>

#include <json.hpp>

#include "topocode/coloring.hpp"
#include "topocode/constructors.hpp"
#include "topocode/graph.hpp"
#include "topocode/matrix.hpp"
#include "topocode/set_coloring.hpp"

namespace topocode {

using Json = nlohmann::ordered_json;

// LinForms are written as [k, d]; readers also accept a bare integer (plain
// value) or a string such as "k+3d".
Json to_json(const LinForm& f);
LinForm linform_from_json(const Json& j);

// Graph: {"p": n, "edges": [[u, v], ...], "X": [...], "Y": [...]}; X/Y are
// present only when a bipartition is attached.
Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// Coloring: {"vertices": [c_0, ...], "edges": [c_e, ...]} aligned with the
// graph's vertex ids and edge order.
Json to_json(const TotalColoring& f);
TotalColoring coloring_from_json(const Json& j);

// A graph object that may carry a "coloring" member. Edge colors are read in
// the file's edge order and permuted to the graph's sorted edge order.
Json to_json(const ColoredGraph& cg);
ColoredGraph colored_graph_from_json(const Json& j);

// Matrix: {"X": [...], "E": [...], "Y": [...]}.
Json to_json(const TopcodeMatrix& m);
Json to_json(const IntMatrix& m);
TopcodeMatrix matrix_from_json(const Json& j);

Json to_json(const ValueSet& s);
Json to_json(const SetColoring& sc);
SetColoring set_coloring_from_json(const Json& j);
Json to_json(const Hypergraph& h);

Json to_json(const VerifyReport& r);

std::string read_file(const std::string& path);
Json read_json_file(const std::string& path);
// Accepts either a JSON matrix or the whitespace text format.
TopcodeMatrix read_matrix_file(const std::string& path);

}  // namespace topocode
