#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "topocode/combinatorics.hpp"
#include "topocode/constructors.hpp"
#include "topocode/groups.hpp"
#include "topocode/json_io.hpp"
#include "topocode/keystrings.hpp"
#include "topocode/set_coloring.hpp"

namespace py = pybind11;
using namespace topocode;

// Structured values cross the boundary as JSON text in the same schema the
// command line tool reads and writes; the Python package decodes them.
namespace {

Params params_of(const std::optional<std::int64_t>& k, const std::optional<std::int64_t>& d) {
    if (k.has_value() != d.has_value()) throw Error("invalid-argument", "give both k and d, or neither");
    return k ? Params::at(*k, *d) : Params::sym();
}

std::string dump(const Json& j) { return j.dump(); }

std::string tree_coloring(const std::string& graph, const std::string& family, const std::string& choices) {
    Graph g = graph_from_json(Json::parse(graph));
    return dump(to_json(tree_kd_coloring(g, parse_family(family), parse_choices(choices))));
}

std::string verify_json(const std::string& colored, const std::string& family,
                        const std::optional<std::string>& constant, std::optional<std::int64_t> k,
                        std::optional<std::int64_t> d) {
    ColoredGraph cg = colored_graph_from_json(Json::parse(colored));
    FamilySpec spec;
    spec.family = parse_family(family);
    if (constant) spec.constant = parse_linform(*constant);
    return dump(to_json(verify(cg.graph, cg.coloring, spec, params_of(k, d))));
}

std::string topcode_matrix(const std::string& colored) {
    ColoredGraph cg = colored_graph_from_json(Json::parse(colored));
    return dump(to_json(from_colored_graph(cg.graph, cg.coloring)));
}

std::string key_string(const std::string& matrix, const std::string& order, std::int64_t k, std::int64_t d) {
    TopcodeMatrix m = matrix_from_json(Json::parse(matrix));
    return string_from_matrix(evaluate(m, k, d), OrderSpec::parse(order));
}

std::string peel(const std::string& tree) {
    PeelTrace t = peel_leaves(graph_from_json(Json::parse(tree)));
    Json j;
    j["alive"] = t.alive;
    j["removed"] = t.removed;
    j["center"] = t.center;
    j["star_leaves"] = t.star_leaves;
    j["m"] = t.m();
    return dump(j);
}

std::string set_ordered_graceful(const std::string& graph, std::int64_t budget, std::uint64_t seed) {
    SetOrderedSearch s = find_set_ordered_graceful(graph_from_json(Json::parse(graph)), budget, seed);
    Json j;
    j["status"] = status_name(s.status);
    if (s.status == SearchStatus::found) j["result"] = to_json(ColoredGraph{s.graph, s.labeling});
    return dump(j);
}

std::string set_coloring(const std::string& colored, const std::string& method, const std::string& w) {
    ColoredGraph cg = colored_graph_from_json(Json::parse(colored));
    if (method == "vset") return dump(to_json(vset_coloring(cg.graph, cg.coloring)));
    return dump(to_json(pwcsc(cg.graph, cg.coloring, parse_pwcsc(method), parse_w(w))));
}

std::string group_members(const std::string& matrix, std::int64_t M, const std::string& fn) {
    IntMatrix base = to_int_matrix(matrix_from_json(Json::parse(matrix)));
    MatrixGroup G = build_every_zero_family(base, M, parse_edge_fn(fn));
    Json out = Json::array();
    for (const auto& m : G.members) out.push_back(to_json(m));
    return dump(out);
}

std::string pnbsp(const std::string& s, int q, const std::string& family, std::int64_t budget, std::int64_t max_param) {
    FamilySpec spec;
    spec.family = parse_family(family);
    PnbspOptions opt;
    opt.budget = budget;
    opt.max_param = max_param;
    PnbspResult r = pnbsp_solve(s, q, spec, opt);
    Json j;
    j["exhausted"] = r.exhausted;
    j["solutions"] = Json::array();
    for (const auto& sol : r.solutions) {
        Json x;
        x["k"] = sol.k0;
        x["d"] = sol.d0;
        x["matrix"] = to_json(sol.matrix);
        x["graphs"] = static_cast<std::int64_t>(sol.graphs.size());
        j["solutions"].push_back(x);
    }
    return dump(j);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    py::register_exception<Error>(m, "TopocodeError", PyExc_ValueError);

    m.def("linform_parse", [](const std::string& s) {
        LinForm f = parse_linform(s);
        return std::make_pair(f.k, f.d);
    });
    m.def("linform_format", [](std::int64_t k, std::int64_t d) { return to_string(LinForm(k, d)); });
    m.def("families", [] {
        std::vector<std::string> out;
        for (Family f : all_families()) out.push_back(family_name(f));
        return out;
    });
    m.def("count_partitions", [](int mm, int k) { return count_partitions(mm, k).str(); });
    m.def("tree_coloring", &tree_coloring, py::arg("graph"), py::arg("family"), py::arg("choices") = "");
    m.def("verify", &verify_json, py::arg("colored"), py::arg("family"), py::arg("constant") = py::none(),
          py::arg("k") = py::none(), py::arg("d") = py::none());
    m.def("topcode_matrix", &topcode_matrix);
    m.def("key_string", &key_string, py::arg("matrix"), py::arg("order"), py::arg("k"), py::arg("d"));
    m.def("peel", &peel);
    m.def("set_ordered_graceful", &set_ordered_graceful, py::arg("graph"), py::arg("budget"), py::arg("seed"));
    m.def("set_coloring", &set_coloring, py::arg("colored"), py::arg("method"), py::arg("w"));
    m.def("group_members", &group_members);
    m.def("pnbsp", &pnbsp, py::arg("s"), py::arg("q"), py::arg("family"), py::arg("budget"), py::arg("max_param"));
}
