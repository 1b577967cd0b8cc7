#include "topocode/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace topocode {

Json to_json(const LinForm& f) { return Json::array({f.k, f.d}); }

LinForm linform_from_json(const Json& j) {
    if (j.is_number_integer()) return LinForm::plain(j.get<std::int64_t>());
    if (j.is_string()) return parse_linform(j.get<std::string>());
    if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer())
        return LinForm(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
    throw Error("parse-error", "expected a color as [k, d], an integer or a string");
}

namespace {

std::vector<LinForm> forms_from_json(const Json& j, const char* what) {
    if (!j.is_array()) throw Error("parse-error", std::string(what) + " must be an array");
    std::vector<LinForm> out;
    for (const auto& x : j) out.push_back(linform_from_json(x));
    return out;
}

Json forms_to_json(const std::vector<LinForm>& xs) {
    Json a = Json::array();
    for (const auto& x : xs) a.push_back(to_json(x));
    return a;
}

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error("parse-error", std::string("missing member '") + key + "'");
    return j.at(key);
}

std::vector<Edge> raw_edges(const Json& j) {
    std::vector<Edge> edges;
    for (const auto& e : member(j, "edges")) {
        if (!e.is_array() || e.size() != 2) throw Error("parse-error", "edges must be [u, v] pairs");
        edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return edges;
}

}  // namespace

Json to_json(const Graph& g) {
    Json j;
    j["p"] = g.p;
    Json es = Json::array();
    for (auto [u, v] : g.edges) es.push_back(Json::array({u, v}));
    j["edges"] = es;
    if (g.has_bipartition()) {
        j["X"] = g.X();
        j["Y"] = g.Y();
    }
    return j;
}

Graph graph_from_json(const Json& j) {
    const int p = member(j, "p").get<int>();
    std::vector<int> side;
    if (j.contains("X") || j.contains("Y")) {
        side.assign(p, -1);
        for (const char* key : {"X", "Y"}) {
            if (!j.contains(key)) continue;
            for (int v : j.at(key).get<std::vector<int>>()) {
                if (v < 0 || v >= p) throw Error("no-such-vertex", "bipartition lists an unknown vertex");
                side[v] = key[0] == 'X' ? 0 : 1;
            }
        }
        if (std::count(side.begin(), side.end(), -1) > 0)
            throw Error("invalid-graph", "bipartition does not cover every vertex");
    }
    return Graph::make(p, raw_edges(j), side);
}

Json to_json(const TotalColoring& f) {
    Json j;
    j["vertices"] = forms_to_json(f.v);
    j["edges"] = forms_to_json(f.e);
    return j;
}

TotalColoring coloring_from_json(const Json& j) {
    TotalColoring f;
    if (j.contains("vertices")) f.v = forms_from_json(j.at("vertices"), "vertices");
    if (j.contains("edges")) f.e = forms_from_json(j.at("edges"), "edges");
    return f;
}

Json to_json(const ColoredGraph& cg) {
    Json j = to_json(cg.graph);
    j["coloring"] = to_json(cg.coloring);
    return j;
}

ColoredGraph colored_graph_from_json(const Json& j) {
    ColoredGraph cg;
    cg.graph = graph_from_json(j);
    if (!j.contains("coloring")) return cg;
    TotalColoring raw = coloring_from_json(j.at("coloring"));
    cg.coloring.v = raw.v;
    if (!raw.v.empty() && static_cast<int>(raw.v.size()) != cg.graph.p)
        throw Error("parse-error", "vertex color count differs from p");
    if (!raw.e.empty()) {
        auto edges = raw_edges(j);
        if (raw.e.size() != edges.size()) throw Error("parse-error", "edge color count differs from the edge count");
        cg.coloring.e.assign(edges.size(), LinForm{});
        for (std::size_t i = 0; i < edges.size(); ++i) {
            auto [u, v] = edges[i];
            cg.coloring.e[cg.graph.edge_index(std::min(u, v), std::max(u, v))] = raw.e[i];
        }
    }
    return cg;
}

Json to_json(const TopcodeMatrix& m) {
    Json j;
    j["X"] = forms_to_json(m.X);
    j["E"] = forms_to_json(m.E);
    j["Y"] = forms_to_json(m.Y);
    return j;
}

Json to_json(const IntMatrix& m) {
    Json j;
    j["X"] = m.X;
    j["E"] = m.E;
    j["Y"] = m.Y;
    return j;
}

TopcodeMatrix matrix_from_json(const Json& j) {
    TopcodeMatrix m{forms_from_json(member(j, "X"), "X"), forms_from_json(member(j, "E"), "E"),
                    forms_from_json(member(j, "Y"), "Y")};
    m.check();
    return m;
}

Json to_json(const ValueSet& s) { return forms_to_json(s); }

Json to_json(const SetColoring& sc) {
    Json j, vs = Json::array(), es = Json::array();
    for (const auto& s : sc.v) vs.push_back(to_json(s));
    for (const auto& s : sc.e) es.push_back(to_json(s));
    j["vertices"] = vs;
    j["edges"] = es;
    return j;
}

SetColoring set_coloring_from_json(const Json& j) {
    SetColoring sc;
    if (j.contains("vertices"))
        for (const auto& s : j.at("vertices")) sc.v.push_back(make_set(forms_from_json(s, "vertex set")));
    if (j.contains("edges"))
        for (const auto& s : j.at("edges")) sc.e.push_back(make_set(forms_from_json(s, "edge set")));
    return sc;
}

Json to_json(const Hypergraph& h) {
    Json j, es = Json::array();
    j["lambda"] = to_json(h.lambda);
    for (const auto& e : h.edges) es.push_back(to_json(e));
    j["edges"] = es;
    j["covers"] = h.covers;
    return j;
}

Json to_json(const VerifyReport& r) {
    Json j;
    j["pass"] = r.pass;
    j["constant"] = r.constant_found ? to_json(*r.constant_found) : Json();
    j["edge_set"] = forms_to_json(r.edge_set_found);
    Json vs = Json::array();
    for (const auto& v : r.violations) {
        Json x;
        x["edge"] = v.edge;
        x["vertex"] = v.vertex;
        x["reason"] = v.reason;
        vs.push_back(x);
    }
    j["violations"] = vs;
    j["reduced_edges"] = r.reduced_edges;
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("io-error", "cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Json read_json_file(const std::string& path) {
    try {
        return Json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw Error("parse-error", path + ": " + e.what());
    }
}

TopcodeMatrix read_matrix_file(const std::string& path) {
    std::string text = read_file(path);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        try {
            return matrix_from_json(Json::parse(text));
        } catch (const nlohmann::json::exception& e) {
            throw Error("parse-error", path + ": " + e.what());
        }
    }
    return parse_matrix_text(text);
}

}  // namespace topocode
