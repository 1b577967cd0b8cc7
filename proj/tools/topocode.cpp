#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "topocode/combinatorics.hpp"
#include "topocode/constructors.hpp"
#include "topocode/groups.hpp"
#include "topocode/json_io.hpp"
#include "topocode/keystrings.hpp"

using namespace topocode;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_csv(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw UsageError("expected comma-separated integers, got '" + s + "'");
        }
    }
    return out;
}

std::vector<std::string> parse_str_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(tok);
    return out;
}

// --k/--d: both integers select a concrete point, otherwise symbolic mode.
struct ParamFlags {
    std::string k = "sym", d = "sym";
    bool concrete() const {
        if ((k == "sym") != (d == "sym")) throw UsageError("--k and --d must both be integers or both be sym");
        return k != "sym";
    }
    std::int64_t kv() const { return to_int(k, "--k"); }
    std::int64_t dv() const { return to_int(d, "--d"); }
    Params params() const { return concrete() ? Params::at(kv(), dv()) : Params::sym(); }
    static std::int64_t to_int(const std::string& s, const char* flag) {
        try {
            std::size_t pos = 0;
            std::int64_t v = std::stoll(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw UsageError(std::string(flag) + " expects an integer or sym");
        }
    }
};

void add_params(CLI::App* app, ParamFlags& p) {
    app->add_option("--k", p.k, "k as an integer, or sym")->capture_default_str();
    app->add_option("--d", p.d, "d as an integer, or sym")->capture_default_str();
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Graph load_graph(const std::string& path) { return graph_from_json(read_json_file(path)); }
ColoredGraph load_colored(const std::string& path) { return colored_graph_from_json(read_json_file(path)); }

ColoredGraph require_colored(const std::string& path) {
    ColoredGraph cg = load_colored(path);
    if (static_cast<int>(cg.coloring.v.size()) != cg.graph.p)
        throw Error("invalid-argument", path + " carries no vertex coloring");
    return cg;
}

Graph tree_input(const std::string& file, int random_n, std::uint64_t seed) {
    if (!file.empty()) return load_graph(file);
    if (random_n > 0) {
        Rng rng(seed);
        return random_tree(random_n, rng);
    }
    throw UsageError("give --tree FILE or --random-tree N");
}

Json evaluated(const TotalColoring& f, const ParamFlags& p) {
    if (!p.concrete()) return Json();
    return to_json(f.eval(p.kv(), p.dv()));
}

Json solution_json(const PnbspSolution& s) {
    Json j;
    j["k"] = s.k0;
    j["d"] = s.d0;
    j["matrix"] = to_json(s.matrix);
    j["base"] = to_json(s.base);
    j["beta"] = s.beta;
    j["gamma"] = s.gamma;
    Json gs = Json::array();
    for (const auto& g : s.graphs) gs.push_back(to_json(ColoredGraph{g.graph, g.coloring}));
    j["graphs"] = gs;
    return j;
}

Json peel_json(const Graph& t) {
    PeelTrace tr = peel_leaves(t);
    Json j;
    j["diameter"] = diameter(t);
    j["m"] = tr.m();
    j["levels"] = tr.levels();
    j["alive"] = tr.alive;
    j["removed"] = tr.removed;
    j["center"] = tr.center;
    j["star_leaves"] = tr.star_leaves;
    j["longest_path"] = longest_path(t);
    j["choice_length"] = choice_length(t);
    auto [lhs, rhs] = leaf_identity_sides(t);
    j["leaf_identity"] = Json::object({{"leaves", lhs}, {"formula", rhs}, {"holds", lhs == rhs}});
    return j;
}

std::optional<std::pair<TotalColoring, TotalColoring>> both_colored(const ColoredGraph& a, const ColoredGraph& b) {
    if (a.coloring.v.empty() || b.coloring.v.empty()) return std::nullopt;
    return std::make_pair(a.coloring, b.coloring);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Topological coding toolkit: (k,d)-total colorings, Topcode-matrices and number-based strings"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    std::string tree_file, graph_file, family = "graceful", choices, order = "rowmajor";
    std::uint64_t seed = 0;
    std::int64_t budget = 1'000'000;
    int jobs = 1, random_n = 0;
    ParamFlags par;

    auto* gen = app.add_subcommand("gen", "Construct a colored graph");
    std::string construct = "tree", kmn, constant_text;
    std::vector<std::string> components;
    int leaves = 3, spine = 0;
    gen->add_option("--construct", construct, "tree, kmn, rla, search, forest or book")->capture_default_str();
    gen->add_option("--tree,--graph", tree_file, "input graph JSON");
    gen->add_option("--random-tree", random_n, "random tree on N vertices (uses --seed)");
    gen->add_option("--family", family, "coloring family")->capture_default_str();
    gen->add_option("--choices", choices, "leaf-order bits, one per peel level");
    gen->add_option("--kmn", kmn, "m,n for the complete bipartite construction");
    gen->add_option("--leaves", leaves, "leaves added by the RLA construction")->capture_default_str();
    gen->add_option("--component", components, "component or page JSON (repeatable)");
    gen->add_option("--spine", spine, "spine size for the graph book");
    gen->add_option("--seed", seed, "random seed")->capture_default_str();
    gen->add_option("--budget", budget, "search budget")->capture_default_str();
    add_params(gen, par);

    auto* ver = app.add_subcommand("verify", "Verify a colored graph against a family");
    bool set_ordered = false, labeling = false, odd_alt = false;
    ver->add_option("--graph,--tree", graph_file, "colored graph JSON")->required();
    ver->add_option("--family", family, "coloring family")->capture_default_str();
    ver->add_option("--constant", constant_text, "expected constant, e.g. 2k+5d");
    ver->add_flag("--set-ordered", set_ordered, "also demand max f(X) < min f(Y)");
    ver->add_flag("--labeling", labeling, "demand distinct vertex colors");
    ver->add_flag("--odd-alt", odd_alt, "use the odd set {k+2(i-1)d}");
    add_params(ver, par);

    auto* tra = app.add_subcommand("transform", "Apply transformation moves or derive an equivalent coloring");
    std::string moves, target;
    tra->add_option("--graph,--tree", graph_file, "colored graph JSON")->required();
    tra->add_option("--moves", moves, "comma-separated move numbers");
    tra->add_option("--to", target, "derive the equivalent coloring of this family");
    add_params(tra, par);

    auto* mat = app.add_subcommand("matrix", "Topcode-matrix operations");
    std::string matrix_file, other_file, common_file, op = "show";
    int max_p = 0;
    mat->add_option("--graph,--tree", graph_file, "colored graph JSON");
    mat->add_option("--matrix", matrix_file, "matrix file (JSON or text)");
    mat->add_option("--other", other_file, "second operand");
    mat->add_option("--common", common_file, "common part for coincide/split");
    mat->add_option("--op", op,
                    "show, union-sum, subtract, subtract-strict, intersect, unite, coincide, similar, canonical, "
                    "parameterize, graphs")
        ->capture_default_str();
    mat->add_option("--max-p", max_p, "vertex limit for graphs (default 2q)");
    mat->add_option("--budget", budget, "search budget")->capture_default_str();
    add_params(mat, par);

    auto* str = app.add_subcommand("string", "Number-based strings from a Topcode-matrix");
    bool count = false;
    str->add_option("--matrix", matrix_file, "matrix file (JSON or text)");
    str->add_option("--graph,--tree", graph_file, "colored graph JSON");
    str->add_option("--order", order, "rowmajor, perm:<csv> or index:<n>")->capture_default_str();
    str->add_flag("--count", count, "also count the strings of the matrix");
    add_params(str, par);

    auto* pn = app.add_subcommand("pnbsp", "Recover matrices and graphs from a number-based string");
    std::string text;
    int q = 0;
    std::int64_t max_param = 1000;
    int max_graphs = 16;
    pn->add_option("--string", text, "the number-based string")->required();
    pn->add_option("--q", q, "number of edges")->required();
    pn->add_option("--family", family, "coloring family")->capture_default_str();
    pn->add_option("--budget", budget, "candidate checks")->capture_default_str();
    pn->add_option("--jobs", jobs, "worker threads")->capture_default_str();
    pn->add_option("--max-param", max_param, "largest d tried when q = 1")->capture_default_str();
    pn->add_option("--max-graphs", max_graphs, "graphs reported per solution")->capture_default_str();

    auto* grp = app.add_subcommand("group", "Every-zero matrix and string groups");
    std::int64_t M = 0, gi = 1, gj = 1, zero = 1;
    std::string edge_fn = "sum", strings;
    grp->add_option("--matrix", matrix_file, "base matrix (integers)");
    grp->add_option("--strings", strings, "comma-separated member strings for the string group");
    grp->add_option("--M", M, "modulus")->required();
    grp->add_option("--fn", edge_fn, "sum or abs-difference")->capture_default_str();
    grp->add_option("--op", op, "members, add, sub or laws")->capture_default_str();
    grp->add_option("--i", gi, "first index")->capture_default_str();
    grp->add_option("--j", gj, "second index")->capture_default_str();
    grp->add_option("--zero", zero, "zero index")->capture_default_str();

    auto* hom = app.add_subcommand("homo", "Graph homomorphisms and tree distances");
    std::string phi, kind = "colored";
    int bound = 6;
    hom->add_option("--tree", tree_file, "source graph JSON")->required();
    hom->add_option("--graph", graph_file, "target graph JSON");
    hom->add_option("--op", op, "check, coincide or distance")->capture_default_str();
    hom->add_option("--phi", phi, "comma-separated vertex map");
    hom->add_option("--kind", kind, "condition set")->capture_default_str();
    hom->add_option("--bound", bound, "distance search bound")->capture_default_str();

    auto* sc = app.add_subcommand("setcolor", "Set-colorings and hypergraphs");
    std::string method = "vset", w, lift, hyper, checks, set_file, magic;
    int nfold = 2;
    bool strict = false;
    sc->add_option("--tree,--graph", tree_file, "colored tree (or graph for six)")->required();
    sc->add_option("--method", method, "vset, pwcsc-A..E, nfold, six or verify")->capture_default_str();
    sc->add_option("--w", w, "W operator: abs-difference or sum (default from --family)");
    sc->add_option("--family", family, "family giving the default W operator")->capture_default_str();
    sc->add_option("--n", nfold, "repetitions for nfold")->capture_default_str();
    sc->add_option("--lift", lift, "lift to (k,d) values: origin or side");
    sc->add_option("--hyper", hyper, "extract a hypergraph: vertices, edges or total");
    sc->add_option("--check", checks, "comma-separated Nset/Chyper constraints");
    sc->add_option("--magic", magic, "comma-separated witness families, optionally family=constant");
    sc->add_flag("--strict", strict, "universal instead of existential witnesses");
    sc->add_option("--set", set_file, "set-coloring JSON for --method verify");
    sc->add_option("--seed", seed, "vertex-split seed")->capture_default_str();

    auto* pe = app.add_subcommand("peel", "Leaf-peeling trace of a tree");
    pe->add_option("--tree", tree_file, "tree JSON");
    pe->add_option("--random-tree", random_n, "random tree on N vertices (uses --seed)");
    pe->add_option("--seed", seed, "random seed")->capture_default_str();

    auto* pa = app.add_subcommand("partition", "Count partitions of m into parts of size at most k");
    int pm = 0, pk = 0;
    pa->add_option("--m", pm, "m")->required();
    pa->add_option("--k", pk, "largest part")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*gen) {
            Family fam = parse_family(family);
            Json out;
            ColoredGraph cg;
            std::optional<LinForm> constant;
            if (construct == "tree") {
                Graph t = tree_input(tree_file, random_n, seed);
                cg = tree_kd_coloring(t, fam, parse_choices(choices));
                out["choices"] = choices;
            } else if (construct == "kmn") {
                auto mn = parse_int_csv(kmn);
                if (mn.size() != 2) throw UsageError("--kmn expects m,n");
                cg = color_complete_bipartite(mn[0], mn[1]);
            } else if (construct == "search") {
                Graph g = tree_input(tree_file, random_n, seed);
                SetOrderedSearch s = find_set_ordered_graceful(g, budget, seed);
                out["status"] = status_name(s.status);
                out["nodes"] = s.nodes;
                if (s.status != SearchStatus::found) {
                    emit(out);
                    return 1;
                }
                cg = {s.graph, s.labeling};
            } else if (construct == "rla") {
                ColoredGraph base;
                if (!tree_file.empty()) base = load_colored(tree_file);
                else base.graph = tree_input(tree_file, random_n, seed);
                if (base.coloring.v.empty()) {
                    SetOrderedSearch s = find_set_ordered_graceful(base.graph, budget, seed);
                    if (s.status != SearchStatus::found) throw Error("not-set-ordered", "no set-ordered graceful labeling found");
                    base = {s.graph, s.labeling};
                }
                LeafPlan plan = random_leaf_plan(base.graph, leaves, seed);
                RlaResult r = rla(base.graph, base.coloring, plan, fam);
                cg = {r.graph, r.coloring};
                constant = r.constant;
            } else if (construct == "forest" || construct == "book") {
                std::vector<ColoredGraph> parts;
                for (const auto& f : components) {
                    ColoredGraph c = load_colored(f);
                    if (c.coloring.v.empty()) {
                        if (construct == "book") throw Error("invalid-argument", f + " carries no coloring");
                        SetOrderedSearch s = find_set_ordered_graceful(c.graph, budget, seed);
                        if (s.status != SearchStatus::found)
                            throw Error("not-set-ordered", f + " has no set-ordered graceful labeling");
                        c = {s.graph, s.labeling};
                    }
                    parts.push_back(std::move(c));
                }
                cg = construct == "forest" ? flawed_forest_labeling(parts) : build_graph_book(parts, spine);
            } else {
                throw UsageError("unknown --construct '" + construct + "'");
            }
            if (!constant && construct != "forest" && construct != "search") {
                FamilySpec spec;
                spec.family = construct == "kmn" || construct == "book" ? Family::graceful : fam;
                VerifyReport rep = verify(cg.graph, cg.coloring, spec, Params::sym());
                constant = rep.constant_found;
            }
            Json g = to_json(cg);
            for (auto it = g.begin(); it != g.end(); ++it) out[it.key()] = it.value();
            out["family"] = family_name(construct == "kmn" || construct == "book" ? Family::graceful : fam);
            out["constant"] = constant ? to_json(*constant) : Json();
            out["evaluated"] = evaluated(cg.coloring, par);
            emit(out);
            return 0;
        }

        if (*ver) {
            ColoredGraph cg = require_colored(graph_file);
            FamilySpec spec;
            spec.family = parse_family(family);
            spec.set_ordered = set_ordered;
            spec.labeling = labeling;
            spec.odd_alt = odd_alt;
            if (!constant_text.empty()) spec.constant = parse_linform(constant_text);
            VerifyReport rep = verify(cg.graph, cg.coloring, spec, par.params());
            Json out;
            out["family"] = family_name(spec.family);
            Json r = to_json(rep);
            for (auto it = r.begin(); it != r.end(); ++it) out[it.key()] = it.value();
            emit(out);
            return rep.pass ? 0 : 1;
        }

        if (*tra) {
            ColoredGraph cg = require_colored(graph_file);
            Json out;
            if (!target.empty()) {
                Derived dv = derive_equivalent(cg.graph, cg.coloring, parse_family(target));
                cg.coloring = dv.coloring;
                out["family"] = family_name(parse_family(target));
                out["constant"] = dv.constant ? to_json(*dv.constant) : Json();
            } else if (!moves.empty()) {
                cg.coloring = transform(cg.graph, cg.coloring, parse_int_csv(moves));
                out["moves"] = parse_int_csv(moves);
            } else {
                throw UsageError("give --moves or --to");
            }
            Json g = to_json(cg);
            for (auto it = g.begin(); it != g.end(); ++it) out[it.key()] = it.value();
            out["evaluated"] = evaluated(cg.coloring, par);
            emit(out);
            return 0;
        }

        if (*mat) {
            TopcodeMatrix a;
            if (!matrix_file.empty()) a = read_matrix_file(matrix_file);
            else if (!graph_file.empty()) {
                ColoredGraph cg = require_colored(graph_file);
                a = from_colored_graph(cg.graph, cg.coloring);
            } else {
                throw UsageError("give --matrix or --graph");
            }
            auto other = [&] {
                if (other_file.empty()) throw UsageError("--op " + op + " needs --other");
                return read_matrix_file(other_file);
            };
            Json out;
            TopcodeMatrix r;
            if (op == "show") r = a;
            else if (op == "union-sum") r = union_sum(a, other());
            else if (op == "subtract") r = subtract(a, other());
            else if (op == "subtract-strict") r = subtract_strict(a, other());
            else if (op == "intersect") r = intersect(a, other());
            else if (op == "unite") r = unite(a, other());
            else if (op == "canonical") r = canonical_order(a);
            else if (op == "parameterize") r = parameterize(to_int_matrix(a));
            else if (op == "coincide") {
                if (common_file.empty()) throw UsageError("coincide needs --common");
                r = coincide(a, other(), read_matrix_file(common_file));
            } else if (op == "similar") {
                out["similar"] = is_similar(a, other());
                emit(out);
                return 0;
            } else if (op == "graphs") {
                int limit = max_p > 0 ? max_p : static_cast<int>(2 * a.q());
                GraphsFromMatrix gm = graphs_from_matrix(a, limit, budget);
                Json gs = Json::array();
                for (const auto& g : gm.graphs) gs.push_back(to_json(ColoredGraph{g.graph, g.coloring}));
                out["graphs"] = gs;
                out["count"] = gm.graphs.size();
                out["partial"] = gm.partial;
                out["candidates"] = gm.candidates;
                emit(out);
                return 0;
            } else {
                throw UsageError("unknown --op '" + op + "'");
            }
            out["matrix"] = to_json(r);
            out["evaluated"] = par.concrete() ? to_json(evaluate(r, par.kv(), par.dv())) : Json();
            emit(out);
            return 0;
        }

        if (*str) {
            TopcodeMatrix a;
            if (!matrix_file.empty()) a = read_matrix_file(matrix_file);
            else if (!graph_file.empty()) {
                ColoredGraph cg = require_colored(graph_file);
                a = from_colored_graph(cg.graph, cg.coloring);
            } else {
                throw UsageError("give --matrix or --graph");
            }
            IntMatrix m = par.concrete() ? evaluate(a, par.kv(), par.dv()) : to_int_matrix(a);
            std::string s = string_from_matrix(m, OrderSpec::parse(order));
            Json out;
            out["string"] = s;
            out["length"] = s.size();
            if (count) {
                StringCounts c = count_strings(m);
                out["factorial_bound"] = c.factorial_bound.str();
                out["arrangements"] = c.arrangements.str();
                out["distinct"] = c.distinct;
            }
            emit(out);
            return 0;
        }

        if (*pn) {
            FamilySpec spec;
            spec.family = parse_family(family);
            PnbspOptions opt;
            opt.budget = budget;
            opt.jobs = jobs;
            opt.max_param = max_param;
            opt.max_graphs = max_graphs;
            PnbspResult r = pnbsp_solve(text, q, spec, opt);
            Json out, sols = Json::array();
            for (const auto& s : r.solutions) sols.push_back(solution_json(s));
            out["solutions"] = sols;
            out["exhausted"] = r.exhausted;
            out["work"] = r.work;
            emit(out);
            return r.solutions.empty() ? 1 : 0;
        }

        if (*grp) {
            Json out;
            if (!strings.empty()) {
                if (op != "add" && op != "sub") throw UsageError("string groups support --op add or sub");
                StringGroupResult r = string_group_op(parse_str_csv(strings), gi, gj, zero, M, op == "add");
                out["index"] = r.index;
                out["value"] = r.value;
                emit(out);
                return 0;
            }
            if (matrix_file.empty()) throw UsageError("give --matrix or --strings");
            MatrixGroup G = build_every_zero_family(to_int_matrix(read_matrix_file(matrix_file)), M, parse_edge_fn(edge_fn));
            if (op == "members") {
                Json ms = Json::array();
                for (const auto& m : G.members) ms.push_back(to_json(m));
                out["members"] = ms;
            } else if (op == "laws") {
                out["laws_hold"] = check_group_laws(G);
                emit(out);
                return out["laws_hold"].get<bool>() ? 0 : 1;
            } else if (op == "add" || op == "sub") {
                GroupOpResult r = op == "add" ? group_add(G, gi, gj, zero) : group_sub(G, gi, gj, zero);
                out["index"] = r.index;
                out["value"] = to_json(r.value);
            } else {
                throw UsageError("unknown --op '" + op + "'");
            }
            emit(out);
            return 0;
        }

        if (*hom) {
            ColoredGraph t = load_colored(tree_file);
            Json out;
            if (op == "coincide") {
                if (t.coloring.v.empty()) throw Error("invalid-argument", "coincide needs a colored source");
                Coincided c = coincide_same_colors(t.graph, t.coloring);
                Json g = to_json(ColoredGraph{c.graph, c.coloring});
                for (auto it = g.begin(); it != g.end(); ++it) out[it.key()] = it.value();
                out["phi"] = c.phi;
                emit(out);
                return 0;
            }
            if (graph_file.empty()) throw UsageError("--op " + op + " needs --graph");
            ColoredGraph g = load_colored(graph_file);
            if (op == "distance") {
                auto dist = pm_e_distance(t.graph, t.coloring, g.graph, g.coloring, bound);
                out["distance"] = dist ? Json(*dist) : Json();
                emit(out);
                return dist ? 0 : 1;
            }
            if (op != "check") throw UsageError("unknown --op '" + op + "'");
            HomoReport r = homomorphism_check(t.graph, g.graph, parse_int_csv(phi), both_colored(t, g),
                                              homo_conditions(kind));
            out["pass"] = r.pass;
            out["failures"] = r.failures;
            emit(out);
            return r.pass ? 0 : 1;
        }

        if (*sc) {
            Json out;
            if (method == "six") {
                SixSetColoring s = graph_kd_total_set_coloring(load_graph(tree_file), seed);
                out["tree"] = to_json(s.tree);
                out["tree_to_graph"] = s.tree_to_graph;
                Json fams = Json::array();
                for (const auto& [f, c] : s.families)
                    fams.push_back(Json::object({{"family", family_name(f)}, {"constant", c ? to_json(*c) : Json()}}));
                out["families"] = fams;
                out["set_coloring"] = to_json(s.coloring);
                emit(out);
                return 0;
            }
            SetColoring res;
            Graph g;
            if (method == "verify") {
                g = load_graph(tree_file);
                if (set_file.empty()) throw UsageError("--method verify needs --set");
                Json sj = read_json_file(set_file);
                res = set_coloring_from_json(sj.contains("set_coloring") ? sj.at("set_coloring") : sj);
            } else {
                ColoredGraph t = require_colored(tree_file);
                g = t.graph;
                WOp op_w = w.empty() ? default_w(parse_family(family)) : parse_w(w);
                if (method == "vset") res = vset_coloring(t.graph, t.coloring);
                else if (method == "nfold") res = pwcsc_a_nfold(t.graph, t.coloring, nfold, op_w);
                else if (method.rfind("pwcsc-", 0) == 0)
                    res = pwcsc(t.graph, t.coloring, parse_pwcsc(method.substr(6)), op_w);
                else throw UsageError("unknown --method '" + method + "'");
                if (!lift.empty()) {
                    if (lift != "origin" && lift != "side") throw UsageError("--lift expects origin or side");
                    res = lift_kd(t.graph, t.coloring, res, lift == "origin" ? LiftMode::origin : LiftMode::side);
                }
            }
            out["set_coloring"] = to_json(res);
            if (!hyper.empty()) {
                HyperScope scope = hyper == "vertices" ? HyperScope::vertices
                                   : hyper == "edges"  ? HyperScope::edges
                                   : hyper == "total"  ? HyperScope::total
                                                       : throw UsageError("--hyper expects vertices, edges or total");
                out["hypergraph"] = to_json(extract_hypergraph(res, scope));
            }
            bool pass = true;
            if (!checks.empty() || !magic.empty()) {
                SetVerifyOptions o;
                o.constraints = parse_str_csv(checks);
                o.strict = strict;
                for (const auto& m : parse_str_csv(magic)) {
                    auto eq = m.find('=');
                    MagicSpec ms;
                    ms.family = parse_family(m.substr(0, eq));
                    if (eq != std::string::npos) ms.constant = parse_linform(m.substr(eq + 1));
                    o.magic.push_back(ms);
                }
                SetVerifyReport rep = verify_set_coloring(g, res, o);
                Json cs = Json::array();
                for (const auto& c : rep.checks) {
                    Json x;
                    x["name"] = c.name;
                    x["pass"] = c.pass;
                    x["detail"] = c.detail;
                    x["constant"] = c.constant ? to_json(*c.constant) : Json();
                    Json ws = Json::array();
                    for (const auto& v : c.witnesses) ws.push_back(to_json(v));
                    x["witnesses"] = ws;
                    cs.push_back(x);
                }
                out["pass"] = rep.pass;
                out["checks"] = cs;
                pass = rep.pass;
            }
            emit(out);
            return pass ? 0 : 1;
        }

        if (*pe) {
            emit(peel_json(tree_input(tree_file, random_n, seed)));
            return 0;
        }

        if (*pa) {
            Json out;
            out["m"] = pm;
            out["k"] = pk;
            out["count"] = count_partitions(pm, pk).str();
            emit(out);
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
