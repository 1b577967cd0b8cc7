#include "topocode/set_coloring.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "topocode/constructors.hpp"

namespace topocode {

using i64 = std::int64_t;

ValueSet make_set(std::vector<LinForm> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

ValueSet set_intersection(const ValueSet& a, const ValueSet& b) {
    ValueSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

ValueSet set_union(const ValueSet& a, const ValueSet& b) {
    ValueSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

SetColoring SetColoring::eval(i64 k0, i64 d0) const {
    auto ev = [&](const std::vector<ValueSet>& xs) {
        std::vector<ValueSet> out;
        for (const auto& s : xs) {
            ValueSet t;
            for (const auto& x : s) t.push_back(LinForm::plain(x.eval(k0, d0)));
            out.push_back(make_set(std::move(t)));
        }
        return out;
    };
    return {ev(v), ev(e)};
}

WOp default_w(Family f) {
    switch (f) {
        case Family::harmonious:
        case Family::edge_magic:
        case Family::felicitous_difference:
        case Family::odd_elegant:
        case Family::odd_edge_magic:
        case Family::odd_edge_felicitous_difference:
            return WOp::sum;
        default:
            return WOp::abs_difference;
    }
}

WOp parse_w(const std::string& s) {
    if (s == "abs-difference" || s == "absdiff") return WOp::abs_difference;
    if (s == "sum") return WOp::sum;
    throw Error("invalid-argument", "W operator must be abs-difference or sum");
}

LinForm apply_w(WOp w, const LinForm& a, const LinForm& b) { return w == WOp::sum ? a + b : sym_abs(a - b); }

ValueSet w_edge_set(const ValueSet& a, const ValueSet& b, WOp w) {
    std::vector<LinForm> out = set_intersection(a, b);
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(apply_w(w, x, y));
    return make_set(std::move(out));
}

namespace {

void require_tree(const Graph& t, const TotalColoring& f) {
    if (!t.is_tree()) throw Error("not-a-tree", "set-coloring constructions need a tree");
    if (static_cast<int>(f.v.size()) != t.p) throw Error("invalid-argument", "vertex labeling size mismatch");
}

void require_injective(const std::vector<LinForm>& xs, const std::string& what) {
    auto s = make_set(xs);
    if (s.size() != xs.size()) throw Error("non-injective", what + " labels must be pairwise distinct");
}

// Star stage shared by VSET and the path algorithm: the center keeps its own
// label, every other vertex pairs its label with the center's.
void color_star(const Graph& t, const TotalColoring& f, const std::vector<int>& members, std::vector<ValueSet>& F) {
    if (members.size() == 1) {
        F[members[0]] = {f.v[members[0]]};
        return;
    }
    int center = -1;
    auto adj = t.adjacency();
    std::vector<bool> in(t.p, false);
    for (int v : members) in[v] = true;
    for (int v : members) {
        int deg = 0;
        for (int w : adj[v]) deg += in[w];
        if (deg >= 2) center = v;
    }
    if (center < 0) center = std::max(members[0], members[1]);
    for (int v : members) F[v] = v == center ? ValueSet{f.v[v]} : make_set({f.v[v], f.v[center]});
}

std::vector<ValueSet> peel_vertex_sets(const Graph& t, const TotalColoring& f) {
    std::vector<ValueSet> F(t.p);
    if (t.p == 1) {
        F[0] = {f.v[0]};
        return F;
    }
    PeelTrace tr = peel_leaves(t);
    auto adj = t.adjacency();
    for (std::size_t i = 0; i < tr.removed.size(); ++i) {
        std::vector<bool> alive(t.p, false);
        for (int v : tr.alive[i]) alive[v] = true;
        for (int v : tr.removed[i]) alive[v] = false;
        for (int v : tr.removed[i])
            for (int w : adj[v])
                if (alive[w]) F[v] = make_set({f.v[v], f.v[w]});
    }
    std::vector<int> star = tr.star_leaves;
    star.push_back(tr.center);
    std::sort(star.begin(), star.end());
    color_star(t, f, star, F);
    return F;
}

std::vector<ValueSet> path_vertex_sets(const Graph& t, const TotalColoring& f) {
    std::vector<ValueSet> F(t.p);
    std::vector<bool> alive(t.p, true);
    auto adj = t.adjacency();
    while (true) {
        std::vector<bool> drop(t.p);
        for (int v = 0; v < t.p; ++v) drop[v] = !alive[v];
        VertexMapped sub = remove_vertices(t, drop);
        std::vector<int> back(sub.graph.p);
        for (int v = 0; v < t.p; ++v)
            if (sub.map[v] >= 0) back[sub.map[v]] = v;
        if (sub.graph.p <= 2 || diameter(sub.graph) <= 2) {
            color_star(t, f, back, F);
            break;
        }
        auto path = longest_path(sub.graph);
        const auto sadj = sub.graph.adjacency();
        for (int end : {path[1], path[path.size() - 2]}) {
            for (int z : sadj[end]) {
                if (sadj[z].size() != 1) continue;
                F[back[z]] = make_set({f.v[back[z]], f.v[back[end]]});
                alive[back[z]] = false;
            }
        }
    }
    return F;
}

std::vector<ValueSet> with_edges(const Graph& t, const std::vector<ValueSet>& F, std::optional<WOp> w,
                                 std::vector<ValueSet>& E) {
    E.clear();
    for (auto [u, v] : t.edges) E.push_back(w ? w_edge_set(F[u], F[v], *w) : set_intersection(F[u], F[v]));
    return F;
}

}  // namespace

SetColoring vset_coloring(const Graph& t, const TotalColoring& f) {
    require_tree(t, f);
    require_injective(f.v, "vertex");
    SetColoring sc;
    sc.v = with_edges(t, peel_vertex_sets(t, f), std::nullopt, sc.e);
    return sc;
}

PwcscVariant parse_pwcsc(const std::string& s) {
    if (s == "A" || s == "a") return PwcscVariant::A;
    if (s == "B" || s == "b") return PwcscVariant::B;
    if (s == "C" || s == "c") return PwcscVariant::C;
    if (s == "D" || s == "d") return PwcscVariant::D;
    if (s == "E" || s == "e") return PwcscVariant::E;
    throw Error("invalid-argument", "variant must be one of A..E");
}

SetColoring pwcsc(const Graph& t, const TotalColoring& f, PwcscVariant variant, WOp w) {
    require_tree(t, f);
    std::vector<ValueSet> F(t.p);
    auto adj = t.adjacency();
    auto need_edges = [&] {
        if (static_cast<int>(f.e.size()) != t.q()) throw Error("invalid-argument", "edge labeling size mismatch");
        require_injective(f.e, "edge");
    };
    switch (variant) {
        case PwcscVariant::A:
            require_injective(f.v, "vertex");
            if (static_cast<int>(f.e.size()) == t.q()) require_injective(f.e, "edge");
            F = path_vertex_sets(t, f);
            break;
        case PwcscVariant::B:
            require_injective(f.v, "vertex");
            F = peel_vertex_sets(t, f);
            break;
        case PwcscVariant::C:
            require_injective(f.v, "vertex");
            for (int x = 0; x < t.p; ++x) {
                std::vector<LinForm> s;
                for (int y : adj[x]) s.push_back(f.v[y]);
                F[x] = make_set(std::move(s));
            }
            break;
        case PwcscVariant::D:
        case PwcscVariant::E:
            need_edges();
            for (int x = 0; x < t.p; ++x) {
                std::vector<LinForm> s;
                for (int y : adj[x]) {
                    s.push_back(f.e[t.edge_index(std::min(x, y), std::max(x, y))]);
                    if (variant == PwcscVariant::E) s.push_back(f.v[y]);
                }
                F[x] = make_set(std::move(s));
            }
            break;
    }
    for (const auto& s : F)
        if (s.empty()) throw Error("empty-set", "a vertex received no colors");
    SetColoring sc;
    sc.v = with_edges(t, F, w, sc.e);
    return sc;
}

SetColoring pwcsc_a_nfold(const Graph& t, const TotalColoring& f, int n, WOp w) {
    if (n < 1) throw Error("domain-error", "n must be at least 1");
    SetColoring sc = pwcsc(t, f, PwcscVariant::A, w);
    auto adj = t.adjacency();
    for (int round = 1; round < n; ++round) {
        std::vector<ValueSet> next = sc.v;
        for (int x = 0; x < t.p; ++x)
            for (int y : adj[x]) next[x] = set_union(next[x], sc.v[y]);
        sc.v = with_edges(t, next, w, sc.e);
    }
    return sc;
}

SetColoring lift_kd(const Graph& t, const TotalColoring& f, const SetColoring& sc, LiftMode mode) {
    std::vector<int> side;
    if (t.has_bipartition()) side = t.side;
    else if (auto s = two_coloring(t)) side = *s;
    else throw Error("needs-bipartition", "lifting needs a bipartite graph");
    std::set<LinForm> x_labels;
    for (int v = 0; v < t.p; ++v)
        if (side[v] == 0) x_labels.insert(f.v[v]);
    auto lift_set = [&](const ValueSet& s, bool x_set) {
        std::vector<LinForm> out;
        for (const auto& val : s) {
            if (val.k != 0) throw Error("not-integral", "only plain values can be lifted");
            bool as_x = mode == LiftMode::origin ? x_labels.count(val) > 0 : x_set;
            out.push_back(as_x ? LinForm(0, val.d) : LinForm(1, val.d));
        }
        return make_set(std::move(out));
    };
    SetColoring r;
    for (int v = 0; v < t.p; ++v) r.v.push_back(lift_set(sc.v[v], side[v] == 0));
    for (const auto& s : sc.e) r.e.push_back(lift_set(s, false));
    return r;
}

Hypergraph extract_hypergraph(const SetColoring& sc, HyperScope scope) {
    Hypergraph h;
    std::set<ValueSet> seen;
    auto take = [&](const std::vector<ValueSet>& xs) {
        for (const auto& s : xs) {
            if (s.empty()) throw Error("empty-set", "hyperedges must be nonempty");
            if (seen.insert(s).second) h.edges.push_back(s);
            h.lambda = set_union(h.lambda, s);
        }
    };
    if (scope != HyperScope::edges) take(sc.v);
    if (scope != HyperScope::vertices) take(sc.e);
    ValueSet cover;
    for (const auto& e : h.edges) cover = set_union(cover, e);
    h.covers = cover == h.lambda;
    return h;
}

namespace {

// Edge slot of a harmonious witness: plain colorings use (a+b) mod q, the
// parameterized ones k + ((a+b-k) mod q)d.
std::optional<LinForm> harmonious_image(const LinForm& a, const LinForm& b, i64 q, bool symbolic) {
    LinForm s = symbolic ? a + b - LinForm::K() : a + b;
    if (s.k != 0 || q <= 0) return std::nullopt;
    return LinForm(symbolic ? 1 : 0, ((s.d % q) + q) % q);
}

LinForm magic_value(Family fam, const LinForm& a, const LinForm& b, const LinForm& c) {
    switch (fam) {
        case Family::edge_difference: return c + sym_abs(b - a);
        case Family::edge_magic: return a + c + b;
        case Family::felicitous_difference: return sym_abs(a + b - c);
        case Family::graceful_difference: return sym_abs(sym_abs(a - b) - c);
        default: throw Error("unsupported-family", family_name(fam) + " has no set-coloring constant");
    }
}

bool kuhn(int e, const std::vector<std::vector<int>>& cand, std::vector<int>& match_of_slot, std::vector<bool>& used) {
    for (int s : cand[e]) {
        if (used[s]) continue;
        used[s] = true;
        if (match_of_slot[s] < 0 || kuhn(match_of_slot[s], cand, match_of_slot, used)) {
            match_of_slot[s] = e;
            return true;
        }
    }
    return false;
}

SetCheck check_witness_family(const Graph& g, const SetColoring& sc, const MagicSpec& ms, bool strict) {
    SetCheck c;
    c.name = family_name(ms.family);
    const int q = g.q();
    if (ms.family == Family::graceful || ms.family == Family::harmonious) {
        bool symbolic = false;
        for (const auto* xs : {&sc.v, &sc.e})
            for (const auto& set : *xs)
                for (const auto& x : set) symbolic = symbolic || x.k != 0;
        // Slot s stands for k+sd (parameterized), s+1 (plain graceful) or s (plain harmonious).
        const i64 offset = !symbolic && ms.family == Family::graceful ? 1 : 0;
        std::vector<std::vector<int>> cand(q);
        for (int i = 0; i < q; ++i) {
            auto [u, v] = g.edges[i];
            std::set<int> slots;
            for (const auto& cc : sc.e[i])
                for (const auto& a : sc.v[u])
                    for (const auto& b : sc.v[v]) {
                        std::optional<LinForm> img =
                            ms.family == Family::graceful ? std::optional(sym_abs(a - b))
                                                           : harmonious_image(a, b, q, symbolic);
                        if (!img || *img != cc) continue;
                        const i64 slot = cc.d - offset;
                        if (cc.k == (symbolic ? 1 : 0) && slot >= 0 && slot < q) slots.insert(static_cast<int>(slot));
                    }
            cand[i].assign(slots.begin(), slots.end());
        }
        std::vector<int> match_of_slot(q, -1);
        int matched = 0;
        for (int i = 0; i < q; ++i) {
            std::vector<bool> used(q, false);
            if (kuhn(i, cand, match_of_slot, used)) ++matched;
        }
        c.pass = matched == q;
        if (c.pass) {
            c.witnesses.assign(q, LinForm{});
            for (int s = 0; s < q; ++s)
                c.witnesses[match_of_slot[s]] = LinForm(symbolic ? 1 : 0, s + offset);
        } else {
            c.detail = "no system of distinct edge witnesses covers the target edge set";
        }
        return c;
    }
    std::optional<std::set<LinForm>> common;
    for (int i = 0; i < q; ++i) {
        auto [u, v] = g.edges[i];
        std::set<LinForm> vals;
        for (const auto& cc : sc.e[i])
            for (const auto& a : sc.v[u])
                for (const auto& b : sc.v[v]) vals.insert(magic_value(ms.family, a, b, cc));
        if (strict && vals.size() != 1) {
            c.detail = "edge " + std::to_string(i) + " has several values";
            return c;
        }
        if (!common) {
            common = vals;
        } else {
            std::set<LinForm> keep;
            std::set_intersection(common->begin(), common->end(), vals.begin(), vals.end(),
                                  std::inserter(keep, keep.begin()));
            common = keep;
        }
    }
    if (!common) {
        c.pass = true;
        c.constant = ms.constant;
        return c;
    }
    if (ms.constant) {
        c.pass = common->count(*ms.constant) > 0;
        c.constant = ms.constant;
        if (!c.pass) c.detail = "constant " + to_string(*ms.constant) + " is not witnessed on every edge";
    } else {
        c.pass = !common->empty();
        if (c.pass) c.constant = *common->begin();
        else c.detail = "no common constant";
    }
    return c;
}

}  // namespace

SetVerifyReport verify_set_coloring(const Graph& g, const SetColoring& sc, const SetVerifyOptions& opt) {
    SetVerifyReport rep;
    auto adj = g.adjacency();
    const bool has_v = static_cast<int>(sc.v.size()) == g.p;
    const bool has_e = static_cast<int>(sc.e.size()) == g.q();
    auto nonempty = [](const std::vector<ValueSet>& xs) {
        return std::all_of(xs.begin(), xs.end(), [](const ValueSet& s) { return !s.empty(); });
    };
    auto meets = [](const ValueSet& a, const ValueSet& b) { return !set_intersection(a, b).empty(); };
    auto eidx = [&](int u, int v) { return g.edge_index(std::min(u, v), std::max(u, v)); };
    // Calls fn(e1, e2) for every pair of distinct edges sharing a vertex.
    auto adjacent_edges = [&](const std::function<bool(int, int)>& fn) {
        for (int u = 0; u < g.p; ++u)
            for (std::size_t i = 0; i < adj[u].size(); ++i)
                for (std::size_t j = i + 1; j < adj[u].size(); ++j)
                    if (!fn(eidx(u, adj[u][i]), eidx(u, adj[u][j]))) return false;
        return true;
    };
    auto all_edges = [&](const std::function<bool(int, int, int)>& fn) {
        for (int i = 0; i < g.q(); ++i)
            if (!fn(i, g.edges[i].first, g.edges[i].second)) return false;
        return true;
    };

    for (const auto& name : opt.constraints) {
        SetCheck c;
        c.name = name;
        const bool needs_v = name != "Nset-2", needs_e = name != "Nset-1" && name != "Nset-4" && name != "Nset-8";
        if ((needs_v && !has_v) || (needs_e && !has_e)) {
            c.detail = "coloring does not cover the required elements";
        } else if (name == "Nset-1") {
            c.pass = nonempty(sc.v);
        } else if (name == "Nset-2") {
            c.pass = nonempty(sc.e);
        } else if (name == "Nset-3") {
            c.pass = nonempty(sc.v) && nonempty(sc.e);
        } else if (name == "Nset-4") {
            c.pass = all_edges([&](int, int u, int v) { return sc.v[u] != sc.v[v]; });
        } else if (name == "Nset-5") {
            c.pass = adjacent_edges([&](int a, int b) { return sc.e[a] != sc.e[b]; });
        } else if (name == "Nset-6") {
            c.pass = all_edges([&](int i, int u, int v) { return sc.v[u] != sc.e[i] && sc.v[v] != sc.e[i]; });
        } else if (name == "Nset-7") {
            ValueSet cover;
            for (const auto& s : sc.v) cover = set_union(cover, s);
            for (const auto& s : sc.e) cover = set_union(cover, s);
            c.pass = !opt.lambda || cover == make_set(*opt.lambda);
        } else if (name == "Nset-8") {
            c.pass = all_edges([&](int, int u, int v) { return meets(sc.v[u], sc.v[v]); });
        } else if (name == "Nset-9" || name == "Chyper-4") {
            c.pass = adjacent_edges([&](int a, int b) { return meets(sc.e[a], sc.e[b]); });
        } else if (name == "Nset-10" || name == "Chyper-3") {
            c.pass = all_edges([&](int i, int u, int v) { return meets(sc.e[i], sc.v[u]) && meets(sc.e[i], sc.v[v]); });
        } else if (name == "Chyper-1" || name == "Chyper-2") {
            const std::size_t need = name == "Chyper-1" ? 1 : static_cast<std::size_t>(std::max(2, opt.rank));
            c.pass = all_edges([&](int i, int u, int v) {
                auto both = set_intersection(sc.v[u], sc.v[v]);
                return both.size() >= need && set_intersection(both, sc.e[i]) == both;
            });
        } else if (name == "Chyper-5") {
            c.pass = adjacent_edges([&](int a, int b) { return !meets(sc.e[a], sc.e[b]); });
        } else {
            throw Error("invalid-argument", "unknown constraint '" + name + "'");
        }
        if (!c.pass && c.detail.empty()) c.detail = "violated";
        rep.pass = rep.pass && c.pass;
        rep.checks.push_back(std::move(c));
    }
    for (const auto& ms : opt.magic) {
        if (!has_v || !has_e) throw Error("invalid-argument", "witness checks need a total set-coloring");
        SetCheck c = check_witness_family(g, sc, ms, opt.strict);
        rep.pass = rep.pass && c.pass;
        rep.checks.push_back(std::move(c));
    }
    return rep;
}

SixSetColoring graph_kd_total_set_coloring(const Graph& g, std::uint64_t seed) {
    if (!g.connected()) throw Error("disconnected", "the graph must be connected");
    if (g.q() == 0) throw Error("domain-error", "the graph needs at least one edge");
    SixSetColoring out;
    if (g.is_tree()) {
        out.tree = g;
        out.tree_to_graph.resize(g.p);
        for (int v = 0; v < g.p; ++v) out.tree_to_graph[v] = v;
    } else {
        VertexMapped vm = vertex_split_to_tree(g, seed);
        out.tree = vm.graph;
        out.tree_to_graph = vm.map;
    }
    const Graph& t = out.tree;
    std::vector<std::vector<LinForm>> vvals(g.p), evals(g.q());
    for (Family fam : {Family::graceful, Family::harmonious, Family::edge_difference, Family::edge_magic,
                       Family::felicitous_difference, Family::graceful_difference}) {
        ColoredGraph cg = tree_kd_coloring(t, fam, {});
        FamilySpec spec;
        spec.family = fam;
        VerifyReport rep = verify(cg.graph, cg.coloring, spec, Params::sym());
        if (!rep.pass) throw Error("internal", "tree coloring failed verification for " + family_name(fam));
        out.families.push_back({fam, rep.constant_found});
        for (int v = 0; v < t.p; ++v) vvals[out.tree_to_graph[v]].push_back(cg.coloring.v[v]);
        for (int i = 0; i < t.q(); ++i) {
            int a = out.tree_to_graph[t.edges[i].first], b = out.tree_to_graph[t.edges[i].second];
            evals[g.edge_index(std::min(a, b), std::max(a, b))].push_back(cg.coloring.e[i]);
        }
    }
    for (auto& s : vvals) out.coloring.v.push_back(make_set(std::move(s)));
    for (auto& s : evals) out.coloring.e.push_back(make_set(std::move(s)));
    return out;
}

}  // namespace topocode
