#include "topocode/constructors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace topocode {

using i64 = std::int64_t;

ChoiceVector parse_choices(const std::string& bits) {
    ChoiceVector c;
    for (char ch : bits) {
        if (ch != '0' && ch != '1') throw Error("invalid-choices", "choice bits must be 0 or 1");
        c.push_back(ch - '0');
    }
    return c;
}

std::string format_choices(const ChoiceVector& c) {
    std::string s;
    for (int b : c) s.push_back(b ? '1' : '0');
    return s;
}

int choice_length(const Graph& tree) { return static_cast<int>(peel_leaves(tree).removed.size()); }

ColoredGraph color_complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw Error("domain-error", "K_{m,n} needs m, n >= 1");
    Graph g = complete_bipartite(m, n);
    TotalColoring f;
    f.v.resize(g.p);
    for (int j = 0; j < m; ++j) f.v[j] = LinForm(0, j);
    for (int i = 1; i <= n; ++i) f.v[m + i - 1] = LinForm(1, static_cast<i64>(m) * i - 1);
    for (const auto& [u, v] : g.edges) f.e.push_back(f.v[v] - f.v[u]);
    return {g, f};
}

namespace {

// Index-form coloring: X vertices a*d, Y vertices k+b*d, edges k+c*d.
struct IndexState {
    std::vector<int> side;
    std::vector<i64> val;
    std::vector<bool> present;
    std::map<Edge, i64> eidx;
};

Edge key(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

ColoredGraph finish(const Graph& t, const IndexState& st) {
    Graph g = Graph::make(t.p, t.edges, st.side);
    TotalColoring f;
    for (int v = 0; v < g.p; ++v) f.v.push_back(st.side[v] == 0 ? LinForm(0, st.val[v]) : LinForm(1, st.val[v]));
    for (const auto& e : g.edges) f.e.push_back(LinForm(1, st.eidx.at(e)));
    return {g, f};
}

// Builds graceful, edge-difference or graceful-difference tree colorings by
// re-adding the peeled leaf levels on top of a colored star.
ColoredGraph tree_index_build(const Graph& t, Family kind, const ChoiceVector& choices) {
    PeelTrace tr = peel_leaves(t);
    const int levels = static_cast<int>(tr.removed.size());
    if (!choices.empty() && static_cast<int>(choices.size()) != levels)
        throw Error("invalid-choices", "expected " + std::to_string(levels) + " choice bits");
    auto adj = t.adjacency();
    IndexState st;
    st.side.assign(t.p, -1);
    st.val.assign(t.p, 0);
    st.present.assign(t.p, false);

    std::vector<int> star = tr.star_leaves;
    std::sort(star.begin(), star.end());
    const i64 n = static_cast<i64>(star.size());
    st.side[tr.center] = 0;
    st.present[tr.center] = true;
    for (i64 j = 1; j <= n; ++j) {
        int v = star[j - 1];
        st.side[v] = 1;
        st.present[v] = true;
        i64 b = j - 1, c = j - 1;
        if (kind == Family::edge_difference) c = n - j;
        if (kind == Family::graceful_difference) b = j;
        st.val[v] = b;
        st.eidx[key(tr.center, v)] = c;
    }
    i64 q = n;

    for (int lvl = levels - 1; lvl >= 0; --lvl) {
        const auto& leaves = tr.removed[lvl];
        const i64 L = static_cast<i64>(leaves.size());
        std::map<int, std::vector<int>> by_parent;
        for (int v : leaves) {
            int par = -1;
            for (int w : adj[v])
                if (st.present[w]) par = w;
            by_parent[par].push_back(v);
        }
        std::vector<int> xs, ys;
        for (auto& [par, ls] : by_parent) {
            std::sort(ls.begin(), ls.end());
            (st.side[par] == 0 ? xs : ys).push_back(par);
        }
        auto by_val = [&](int a, int b) { return std::pair(st.val[a], a) < std::pair(st.val[b], b); };
        std::sort(xs.begin(), xs.end(), by_val);
        std::sort(ys.begin(), ys.end(), by_val);
        if (kind != Family::edge_difference) std::reverse(ys.begin(), ys.end());
        std::vector<int> order;
        for (int par : xs)
            for (int v : by_parent[par]) order.push_back(v);
        for (int par : ys)
            for (int v : by_parent[par]) order.push_back(v);
        if (!choices.empty() && choices[lvl] == 1) std::reverse(order.begin(), order.end());

        for (int v = 0; v < t.p; ++v)
            if (st.present[v] && st.side[v] == 1) st.val[v] += L;
        if (kind != Family::edge_difference)
            for (auto& [e, c] : st.eidx) c += L;
        const i64 qn = q + L;
        for (i64 pos = 0; pos < L; ++pos) {
            int v = order[pos];
            int par = -1;
            for (int w : adj[v])
                if (st.present[w]) par = w;
            const i64 c = kind == Family::edge_difference ? q + pos : pos;
            const i64 pv = st.val[par];
            i64 val = 0;
            if (st.side[par] == 0) {
                if (kind == Family::graceful) val = pv + c;
                else if (kind == Family::graceful_difference) val = pv + c + 1;
                else val = (qn - 1) + pv - c;
            } else {
                if (kind == Family::graceful) val = pv - c;
                else if (kind == Family::graceful_difference) val = pv - c - 1;
                else val = c + pv - (qn - 1);
            }
            st.side[v] = 1 - st.side[par];
            st.val[v] = val;
            st.eidx[key(v, par)] = c;
        }
        for (int v : leaves) st.present[v] = true;
        q = qn;
    }
    return finish(t, st);
}

std::vector<int> oriented_sides(const Graph& g, const TotalColoring& f) {
    if (g.has_bipartition()) return g.side;
    if (!f.integral()) {
        std::vector<int> s(g.p);
        for (int v = 0; v < g.p; ++v) s[v] = f.v[v].k == 0 ? 0 : 1;
        return s;
    }
    auto s = two_coloring(g);
    if (!s) throw Error("needs-bipartition", "graph is not bipartite");
    int lo = 0;
    for (int v = 0; v < g.p; ++v)
        if (f.v[v].d < f.v[lo].d) lo = v;
    if (g.p > 0 && (*s)[lo] == 1)
        for (auto& x : *s) x = 1 - x;
    return *s;
}

}  // namespace

ColoredGraph tree_kd_coloring(const Graph& t, Family family, const ChoiceVector& choices) {
    if (!t.is_tree() || t.p < 2) throw Error("not-a-tree", "tree colorings need a tree with at least one edge");
    switch (family) {
        case Family::graceful:
        case Family::edge_difference:
        case Family::graceful_difference:
            return tree_index_build(t, family, choices);
        case Family::harmonious:
        case Family::felicitous_difference:
        case Family::edge_magic: {
            ColoredGraph base = tree_index_build(t, Family::graceful, choices);
            Derived d = derive_equivalent(base.graph, base.coloring, family);
            return {base.graph, d.coloring};
        }
        default:
            throw Error("unsupported-family", "no tree construction for " + family_name(family));
    }
}

TotalColoring kd_from_labeling(const Graph& g, const TotalColoring& f) {
    auto side = oriented_sides(g, f);
    TotalColoring out;
    for (int v = 0; v < g.p; ++v)
        out.v.push_back(side[v] == 0 ? LinForm(0, f.v[v].d) : LinForm(1, f.v[v].d - 1));
    for (const auto& c : f.e) out.e.push_back(LinForm(1, c.d - 1));
    return out;
}

void require_set_ordered_graceful(const Graph& g, const TotalColoring& f) {
    auto fail = [](const std::string& why) { throw Error("not-set-ordered", why); };
    if (static_cast<int>(f.v.size()) != g.p || static_cast<int>(f.e.size()) != g.q()) fail("size mismatch");
    if (!f.integral()) fail("labels must be plain integers");
    const i64 q = g.q();
    std::vector<bool> seen_v(q + 1, false), seen_e(q + 1, false);
    for (const auto& c : f.v) {
        if (c.d < 0 || c.d > q || seen_v[c.d]) fail("vertex labels must be distinct values in [0,q]");
        seen_v[c.d] = true;
    }
    for (int i = 0; i < g.q(); ++i) {
        auto [u, v] = g.edges[i];
        i64 c = f.e[i].d;
        if (c < 1 || c > q || seen_e[c]) fail("edge labels must be exactly 1..q");
        if (c != std::abs(f.v[u].d - f.v[v].d)) fail("edge label is not the vertex difference");
        seen_e[c] = true;
    }
    auto side = oriented_sides(g, f);
    i64 maxX = -1, minY = q + 1;
    for (int v = 0; v < g.p; ++v) {
        if (side[v] == 0) maxX = std::max(maxX, f.v[v].d);
        else minY = std::min(minY, f.v[v].d);
    }
    if (maxX >= minY) fail("max f(X) must be below min f(Y)");
}

RlaVariant rla_variant_for(Family f) {
    switch (f) {
        case Family::graceful_difference: return RlaVariant::A;
        case Family::edge_difference: return RlaVariant::B;
        case Family::felicitous_difference: return RlaVariant::C;
        case Family::edge_magic: return RlaVariant::D;
        default: throw Error("unsupported-family", "leaf adding supports graceful-difference, edge-difference, "
                                                   "felicitous-difference and edge-magic");
    }
}

RlaResult rla(const Graph& g0, const TotalColoring& f, const LeafPlan& plan, Family family) {
    const RlaVariant var = rla_variant_for(family);
    require_set_ordered_graceful(g0, f);
    if (static_cast<int>(plan.counts.size()) != g0.p) throw Error("domain-error", "leaf plan size mismatch");
    Graph g = Graph::make(g0.p, g0.edges, oriented_sides(g0, f));
    const i64 q = g.q();
    i64 maxX = -1, minY = q + 1, A = 0, B = 0;
    for (int v = 0; v < g.p; ++v) {
        if (plan.counts[v] < 0) throw Error("domain-error", "negative leaf count");
        if (g.side[v] == 0) {
            maxX = std::max(maxX, f.v[v].d);
            A += plan.counts[v];
        } else {
            minY = std::min(minY, f.v[v].d);
            B += plan.counts[v];
        }
    }
    const i64 m = A + B;

    Graph h = add_leaves(g, plan);
    auto parents = leaf_parents(g, plan);
    std::vector<i64> val(h.p, 0), eval(h.q(), 0);
    for (int v = 0; v < g.p; ++v) {
        const i64 x = f.v[v].d;
        if (g.side[v] == 0) val[v] = maxX - x;
        else if (var == RlaVariant::A || var == RlaVariant::B) val[v] = q + minY - x - 1 + m;
        else val[v] = x - 1 + m;
    }
    for (int i = 0; i < g.q(); ++i) {
        const i64 x = f.e[i].d;
        i64 c = (var == RlaVariant::B || var == RlaVariant::C) ? x - 1 : q - x;
        if (var == RlaVariant::A || var == RlaVariant::D) c += m;
        eval[h.edge_index(g.edges[i].first, g.edges[i].second)] = c;
    }

    std::vector<std::vector<int>> kids(g.p);
    for (int i = 0; i < static_cast<int>(parents.size()); ++i) kids[parents[i]].push_back(g.p + i);
    auto ordered = [&](int s, bool desc) {
        std::vector<int> vs;
        for (int v = 0; v < g.p; ++v)
            if (g.side[v] == s) vs.push_back(v);
        std::sort(vs.begin(), vs.end(),
                  [&](int a, int b) { return std::pair(f.v[a].d, a) < std::pair(f.v[b].d, b); });
        if (desc) std::reverse(vs.begin(), vs.end());
        return vs;
    };
    std::vector<int> seq;
    i64 first = 0;
    auto append = [&](const std::vector<int>& ps) {
        for (int par : ps)
            for (int leaf : kids[par]) seq.push_back(leaf);
    };
    switch (var) {
        case RlaVariant::A: append(ordered(1, false)); append(ordered(0, true)); first = 0; break;
        case RlaVariant::B:
        case RlaVariant::C: append(ordered(0, false)); append(ordered(1, true)); first = q; break;
        case RlaVariant::D: append(ordered(1, true)); append(ordered(0, true)); first = 0; break;
    }

    const i64 Mgd = minY - maxX - 1;
    const i64 Sed = q + minY - maxX + m - 2;
    const i64 Cfd = maxX + m;
    const i64 Tem = maxX + q - 1 + 2 * m;
    for (i64 pos = 0; pos < static_cast<i64>(seq.size()); ++pos) {
        const int leaf = seq[pos];
        const int par = parents[leaf - g.p];
        const i64 c = first + pos;
        const i64 pv = val[par];
        const bool par_x = g.side[par] == 0;
        i64 lv = 0;
        switch (var) {
            case RlaVariant::A: lv = par_x ? pv + c + Mgd : pv - c - Mgd; break;
            case RlaVariant::B: lv = par_x ? Sed - c + pv : pv - Sed + c; break;
            case RlaVariant::C: lv = par_x ? Cfd + c - pv : Cfd + c - pv; break;
            case RlaVariant::D: lv = Tem - c - pv; break;
        }
        val[leaf] = lv;
        eval[h.edge_index(par, leaf)] = c;
    }

    RlaResult r;
    r.graph = h;
    r.family = family;
    for (int v = 0; v < h.p; ++v) r.coloring.v.push_back(h.side[v] == 0 ? LinForm(0, val[v]) : LinForm(1, val[v]));
    for (i64 c : eval) r.coloring.e.push_back(LinForm(1, c));
    switch (var) {
        case RlaVariant::A: r.constant = LinForm(0, Mgd); break;
        case RlaVariant::B: r.constant = LinForm(2, Sed); break;
        case RlaVariant::C: r.constant = LinForm(0, Cfd); break;
        case RlaVariant::D: r.constant = LinForm(2, Tem); break;
    }
    return r;
}

ColoredGraph flawed_forest_labeling(const std::vector<ColoredGraph>& comps) {
    if (comps.empty()) throw Error("domain-error", "no components");
    const std::size_t m = comps.size();
    std::vector<std::vector<int>> sides;
    std::vector<i64> s(m), t(m);
    for (std::size_t i = 0; i < m; ++i) {
        require_set_ordered_graceful(comps[i].graph, comps[i].coloring);
        sides.push_back(oriented_sides(comps[i].graph, comps[i].coloring));
        i64 maxX = -1;
        for (int v = 0; v < comps[i].graph.p; ++v)
            if (sides[i][v] == 0) maxX = std::max(maxX, comps[i].coloring.v[v].d);
        s[i] = maxX + 1;
        t[i] = comps[i].graph.q() + 1 - s[i];
    }
    const i64 M = std::accumulate(s.begin(), s.end(), i64{0});
    std::vector<Edge> edges;
    std::vector<int> side;
    std::vector<i64> label;
    i64 s_before = 0;
    int offset = 0;
    for (std::size_t i = 0; i < m; ++i) {
        i64 t_after = 0;
        for (std::size_t j = i + 1; j < m; ++j) t_after += t[j];
        const auto& cg = comps[i];
        for (int v = 0; v < cg.graph.p; ++v) {
            const i64 x = cg.coloring.v[v].d;
            side.push_back(sides[i][v]);
            label.push_back(sides[i][v] == 0 ? x + s_before : x + M - s[i] + t_after);
        }
        for (const auto& [u, v] : cg.graph.edges) edges.emplace_back(u + offset, v + offset);
        offset += cg.graph.p;
        s_before += s[i];
    }
    Graph g = Graph::make(offset, edges, side);
    TotalColoring f;
    for (i64 x : label) f.v.push_back(LinForm::plain(x));
    for (const auto& [u, v] : g.edges) f.e.push_back(LinForm::plain(std::abs(label[u] - label[v])));
    return {g, f};
}

ColoredGraph build_graph_book(const std::vector<ColoredGraph>& pages, int spine_size) {
    if (pages.empty()) throw Error("domain-error", "a book needs at least one page");
    std::vector<LinForm> spine_colors;
    std::vector<Edge> edges;
    std::map<Edge, LinForm> ecol;
    std::vector<LinForm> vcol;
    std::vector<int> side;
    i64 shift = 0;
    for (std::size_t j = 0; j < pages.size(); ++j) {
        const auto& pg = pages[j];
        auto sd = oriented_sides(pg.graph, pg.coloring);
        std::vector<int> xs, ys;
        for (int v = 0; v < pg.graph.p; ++v) (sd[v] == 0 ? xs : ys).push_back(v);
        std::sort(xs.begin(), xs.end(), [&](int a, int b) {
            return std::pair(pg.coloring.v[a], a) < std::pair(pg.coloring.v[b], b);
        });
        std::vector<LinForm> cols;
        for (int v : xs) cols.push_back(pg.coloring.v[v]);
        if (j == 0) {
            if (spine_size > 0 && static_cast<int>(xs.size()) != spine_size)
                throw Error("spine-mismatch", "page X side does not match the spine size");
            spine_colors = cols;
            for (const auto& c : cols) {
                vcol.push_back(c);
                side.push_back(0);
            }
        } else if (cols != spine_colors) {
            throw Error("spine-mismatch", "page " + std::to_string(j) + " has a different spine");
        }
        std::vector<int> id(pg.graph.p);
        for (std::size_t i = 0; i < xs.size(); ++i) id[xs[i]] = static_cast<int>(i);
        for (int v : ys) {
            id[v] = static_cast<int>(vcol.size());
            vcol.push_back(pg.coloring.v[v] + LinForm(0, shift));
            side.push_back(1);
        }
        for (int i = 0; i < pg.graph.q(); ++i) {
            Edge e = key(id[pg.graph.edges[i].first], id[pg.graph.edges[i].second]);
            edges.push_back(e);
            ecol[e] = pg.coloring.e[i] + LinForm(0, shift);
        }
        shift += pg.graph.q();
    }
    Graph g = Graph::make(static_cast<int>(vcol.size()), edges, side);
    TotalColoring f;
    f.v = vcol;
    for (const auto& e : g.edges) f.e.push_back(ecol.at(e));
    return {g, f};
}

std::string status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::nonexistent: return "nonexistent";
        default: return "unknown";
    }
}

SetOrderedSearch find_set_ordered_graceful(const Graph& g, i64 budget, std::uint64_t seed) {
    SetOrderedSearch res;
    auto base = g.has_bipartition() ? std::optional(g.side) : two_coloring(g);
    if (!base) {
        res.status = SearchStatus::nonexistent;
        return res;
    }
    const int p = g.p;
    const i64 q = g.q();
    if (p > q + 1) {
        res.status = SearchStatus::nonexistent;
        return res;
    }
    auto adj = g.adjacency();
    std::vector<int> order;
    {
        std::vector<bool> seen(p, false);
        auto deg = g.degrees();
        std::vector<int> roots(p);
        std::iota(roots.begin(), roots.end(), 0);
        std::stable_sort(roots.begin(), roots.end(), [&](int a, int b) { return deg[a] > deg[b]; });
        for (int r : roots) {
            if (seen[r]) continue;
            seen[r] = true;
            std::size_t head = order.size();
            order.push_back(r);
            while (head < order.size()) {
                int u = order[head++];
                for (int w : adj[u])
                    if (!seen[w]) {
                        seen[w] = true;
                        order.push_back(w);
                    }
            }
        }
    }
    Rng rng(seed);
    bool exhausted_budget = false;
    std::vector<i64> lab(p, -1);
    std::vector<bool> used_l(q + 1), used_d(q + 1);

    for (int flip = 0; flip < 2; ++flip) {
        std::vector<int> side = *base;
        if (flip)
            for (auto& x : side) x = 1 - x;
        int nx = 0;
        for (int x : side) nx += x == 0;
        const int ny = p - nx;
        std::vector<i64> thresholds;
        if (g.is_tree()) thresholds.push_back(nx);
        else
            for (i64 s = std::max(nx, 1); s <= q + 1 - ny; ++s) thresholds.push_back(s);
        for (i64 thr : thresholds) {
            std::fill(lab.begin(), lab.end(), -1);
            std::fill(used_l.begin(), used_l.end(), false);
            std::fill(used_d.begin(), used_d.end(), false);
            std::function<bool(int)> dfs = [&](int idx) -> bool {
                if (idx == p) return true;
                if (++res.nodes > budget) {
                    exhausted_budget = true;
                    return false;
                }
                const int v = order[idx];
                const i64 lo = side[v] == 0 ? 0 : thr, hi = side[v] == 0 ? thr - 1 : q;
                std::vector<i64> cand;
                for (i64 L = lo; L <= hi; ++L)
                    if (!used_l[L]) cand.push_back(L);
                int anchor = -1;
                for (int w : adj[v])
                    if (lab[w] >= 0) anchor = w;
                if (anchor >= 0)
                    std::stable_sort(cand.begin(), cand.end(), [&](i64 a, i64 b) {
                        return std::abs(a - lab[anchor]) > std::abs(b - lab[anchor]);
                    });
                if (seed != 0) rng.shuffle(cand);
                for (i64 L : cand) {
                    std::vector<i64> ds;
                    bool ok = true;
                    for (int w : adj[v]) {
                        if (lab[w] < 0) continue;
                        i64 dd = std::abs(L - lab[w]);
                        if (dd == 0 || used_d[dd] || std::find(ds.begin(), ds.end(), dd) != ds.end()) {
                            ok = false;
                            break;
                        }
                        ds.push_back(dd);
                    }
                    if (!ok) continue;
                    lab[v] = L;
                    used_l[L] = true;
                    for (i64 dd : ds) used_d[dd] = true;
                    if (dfs(idx + 1)) return true;
                    lab[v] = -1;
                    used_l[L] = false;
                    for (i64 dd : ds) used_d[dd] = false;
                    if (exhausted_budget) return false;
                }
                return false;
            };
            if (dfs(0)) {
                res.status = SearchStatus::found;
                res.graph = Graph::make(p, g.edges, side);
                std::vector<i64> ev;
                for (const auto& [u, w] : res.graph.edges) ev.push_back(std::abs(lab[u] - lab[w]));
                res.labeling = TotalColoring::plain(lab, ev);
                return res;
            }
            if (exhausted_budget) {
                res.status = SearchStatus::unknown;
                return res;
            }
        }
        if (g.has_bipartition()) break;
    }
    res.status = g.connected() || g.has_bipartition() ? SearchStatus::nonexistent : SearchStatus::unknown;
    return res;
}

}  // namespace topocode
