#include "topocode/groups.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace topocode {

using i64 = std::int64_t;

std::string edge_fn_name(EdgeFn f) { return f == EdgeFn::sum ? "sum" : "abs-difference"; }

EdgeFn parse_edge_fn(const std::string& s) {
    if (s == "sum") return EdgeFn::sum;
    if (s == "abs-difference" || s == "absdiff") return EdgeFn::abs_difference;
    throw Error("invalid-argument", "edge function must be sum or abs-difference");
}

i64 apply_edge_fn(EdgeFn f, i64 x, i64 y) { return f == EdgeFn::sum ? checked_add(x, y) : std::abs(x - y); }

namespace {

i64 rep(i64 x, i64 M) { return ((x - 1) % M + M) % M + 1; }

IntMatrix shifted(const IntMatrix& base, i64 by, i64 M, EdgeFn f) {
    IntMatrix t;
    for (std::size_t c = 0; c < base.q(); ++c) {
        i64 x = rep(base.X[c] + by, M), y = rep(base.Y[c] + by, M);
        t.push({x, apply_edge_fn(f, x, y), y});
    }
    return t;
}

GroupOpResult combine(const MatrixGroup& G, i64 i, i64 j, i64 zero, bool add) {
    const i64 m = static_cast<i64>(G.members.size());
    for (i64 x : {i, j, zero})
        if (x < 1 || x > m) throw Error("domain-error", "member index out of range");
    const i64 idx = rep(add ? i + j - zero : i - j + zero, m);
    const auto& a = G.member(i);
    const auto& b = G.member(j);
    const auto& z = G.member(zero);
    IntMatrix v;
    for (std::size_t c = 0; c < a.q(); ++c) {
        i64 x = add ? a.X[c] + b.X[c] - z.X[c] : a.X[c] - b.X[c] + z.X[c];
        i64 y = add ? a.Y[c] + b.Y[c] - z.Y[c] : a.Y[c] - b.Y[c] + z.Y[c];
        x = rep(x, G.M);
        y = rep(y, G.M);
        v.push({x, apply_edge_fn(G.f, x, y), y});
    }
    if (v != G.member(idx)) throw Error("corrupt-group", "the combination does not land on member " + std::to_string(idx));
    return {idx, v};
}

}  // namespace

MatrixGroup build_every_zero_family(const IntMatrix& base, i64 M, EdgeFn f) {
    base.check();
    if (M < 1) throw Error("domain-error", "modulus must be positive");
    for (std::size_t c = 0; c < base.q(); ++c) {
        if (base.X[c] < 1 || base.X[c] > M || base.Y[c] < 1 || base.Y[c] > M)
            throw Error("domain-error", "base vertex entries must lie in [1,M]");
        if (base.E[c] != apply_edge_fn(f, base.X[c], base.Y[c]))
            throw Error("edge-function-mismatch", "base E row is not f(X,Y)");
    }
    MatrixGroup G;
    G.M = M;
    G.f = f;
    for (i64 i = 0; i < M; ++i) G.members.push_back(shifted(base, i, M, f));
    if (!check_group_laws(G)) throw Error("corrupt-group", "family is not closed");
    return G;
}

GroupOpResult group_add(const MatrixGroup& G, i64 i, i64 j, i64 zero) { return combine(G, i, j, zero, true); }
GroupOpResult group_sub(const MatrixGroup& G, i64 i, i64 j, i64 zero) { return combine(G, i, j, zero, false); }

bool check_group_laws(const MatrixGroup& G) {
    const i64 m = static_cast<i64>(G.members.size());
    try {
        for (i64 z = 1; z <= m; ++z)
            for (i64 i = 1; i <= m; ++i) {
                if (group_add(G, i, z, z).index != i) return false;
                bool inverse = false;
                for (i64 j = 1; j <= m; ++j) {
                    if (group_add(G, i, j, z).index == z) inverse = true;
                    group_sub(G, i, j, z);
                }
                if (!inverse) return false;
            }
    } catch (const Error&) {
        return false;
    }
    return true;
}

std::vector<int> homo_conditions(const std::string& kind) {
    if (kind == "plain") return {};
    if (kind == "colored") return {0, 2, 3};
    if (kind == "bipartite") return {1};
    if (kind == "graceful") return {2, 3, 4, 6};
    if (kind == "set-ordered-graceful") return {2, 3, 4, 6, 8};
    if (kind == "odd-graceful") return {2, 3, 5, 7};
    if (kind == "set-ordered-odd-graceful") return {2, 3, 5, 7, 8};
    throw Error("invalid-argument", "unknown homomorphism kind '" + kind + "'");
}

namespace {

std::vector<int> sides_for(const Graph& g, const TotalColoring* f) {
    if (g.has_bipartition()) return g.side;
    if (f && !f->integral()) {
        std::vector<int> s(g.p);
        for (int v = 0; v < g.p; ++v) s[v] = f->v[v].k == 0 ? 0 : 1;
        return s;
    }
    auto s = two_coloring(g);
    return s ? *s : std::vector<int>{};
}

}  // namespace

HomoReport homomorphism_check(const Graph& T, const Graph& G, const std::vector<int>& phi,
                              const std::optional<std::pair<TotalColoring, TotalColoring>>& colored,
                              const std::vector<int>& conditions) {
    if (static_cast<int>(phi.size()) != T.p) throw Error("partial-map", "the map must cover every vertex");
    for (int x : phi)
        if (x < 0 || x >= G.p) throw Error("partial-map", "map target out of range");
    HomoReport r;
    auto fail = [&](const std::string& why) { r.failures.push_back(why); };
    for (auto [u, v] : T.edges)
        if (!G.has_edge(phi[u], phi[v]))
            fail("edge " + std::to_string(u) + "-" + std::to_string(v) + " is not mapped onto an edge");

    const TotalColoring* f = colored ? &colored->first : nullptr;
    const TotalColoring* g = colored ? &colored->second : nullptr;
    auto need_colors = [&](int c) {
        if (!colored) {
            fail("C-" + std::to_string(c) + " needs colorings");
            return false;
        }
        return true;
    };
    auto gcolor = [&](int u, int v) { return g->e[G.edge_index(std::min(u, v), std::max(u, v))]; };
    auto plain_range = [&](const TotalColoring& c, i64 hi, const std::string& tag) {
        for (const auto& x : c.v)
            if (x.k != 0 || x.d < 1 || x.d > hi) {
                fail(tag);
                return;
            }
    };
    auto edge_set_is = [&](const TotalColoring& c, const std::vector<i64>& want) {
        std::vector<i64> got;
        for (const auto& x : c.e) {
            if (x.k != 0) return false;
            got.push_back(x.d);
        }
        std::sort(got.begin(), got.end());
        got.erase(std::unique(got.begin(), got.end()), got.end());
        return got == want;
    };

    for (int c : conditions) {
        switch (c) {
            case 0:
                if (!need_colors(0)) break;
                for (int v = 0; v < T.p; ++v)
                    if (f->v[v] != g->v[phi[v]]) {
                        fail("vertex " + std::to_string(v) + " changes color");
                        break;
                    }
                break;
            case 1: {
                auto st = sides_for(T, f), sg = sides_for(G, g);
                if (st.empty() || sg.empty()) {
                    fail("C-1: not bipartite");
                    break;
                }
                bool same = true, flipped = true;
                for (int v = 0; v < T.p; ++v) {
                    same = same && st[v] == sg[phi[v]];
                    flipped = flipped && st[v] != sg[phi[v]];
                }
                if (!(same || (flipped && !G.has_bipartition()))) fail("C-1: sides are not preserved");
                break;
            }
            case 2:
                if (!need_colors(2)) break;
                for (int i = 0; i < T.q(); ++i) {
                    auto [u, v] = T.edges[i];
                    if (f->e[i] != sym_abs(f->v[u] - f->v[v])) {
                        fail("C-2: edge color of G is not the vertex difference");
                        break;
                    }
                }
                for (int i = 0; i < G.q(); ++i) {
                    auto [u, v] = G.edges[i];
                    if (g->e[i] != sym_abs(g->v[u] - g->v[v])) {
                        fail("C-2: edge color of H is not the vertex difference");
                        break;
                    }
                }
                break;
            case 3:
                if (!need_colors(3)) break;
                for (int i = 0; i < T.q(); ++i) {
                    auto [u, v] = T.edges[i];
                    if (!G.has_edge(phi[u], phi[v]) || f->e[i] != gcolor(phi[u], phi[v])) {
                        fail("C-3: edge colors are not preserved");
                        break;
                    }
                }
                break;
            case 4:
            case 5:
                if (!need_colors(c)) break;
                plain_range(*f, c == 4 ? T.q() + 1 : 2 * T.q() + 2, "C-" + std::to_string(c) + ": vertex colors of G");
                plain_range(*g, c == 4 ? G.q() + 1 : 2 * G.q() + 2, "C-" + std::to_string(c) + ": vertex colors of H");
                break;
            case 6:
            case 7: {
                if (!need_colors(c)) break;
                auto want = [&](int q) {
                    std::vector<i64> w;
                    for (int i = 1; i <= q; ++i) w.push_back(c == 6 ? i : 2 * i - 1);
                    return w;
                };
                if (!edge_set_is(*f, want(T.q())) || !edge_set_is(*g, want(G.q())) || want(T.q()) != want(G.q()))
                    fail("C-" + std::to_string(c) + ": edge color sets differ from the required range");
                break;
            }
            case 8: {
                if (!need_colors(8)) break;
                auto ordered = [&](const Graph& h, const TotalColoring& col) {
                    auto s = sides_for(h, &col);
                    if (s.empty()) return false;
                    std::optional<LinForm> maxX, minY;
                    for (int v = 0; v < h.p; ++v) {
                        if (s[v] == 0) maxX = maxX ? std::max(*maxX, col.v[v]) : col.v[v];
                        else minY = minY ? std::min(*minY, col.v[v]) : col.v[v];
                    }
                    return !maxX || !minY || *maxX < *minY;
                };
                if (!ordered(T, *f) || !ordered(G, *g)) fail("C-8: not set-ordered");
                break;
            }
            default:
                throw Error("invalid-argument", "unknown condition " + std::to_string(c));
        }
    }
    r.pass = r.failures.empty();
    return r;
}

Coincided coincide_same_colors(const Graph& T, const TotalColoring& f, const std::optional<std::vector<int>>& classes) {
    if (static_cast<int>(f.v.size()) != T.p || static_cast<int>(f.e.size()) != T.q())
        throw Error("invalid-argument", "coloring size mismatch");
    std::vector<int> cls(T.p);
    if (classes) {
        if (static_cast<int>(classes->size()) != T.p) throw Error("invalid-argument", "class vector size mismatch");
        cls = *classes;
        std::map<int, LinForm> color_of;
        for (int v = 0; v < T.p; ++v) {
            auto [it, fresh] = color_of.emplace(cls[v], f.v[v]);
            if (!fresh && it->second != f.v[v]) throw Error("color-mismatch", "a class mixes colors");
        }
    } else {
        std::map<LinForm, int> first;
        for (int v = 0; v < T.p; ++v) cls[v] = first.emplace(f.v[v], v).first->second;
    }
    for (auto [u, v] : T.edges)
        if (cls[u] == cls[v]) throw Error("loop-risk", "adjacent vertices share a color");
    VertexMapped vm = coincide_classes(T, cls);
    Coincided out;
    out.graph = vm.graph;
    out.phi = vm.map;
    out.coloring.v.assign(vm.graph.p, LinForm{});
    for (int v = 0; v < T.p; ++v) out.coloring.v[vm.map[v]] = f.v[v];
    std::vector<std::optional<LinForm>> ec(vm.graph.q());
    for (int i = 0; i < T.q(); ++i) {
        auto [u, v] = T.edges[i];
        int a = vm.map[u], b = vm.map[v];
        int idx = vm.graph.edge_index(std::min(a, b), std::max(a, b));
        if (ec[idx] && *ec[idx] != f.e[i]) throw Error("edge-color-conflict", "merged parallel edges differ in color");
        ec[idx] = f.e[i];
    }
    for (auto& c : ec) out.coloring.e.push_back(*c);
    return out;
}

std::optional<int> pm_e_distance(const Graph& t1, const TotalColoring& f1, const Graph& t2, const TotalColoring& f2,
                                 int bound) {
    if (!t1.is_tree() || !t2.is_tree() || t1.p != t2.p || t1.q() > 6)
        throw Error("incompatible", "need two trees of equal size with q <= 6");
    if (static_cast<int>(f1.v.size()) != t1.p || static_cast<int>(f2.v.size()) != t2.p)
        throw Error("incompatible", "vertex colorings must cover every vertex");
    auto c1 = f1.v, c2 = f2.v;
    std::sort(c1.begin(), c1.end());
    std::sort(c2.begin(), c2.end());
    if (c1 != c2) throw Error("incompatible", "vertex color multisets differ");

    const int p = t1.p;
    auto key = [&](const std::vector<Edge>& es) {
        Graph g = Graph::make(p, es);
        return canonical_form_colored(g, f1.v, std::vector<LinForm>(es.size()));
    };
    const CanonKey target = canonical_form_colored(Graph::make(p, t2.edges), f2.v, std::vector<LinForm>(t2.q()));
    std::set<std::vector<Edge>> seen{t1.edges};
    std::deque<std::pair<std::vector<Edge>, int>> frontier{{t1.edges, 0}};
    while (!frontier.empty()) {
        auto [es, dist] = frontier.front();
        frontier.pop_front();
        if (key(es) == target) return dist;
        if (dist >= bound) continue;
        for (std::size_t r = 0; r < es.size(); ++r) {
            std::vector<int> comp(p);
            for (int v = 0; v < p; ++v) comp[v] = v;
            std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
            for (std::size_t i = 0; i < es.size(); ++i)
                if (i != r) comp[find(es[i].first)] = find(es[i].second);
            for (int u = 0; u < p; ++u)
                for (int v = u + 1; v < p; ++v) {
                    if (find(u) == find(v) || Edge{u, v} == es[r]) continue;
                    std::vector<Edge> next = es;
                    next[r] = {u, v};
                    std::sort(next.begin(), next.end());
                    if (seen.insert(next).second) frontier.emplace_back(next, dist + 1);
                }
        }
    }
    return std::nullopt;
}

}  // namespace topocode
