#include "topocode/coloring.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace topocode {

namespace {

const std::vector<std::pair<Family, std::string>>& family_table() {
    static const std::vector<std::pair<Family, std::string>> t{
        {Family::graceful, "graceful"},
        {Family::odd_graceful, "odd-graceful"},
        {Family::edge_antimagic, "edge-antimagic"},
        {Family::harmonious, "harmonious"},
        {Family::odd_elegant, "odd-elegant"},
        {Family::edge_magic, "edge-magic"},
        {Family::edge_difference, "edge-difference"},
        {Family::graceful_difference, "graceful-difference"},
        {Family::felicitous_difference, "felicitous-difference"},
        {Family::odd_edge_magic, "odd-edge-edge-magic"},
        {Family::odd_edge_difference, "odd-edge-edge-difference"},
        {Family::odd_edge_felicitous_difference, "odd-edge-felicitous-difference"},
        {Family::odd_edge_graceful_difference, "odd-edge-graceful-difference"},
        {Family::vd_ek, "vd-ek"},
        {Family::vk_ed, "vk-ed"},
        {Family::model_graceful, "model-graceful"},
        {Family::six_c, "6C"},
    };
    return t;
}

struct Ctx {
    bool symbolic = true;
    LinForm K{1, 0};
    LinForm D{0, 1};
    std::int64_t kv = 0, dv = 1;

    static Ctx sym() { return {}; }
    static Ctx at(std::int64_t k0, std::int64_t d0) { return {false, LinForm{0, k0}, LinForm{0, d0}, k0, d0}; }

    bool inX(const LinForm& c) const {
        if (c.k != 0 || c.d < 0) return false;
        return symbolic || c.d % dv == 0;
    }
    bool inK(const LinForm& c) const {
        if (symbolic) return c.k == 1 && c.d >= 0;
        return c.k == 0 && c.d >= kv && (c.d - kv) % dv == 0;
    }
};

bool is_magic(Family f) {
    switch (f) {
        case Family::edge_magic:
        case Family::edge_difference:
        case Family::graceful_difference:
        case Family::felicitous_difference:
        case Family::odd_edge_magic:
        case Family::odd_edge_difference:
        case Family::odd_edge_felicitous_difference:
        case Family::odd_edge_graceful_difference:
            return true;
        default:
            return false;
    }
}

bool is_odd_edge(Family f) {
    return f == Family::odd_edge_magic || f == Family::odd_edge_difference ||
           f == Family::odd_edge_felicitous_difference || f == Family::odd_edge_graceful_difference;
}

LinForm magic_value(Family f, const LinForm& u, const LinForm& v, const LinForm& e) {
    switch (f) {
        case Family::edge_magic:
        case Family::odd_edge_magic:
            return u + e + v;
        case Family::edge_difference:
        case Family::odd_edge_difference:
            return e + sym_abs(u - v);
        case Family::graceful_difference:
        case Family::odd_edge_graceful_difference:
            return sym_abs(sym_abs(u - v) - e);
        case Family::felicitous_difference:
        case Family::odd_edge_felicitous_difference:
            return sym_abs(u + v - e);
        default:
            throw Error("unknown-family", "not a magic family");
    }
}

std::int64_t pmod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

std::vector<int> infer_sides(const Graph& g, const TotalColoring& f) {
    if (g.has_bipartition()) return g.side;
    std::vector<int> side(g.p);
    for (int v = 0; v < g.p; ++v) side[v] = f.v[v].k == 0 ? 0 : 1;
    return side;
}

void add(VerifyReport& r, int edge, std::string reason) { r.violations.push_back({edge, -1, std::move(reason)}); }
void addv(VerifyReport& r, int vertex, std::string reason) { r.violations.push_back({-1, vertex, std::move(reason)}); }

void compare_edge_set(VerifyReport& r, std::vector<LinForm> expected) {
    std::sort(expected.begin(), expected.end());
    if (r.edge_set_found != expected) add(r, -1, "edge color set differs from the required set");
}

// Maximum bipartite matching (Kuhn); true when every left vertex is matched.
bool perfect_left_matching(int nl, int nr, const std::function<bool(int, int)>& adj) {
    std::vector<int> match_r(nr, -1);
    for (int l = 0; l < nl; ++l) {
        std::vector<char> seen(nr, 0);
        std::function<bool(int)> try_l = [&](int x) {
            for (int y = 0; y < nr; ++y) {
                if (seen[y] || !adj(x, y)) continue;
                seen[y] = 1;
                if (match_r[y] < 0 || try_l(match_r[y])) {
                    match_r[y] = x;
                    return true;
                }
            }
            return false;
        };
        if (!try_l(l)) return false;
    }
    return true;
}

void check_six_c(const Graph& g, const TotalColoring& h, const Ctx& ctx, const std::vector<int>& sides,
                 VerifyReport& rep) {
    const int p = g.p, q = g.q(), n = p + q;
    std::vector<std::int64_t> fv(p), fe(q);
    bool ok = true;
    auto recover = [&](const LinForm& c, bool xside, std::int64_t& out) {
        LinForm base = xside ? c : c - ctx.K;
        if (base.k != 0 || base.d % ctx.D.d != 0) return false;
        out = base.d / ctx.D.d;
        return true;
    };
    for (int v = 0; v < p; ++v)
        if (!recover(h.v[v], sides[v] == 0, fv[v])) addv(rep, v, "color is not in the 6C parameter form"), ok = false;
    for (int i = 0; i < q; ++i)
        if (!recover(h.e[i], false, fe[i])) add(rep, i, "color is not in the 6C parameter form"), ok = false;
    if (!ok) return;
    std::vector<std::int64_t> all(fv);
    all.insert(all.end(), fe.begin(), fe.end());
    std::sort(all.begin(), all.end());
    for (int i = 0; i < n; ++i)
        if (all[i] != i + 1) {
            add(rep, -1, "(6C) labels are not a bijection onto [1,p+q]");
            return;
        }
    auto ends = [&](int i) { return std::pair{fv[g.edges[i].first], fv[g.edges[i].second]}; };
    auto absdiff = [&](int i) {
        auto [a, b] = ends(i);
        return a > b ? a - b : b - a;
    };
    // (i) e-magic
    std::int64_t c0 = fe[0] + absdiff(0);
    for (int i = 1; i < q; ++i)
        if (fe[i] + absdiff(i) != c0) add(rep, i, "(6C-i) e-magic sum differs");
    rep.constant_found = LinForm::plain(c0);
    // (ii) ee-difference
    if (!perfect_left_matching(q, q, [&](int a, int b) {
            return fe[a] == absdiff(b) || fe[a] == 2LL * n - absdiff(b);
        }))
        add(rep, -1, "(6C-ii) no ee-difference matching");
    // (iii) ee-balanced
    std::vector<std::int64_t> s(q);
    for (int i = 0; i < q; ++i) s[i] = absdiff(i) - fe[i];
    std::set<std::int64_t> cands;
    for (int j = 0; j < q; ++j) cands.insert(s[0] + s[j]), cands.insert(2LL * n + s[0] + s[j]);
    bool balanced = false;
    for (auto kp : cands) {
        if (perfect_left_matching(q, q, [&](int a, int b) {
                return s[a] + s[b] == kp || 2LL * n + s[a] + s[b] == kp;
            })) {
            balanced = true;
            break;
        }
    }
    if (!balanced) add(rep, -1, "(6C-iii) no ee-balanced constant");
    // (iv) EV-ordered
    std::set<std::int64_t> V(fv.begin(), fv.end()), E(fe.begin(), fe.end());
    bool odd_even = std::all_of(fv.begin(), fv.end(), [](auto x) { return x % 2 == 1; }) &&
                    std::all_of(fe.begin(), fe.end(), [](auto x) { return x % 2 == 0; });
    bool ev = *V.begin() > *E.rbegin() || *V.rbegin() < *E.begin() ||
              std::includes(E.begin(), E.end(), V.begin(), V.end()) ||
              std::includes(V.begin(), V.end(), E.begin(), E.end()) || odd_even;
    if (!ev) add(rep, -1, "(6C-iv) not EV-ordered");
    // (v) ve-matching with the singular vertex exempt
    const std::int64_t singular = (n + 1) / 2;
    bool vm = false;
    for (int w = 0; w < p && !vm; ++w) {
        std::int64_t kpp = fe[0] + fv[w];
        bool good = true;
        for (int i = 0; i < q && good; ++i) good = V.count(kpp - fe[i]) > 0;
        for (int z = 0; z < p && good; ++z)
            if (fv[z] != singular) good = E.count(kpp - fv[z]) > 0;
        vm = good;
    }
    if (!vm) add(rep, -1, "(6C-v) no ve-matching constant");
    // (vi) set-ordered
    std::int64_t maxX = -1, minX = n + 1, maxY = -1, minY = n + 1;
    for (int v = 0; v < p; ++v) {
        if (sides[v] == 0) maxX = std::max(maxX, fv[v]), minX = std::min(minX, fv[v]);
        else maxY = std::max(maxY, fv[v]), minY = std::min(minY, fv[v]);
    }
    if (!(maxX < minY || minX > maxY)) add(rep, -1, "(6C-vi) not set-ordered");
}

VerifyReport check(const Graph& g, const TotalColoring& h, const FamilySpec& spec, const Ctx& ctx,
                   const std::vector<int>& sides) {
    VerifyReport rep;
    const int q = g.q();
    const Family fam = spec.family;
    rep.edge_set_found = h.e;
    std::sort(rep.edge_set_found.begin(), rep.edge_set_found.end());

    if (fam == Family::six_c) {
        check_six_c(g, h, ctx, sides, rep);
        rep.pass = rep.violations.empty();
        return rep;
    }

    // value domains
    for (int v = 0; v < g.p; ++v) {
        const auto& c = h.v[v];
        bool ok;
        if (fam == Family::vd_ek) ok = ctx.inX(c);
        else if (fam == Family::vk_ed) ok = ctx.inK(c);
        else if (fam == Family::model_graceful) ok = ctx.inX(c) || ctx.inK(c);
        else ok = sides[v] == 0 ? ctx.inX(c) : ctx.inK(c);
        if (!ok) addv(rep, v, "vertex color outside its (k,d) domain");
    }
    for (int i = 0; i < q; ++i) {
        bool ok = fam == Family::vk_ed ? ctx.inX(h.e[i]) : ctx.inK(h.e[i]);
        if (!ok) add(rep, i, "edge color outside its (k,d) domain");
    }

    const Family w = (fam == Family::vd_ek || fam == Family::vk_ed) ? spec.inner : fam;
    std::optional<LinForm> expected_constant = spec.constant;

    for (int i = 0; i < q; ++i) {
        auto [a, b] = g.edges[i];
        const LinForm &fu = h.v[a], &fv = h.v[b], &fe = h.e[i];
        switch (w) {
            case Family::graceful:
            case Family::odd_graceful:
                if (fe != sym_abs(fu - fv)) add(rep, i, "edge color is not |f(u)-f(v)|");
                break;
            case Family::harmonious:
            case Family::odd_elegant: {
                LinForm x = fu + fv - ctx.K;
                if (x.k != 0) {
                    add(rep, i, "f(u)+f(v)-k has a k part; mod* undefined");
                    break;
                }
                std::int64_t mod = checked_mul(checked_mul(q, ctx.D.d), w == Family::odd_elegant ? 2 : 1);
                std::int64_t r = pmod(x.d, mod);
                if (r != x.d) rep.reduced_edges.push_back(i);
                if (fe != ctx.K + LinForm{0, r}) add(rep, i, "edge color violates the mod* sum rule");
                break;
            }
            case Family::model_graceful: {
                LinForm diff = fu - fv;
                bool ok = fe == sym_abs(diff);
                auto wrap = [&](std::int64_t r) { return ctx.K + ctx.D * (q - r); };
                if (ctx.symbolic) {
                    if (diff.k == 1 && diff.d <= -2) ok = fe == wrap(-diff.d);
                    else if (diff.k == -1 && diff.d >= 2) ok = fe == wrap(diff.d);
                } else {
                    for (std::int64_t t : {ctx.kv - diff.d, ctx.kv + diff.d})
                        if (t % ctx.dv == 0 && t / ctx.dv >= 2 && fe == wrap(t / ctx.dv)) ok = true;
                }
                if (!ok) add(rep, i, "edge color violates the model mod* rule");
                break;
            }
            case Family::edge_antimagic:
                break;
            default:
                if (!is_magic(w)) throw Error("unknown-family", "unsupported inner constraint");
                {
                    LinForm val = magic_value(w, fu, fv, fe);
                    if (!rep.constant_found) rep.constant_found = val;
                    else if (val != *rep.constant_found) add(rep, i, "W-constraint value differs from the constant");
                }
        }
    }
    if (expected_constant && rep.constant_found && *expected_constant != *rep.constant_found)
        add(rep, -1, "constant differs from the expected constant");

    // edge color sets
    switch (fam) {
        case Family::graceful:
        case Family::harmonious:
        case Family::edge_magic:
        case Family::edge_difference:
        case Family::graceful_difference:
        case Family::felicitous_difference:
        case Family::model_graceful:
            compare_edge_set(rep, arith_set(q - 1, ctx.K, 0, ctx.D));
            break;
        case Family::odd_graceful:
        case Family::odd_elegant:
        case Family::odd_edge_magic:
        case Family::odd_edge_difference:
        case Family::odd_edge_felicitous_difference:
        case Family::odd_edge_graceful_difference:
            compare_edge_set(rep, odd_set(q, ctx.K, ctx.D, spec.odd_alt));
            break;
        case Family::edge_antimagic: {
            std::vector<LinForm> sums;
            for (int i = 0; i < q; ++i) sums.push_back(h.v[g.edges[i].first] + h.e[i] + h.v[g.edges[i].second]);
            std::sort(sums.begin(), sums.end());
            if (q > 0) {
                LinForm base = sums[0] - ctx.K * 2;
                std::int64_t step = 2 * ctx.D.d;
                if (base.k != 0 || base.d < 0 || base.d % step != 0) {
                    add(rep, -1, "smallest edge sum is not 2k+2ad");
                } else {
                    std::int64_t a = base.d / step;
                    std::vector<LinForm> want;
                    for (int j = 0; j < q; ++j) want.push_back(ctx.K * 2 + ctx.D * (2 * (a + j)));
                    if (sums != want) add(rep, -1, "edge sums are not an arithmetic progression of step 2d");
                    rep.constant_found = sums[0];
                }
            }
            break;
        }
        case Family::vd_ek:
        case Family::vk_ed:
            if (spec.labeling) {
                bool vd = fam == Family::vd_ek;
                std::vector<LinForm> vs(h.v);
                std::sort(vs.begin(), vs.end());
                auto want_v = arith_set(g.p - 1, vd ? LinForm{} : ctx.K, 0, ctx.D);
                if (vs != want_v) add(rep, -1, "vertex color set differs from the all-labeling set");
                compare_edge_set(rep, arith_set(q - 1, vd ? ctx.K : LinForm{}, 0, ctx.D));
            }
            break;
        default:
            break;
    }

    std::set<LinForm> distinct(h.v.begin(), h.v.end());
    if (spec.labeling && static_cast<int>(distinct.size()) != g.p)
        add(rep, -1, "vertex colors are not pairwise distinct");
    if (is_odd_edge(fam) && !spec.labeling && static_cast<int>(distinct.size()) >= g.p)
        add(rep, -1, "odd-edge coloring needs a repeated vertex color (otherwise it is a labeling)");

    if (spec.set_ordered) {
        std::optional<LinForm> maxX, minY;
        for (int v = 0; v < g.p; ++v) {
            if (sides[v] == 0) maxX = maxX ? std::max(*maxX, h.v[v]) : h.v[v];
            else minY = minY ? std::min(*minY, h.v[v]) : h.v[v];
        }
        if (maxX && minY && !(*maxX < *minY)) add(rep, -1, "not set-ordered: max f(X) >= min f(Y)");
    }
    rep.pass = rep.violations.empty();
    return rep;
}

}  // namespace

std::string family_name(Family f) {
    for (const auto& [fam, name] : family_table())
        if (fam == f) return name;
    throw Error("unknown-family", "unnamed family");
}

Family parse_family(const std::string& name) {
    for (const auto& [fam, n] : family_table())
        if (n == name) return fam;
    if (name == "six-c" || name == "6c") return Family::six_c;
    throw Error("unknown-family", "'" + name + "'");
}

const std::vector<Family>& all_families() {
    static const std::vector<Family> v = [] {
        std::vector<Family> out;
        for (const auto& [f, n] : family_table()) out.push_back(f);
        return out;
    }();
    return v;
}

std::vector<LinForm> arith_set(std::int64_t s, LinForm K, std::int64_t r, LinForm D) {
    std::vector<LinForm> out;
    for (std::int64_t i = 0; i <= s; ++i) out.push_back(K + D * (r + i));
    return out;
}

std::vector<LinForm> odd_set(std::int64_t q, LinForm K, LinForm D, bool alt) {
    std::vector<LinForm> out;
    for (std::int64_t i = 1; i <= q; ++i) out.push_back(K + D * (alt ? 2 * (i - 1) : 2 * i - 1));
    return out;
}

const std::vector<std::pair<std::int64_t, std::int64_t>>& verification_grid() {
    static const std::vector<std::pair<std::int64_t, std::int64_t>> g{{0, 1}, {1, 1}, {1, 2}, {5, 3}, {1000, 1}};
    return g;
}

VerifyReport verify(const Graph& g, const TotalColoring& f, const FamilySpec& spec, const Params& params) {
    if (static_cast<int>(f.v.size()) != g.p || static_cast<int>(f.e.size()) != g.q())
        throw Error("incomplete-coloring", "coloring does not cover every vertex and edge");
    auto sides = infer_sides(g, f);
    if (!params.symbolic) {
        if (params.k < 0 || params.d < 1) throw Error("domain-error", "need k >= 0 and d >= 1");
        FamilySpec s2 = spec;
        if (s2.constant) s2.constant = LinForm::plain(s2.constant->eval(params.k, params.d));
        return check(g, f.eval(params.k, params.d), s2, Ctx::at(params.k, params.d), sides);
    }
    VerifyReport rep = check(g, f, spec, Ctx::sym(), sides);
    if (!rep.pass) return rep;
    for (auto [k0, d0] : verification_grid()) {
        FamilySpec s2 = spec;
        if (s2.constant) s2.constant = LinForm::plain(s2.constant->eval(k0, d0));
        auto sub = check(g, f.eval(k0, d0), s2, Ctx::at(k0, d0), sides);
        if (!sub.pass)
            add(rep, -1,
                "grid-disagreement at (k,d)=(" + std::to_string(k0) + "," + std::to_string(d0) +
                    "): " + sub.violations.front().reason);
    }
    rep.pass = rep.violations.empty();
    return rep;
}

namespace {

struct Naming {
    std::vector<int> xs, ys, es;
};

Naming monotone_naming(const Graph& g, const TotalColoring& f) {
    auto sides = infer_sides(g, f);
    for (auto [u, v] : g.edges)
        if (sides[u] == sides[v]) throw Error("needs-bipartition", "coloring does not induce a bipartition");
    Naming n;
    for (int v = 0; v < g.p; ++v) (sides[v] == 0 ? n.xs : n.ys).push_back(v);
    auto byv = [&](int a, int b) { return std::tie(f.v[a], a) < std::tie(f.v[b], b); };
    std::sort(n.xs.begin(), n.xs.end(), byv);
    std::sort(n.ys.begin(), n.ys.end(), byv);
    for (int i = 0; i < g.q(); ++i) n.es.push_back(i);
    std::sort(n.es.begin(), n.es.end(), [&](int a, int b) { return std::tie(f.e[a], a) < std::tie(f.e[b], b); });
    return n;
}

void mirror(std::vector<LinForm>& vals, const std::vector<int>& ids) {
    if (ids.empty()) return;
    LinForm c = vals[ids.front()] + vals[ids.back()];
    for (int id : ids) vals[id] = c - vals[id];
}

void reverse_on(std::vector<LinForm>& vals, const std::vector<int>& ids) {
    std::vector<LinForm> old(vals);
    const std::size_t n = ids.size();
    for (std::size_t i = 0; i < n; ++i) vals[ids[i]] = old[ids[n - 1 - i]];
}

}  // namespace

TotalColoring transform(const Graph& g, const TotalColoring& f, const std::vector<int>& moves) {
    if (static_cast<int>(f.v.size()) != g.p || static_cast<int>(f.e.size()) != g.q())
        throw Error("incomplete-coloring", "coloring does not cover the graph");
    Naming n = monotone_naming(g, f);
    TotalColoring h = f;
    for (int mv : moves) {
        switch (mv) {
            case 1: case 2: case 3: case 4:
                break;
            case 5: {
                if (n.xs.empty() || n.ys.empty()) throw Error("needs-bipartition", "Tra-5 needs both sides");
                LinForm c = h.v[n.ys.back()] + h.v[n.xs.front()];
                for (auto& x : h.v) x = c - x;
                break;
            }
            case 6: mirror(h.e, n.es); break;
            case 7: mirror(h.v, n.xs); break;
            case 8: mirror(h.v, n.ys); break;
            case 9: reverse_on(h.e, n.es); break;
            case 10: reverse_on(h.v, n.xs); break;
            case 11: reverse_on(h.v, n.ys); break;
            default: throw Error("invalid-move", "Tra code must be 1..11");
        }
    }
    return h;
}

Derived derive_equivalent(const Graph& g, const TotalColoring& f, Family target) {
    FamilySpec gs;
    auto rep = verify(g, f, gs, Params::sym());
    if (!rep.pass) throw Error("not-derivable", "input is not a graceful (k,d)-total coloring");
    const int q = g.q();
    const LinForm K{1, 0}, D{0, 1};
    Naming n = monotone_naming(g, f);
    const LinForm fx1 = f.v[n.xs.front()], fxs = f.v[n.xs.back()];
    const LinForm fy1 = f.v[n.ys.front()], fyt = f.v[n.ys.back()];
    switch (target) {
        case Family::graceful:
            return {f, std::nullopt};
        case Family::graceful_difference:
            return {f, LinForm{}};
        case Family::edge_magic:
            return {transform(g, f, {7, 6}), K * 2 + D * (q - 1) + fxs + fx1};
        case Family::edge_difference:
            return {transform(g, f, {6}), K * 2 + D * (q - 1)};
        case Family::felicitous_difference:
            return {transform(g, f, {8, 6}), sym_abs(fyt + fy1 - K * 2 - D * (q - 1))};
        case Family::harmonious: {
            TotalColoring h = transform(g, f, {8});
            for (int i = 0; i < q; ++i) {
                auto [u, v] = g.edges[i];
                LinForm s = h.v[u] + h.v[v] - K;
                h.e[i] = K + D * ((s.d % q + q) % q);
            }
            return {h, std::nullopt};
        }
        case Family::edge_antimagic: {
            TotalColoring h = f;
            for (int y : n.ys) h.v[y] = fyt + K - f.v[y];
            reverse_on(h.e, n.es);
            LinForm base = fyt - K - D * (q - 1);  // (b_t - q + 1) d
            if (base.k != 0 || base.d < 0 || base.d % 2 != 0)
                throw Error("not-derivable", "edge sums would not form a progression of step 2d");
            return {h, K * 2 + base};
        }
        default:
            throw Error("not-derivable", "no equivalence route to " + family_name(target));
    }
}

DualityResult check_duality(const TotalColoring& f, const TotalColoring& g, const std::vector<int>& vertex_map,
                            const std::vector<int>& edge_map, DualMode mode) {
    DualityResult res;
    auto sums = [](const std::vector<LinForm>& a, const std::vector<LinForm>& b, const std::vector<int>& map,
                   std::optional<LinForm>& out) {
        if (a.size() != b.size()) throw Error("size-mismatch", "colorings differ in size");
        if (!map.empty() && map.size() != a.size()) throw Error("size-mismatch", "mapping size");
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::size_t j = map.empty() ? i : static_cast<std::size_t>(map[i]);
            if (j >= b.size()) throw Error("size-mismatch", "mapping target out of range");
            LinForm s = a[i] + b[j];
            if (!out) out = s;
            else if (*out != s) return false;
        }
        return true;
    };
    bool ok = true;
    if (mode != DualMode::edge) {
        std::optional<LinForm> c;
        ok = sums(f.v, g.v, vertex_map, c) && ok;
        if (c) res.a = c->k, res.r = c->d;
    }
    if (mode != DualMode::vertex) {
        std::optional<LinForm> c;
        ok = sums(f.e, g.e, edge_map, c) && ok;
        if (c) res.b = c->k, res.s = c->d;
    }
    res.holds = ok;
    return res;
}

bool check_twin(const Graph& G, const TotalColoring& f, const Graph& H, const TotalColoring& g, std::int64_t k0,
                std::int64_t d0) {
    (void)H;
    const int q = G.q();
    std::set<std::int64_t> universe;
    for (auto x : arith_set(q - 1, LinForm{}, 0, LinForm{0, 1})) universe.insert(x.eval(k0, d0));
    for (auto x : arith_set(q - 1, LinForm{1, 0}, 0, LinForm{0, 1})) universe.insert(x.eval(k0, d0));
    for (const auto* vec : {&f.v, &f.e})
        for (const auto& c : *vec) universe.erase(c.eval(k0, d0));
    std::set<std::int64_t> other;
    for (const auto* vec : {&g.v, &g.e})
        for (const auto& c : *vec) other.insert(c.eval(k0, d0));
    return universe == other;
}

AbcResult abc_constraint(const Graph& g, const TotalColoring& f, std::int64_t a, std::int64_t b, std::int64_t c,
                         Family kind) {
    if (static_cast<int>(f.v.size()) != g.p || static_cast<int>(f.e.size()) != g.q())
        throw Error("incomplete-coloring", "coloring does not cover the graph");
    auto sides = infer_sides(g, f);
    AbcResult res;
    for (int i = 0; i < g.q(); ++i) {
        auto [x, y] = g.edges[i];
        if (sides[x] != 0) std::swap(x, y);
        const LinForm fu = f.v[x] * a, fv = f.v[y] * b, fe = f.e[i] * c;
        LinForm val;
        switch (kind) {
            case Family::edge_magic: val = fu + fv + fe; break;
            case Family::edge_difference: val = fe + sym_abs(fu - fv); break;
            case Family::felicitous_difference: val = sym_abs(fu + fv - fe); break;
            case Family::graceful_difference: val = sym_abs(sym_abs(fu - fv) - fe); break;
            default: throw Error("unknown-family", "abc kinds are the four magic types");
        }
        res.values.push_back(val);
    }
    if (res.values.empty()) return res;
    auto [lo, hi] = std::minmax_element(res.values.begin(), res.values.end());
    res.spread = *hi - *lo;
    if (res.spread.is_zero()) res.constant = *lo;
    return res;
}

}  // namespace topocode
