#include "topocode/graph.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace topocode {

Graph Graph::make(int p, std::vector<Edge> edges, std::vector<int> side) {
    if (p < 0) throw Error("invalid-graph", "negative vertex count");
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= p || v >= p) throw Error("no-such-vertex", "edge endpoint out of range");
        if (u == v) throw Error("invalid-graph", "loop edge");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw Error("invalid-graph", "parallel edge");
    if (!side.empty()) {
        if (static_cast<int>(side.size()) != p) throw Error("invalid-graph", "bipartition size mismatch");
        for (int s : side)
            if (s != 0 && s != 1) throw Error("invalid-graph", "bipartition side must be 0 or 1");
        for (auto [u, v] : edges)
            if (side[u] == side[v]) throw Error("invalid-graph", "edge inside one side of the bipartition");
    }
    Graph g;
    g.p = p;
    g.edges = std::move(edges);
    g.side = std::move(side);
    return g;
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), Edge{u, v});
    if (it == edges.end() || *it != Edge{u, v}) return -1;
    return static_cast<int>(it - edges.begin());
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(p);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(p, 0);
    for (auto [u, v] : edges) ++deg[u], ++deg[v];
    return deg;
}

std::vector<int> Graph::X() const {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(side.size()); ++v)
        if (side[v] == 0) out.push_back(v);
    return out;
}

std::vector<int> Graph::Y() const {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(side.size()); ++v)
        if (side[v] == 1) out.push_back(v);
    return out;
}

bool Graph::connected() const {
    if (p == 0) return true;
    auto adj = adjacency();
    std::vector<char> seen(p, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj[u])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == p;
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
    auto adj = g.adjacency();
    std::vector<int> col(g.p, -1);
    for (int s = 0; s < g.p; ++s) {
        if (col[s] != -1) continue;
        col[s] = 0;
        std::deque<int> dq{s};
        while (!dq.empty()) {
            int u = dq.front();
            dq.pop_front();
            for (int w : adj[u]) {
                if (col[w] == -1) {
                    col[w] = 1 - col[u];
                    dq.push_back(w);
                } else if (col[w] == col[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return col;
}

Graph with_bipartition(const Graph& g) {
    auto col = two_coloring(g);
    if (!col) throw Error("not-bipartite", "graph has an odd cycle");
    Graph out = g;
    out.side = *col;
    return out;
}

Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return with_bipartition(Graph::make(n, e));
}

Graph star_graph(int leaves) {
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
    return with_bipartition(Graph::make(leaves + 1, e));
}

Graph cycle_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return Graph::make(n, e);
}

Graph complete_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return Graph::make(n, e);
}

Graph complete_bipartite(int m, int n) {
    std::vector<Edge> e;
    std::vector<int> side(m + n, 1);
    for (int i = 0; i < m; ++i) {
        side[i] = 0;
        for (int j = 0; j < n; ++j) e.push_back({i, m + j});
    }
    return Graph::make(m + n, e, side);
}

Graph random_tree(int n, Rng& rng) {
    if (n <= 0) throw Error("domain-error", "tree needs at least one vertex");
    if (n == 1) return with_bipartition(Graph::make(1, {}));
    if (n == 2) return with_bipartition(Graph::make(2, {{0, 1}}));
    std::vector<int> prufer(n - 2);
    for (auto& x : prufer) x = static_cast<int>(rng.below(n));
    std::vector<int> deg(n, 1);
    for (int x : prufer) ++deg[x];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.insert(v);
    std::vector<Edge> e;
    for (int x : prufer) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        e.push_back({leaf, x});
        if (--deg[x] == 1) leaves.insert(x);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    e.push_back({a, b});
    return with_bipartition(Graph::make(n, e));
}

VertexMapped vertex_split(const Graph& g, int v, const std::vector<std::vector<int>>& parts) {
    if (v < 0 || v >= g.p) throw Error("no-such-vertex", "vertex " + std::to_string(v));
    if (parts.empty()) throw Error("invalid-partition", "no parts given");
    auto adj = g.adjacency();
    std::set<int> seen;
    for (const auto& part : parts) {
        if (part.empty()) throw Error("invalid-partition", "empty part");
        for (int w : part) {
            if (!std::binary_search(adj[v].begin(), adj[v].end(), w))
                throw Error("invalid-partition", "part contains a non-neighbour");
            if (!seen.insert(w).second) throw Error("invalid-partition", "parts overlap");
        }
    }
    if (seen.size() != adj[v].size()) throw Error("invalid-partition", "parts do not cover N(v)");
    int p = g.p;
    std::vector<int> owner(g.p, v);
    for (std::size_t i = 1; i < parts.size(); ++i)
        for (int w : parts[i]) owner[w] = p + static_cast<int>(i) - 1;
    std::vector<Edge> edges;
    for (auto [a, b] : g.edges) {
        if (a == v) a = owner[b];
        else if (b == v) b = owner[a];
        edges.push_back({a, b});
    }
    int np = p + static_cast<int>(parts.size()) - 1;
    std::vector<int> side = g.side;
    if (!side.empty()) side.resize(np, g.side[v]);
    VertexMapped out{Graph::make(np, edges, side), {}};
    out.map.resize(np);
    std::iota(out.map.begin(), out.map.begin() + p, 0);
    for (int i = p; i < np; ++i) out.map[i] = v;
    return out;
}

VertexMapped vertex_split_to_tree(const Graph& g, std::uint64_t seed) {
    if (g.p == 0 || !g.connected()) throw Error("not-connected", "graph must be connected");
    Rng rng(seed);
    std::vector<int> order(g.q());
    std::iota(order.begin(), order.end(), 0);
    if (!g.is_tree()) rng.shuffle(order);
    std::vector<int> parent(g.p);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    std::vector<char> in_tree(g.q(), 0);
    for (int idx : order) {
        auto [u, v] = g.edges[idx];
        int a = find(u), b = find(v);
        if (a != b) {
            parent[a] = b;
            in_tree[idx] = 1;
        }
    }
    std::vector<Edge> edges;
    std::vector<int> map(g.p);
    std::iota(map.begin(), map.end(), 0);
    std::vector<int> side = g.side;
    int np = g.p;
    for (int i = 0; i < g.q(); ++i) {
        auto [u, v] = g.edges[i];
        if (in_tree[i]) {
            edges.push_back({u, v});
        } else {
            edges.push_back({u, np});
            map.push_back(v);
            if (!side.empty()) side.push_back(g.side[v]);
            ++np;
        }
    }
    return {Graph::make(np, edges, side), map};
}

VertexMapped coincide_classes(const Graph& g, const std::vector<int>& cls) {
    if (static_cast<int>(cls.size()) != g.p) throw Error("invalid-argument", "class vector size mismatch");
    std::map<int, int> first;
    for (int v = 0; v < g.p; ++v) first.emplace(cls[v], v);
    std::vector<std::pair<int, int>> order;
    for (auto [c, v] : first) order.push_back({v, c});
    std::sort(order.begin(), order.end());
    std::map<int, int> newid;
    for (std::size_t i = 0; i < order.size(); ++i) newid[order[i].second] = static_cast<int>(i);
    std::vector<int> map(g.p);
    for (int v = 0; v < g.p; ++v) map[v] = newid[cls[v]];
    int np = static_cast<int>(order.size());
    std::set<Edge> es;
    for (auto [u, v] : g.edges) {
        int a = map[u], b = map[v];
        if (a == b) throw Error("would-create-loop", "adjacent vertices would be merged");
        es.insert({std::min(a, b), std::max(a, b)});
    }
    std::vector<int> side;
    if (g.has_bipartition()) {
        side.assign(np, -1);
        bool ok = true;
        for (int v = 0; v < g.p; ++v) {
            if (side[map[v]] == -1) side[map[v]] = g.side[v];
            else if (side[map[v]] != g.side[v]) ok = false;
        }
        if (!ok) side.clear();
    }
    return {Graph::make(np, {es.begin(), es.end()}, side), map};
}

VertexMapped vertex_coincide(const Graph& g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.p || v >= g.p) throw Error("no-such-vertex", "vertex out of range");
    if (u == v) throw Error("invalid-argument", "cannot coincide a vertex with itself");
    if (g.has_edge(u, v)) throw Error("would-create-loop", "vertices are adjacent");
    std::vector<int> cls(g.p);
    std::iota(cls.begin(), cls.end(), 0);
    cls[std::max(u, v)] = std::min(u, v);
    return coincide_classes(g, cls);
}

VertexMapped remove_vertices(const Graph& g, const std::vector<bool>& drop) {
    std::vector<int> map(g.p, -1);
    int np = 0;
    for (int v = 0; v < g.p; ++v)
        if (!drop[v]) map[v] = np++;
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges)
        if (map[u] >= 0 && map[v] >= 0) edges.push_back({map[u], map[v]});
    std::vector<int> side;
    if (g.has_bipartition())
        for (int v = 0; v < g.p; ++v)
            if (map[v] >= 0) side.push_back(g.side[v]);
    return {Graph::make(np, edges, side), map};
}

Graph edge_join(const Graph& g1, const Graph& g2, int u, int x) {
    if (u < 0 || u >= g1.p || x < 0 || x >= g2.p) throw Error("no-such-vertex", "join endpoint out of range");
    std::vector<Edge> edges = g1.edges;
    for (auto [a, b] : g2.edges) edges.push_back({a + g1.p, b + g1.p});
    edges.push_back({u, x + g1.p});
    std::vector<int> side;
    if (g1.has_bipartition() && g2.has_bipartition()) {
        side = g1.side;
        bool flip = g1.side[u] == g2.side[x];
        for (int s : g2.side) side.push_back(flip ? 1 - s : s);
    }
    return Graph::make(g1.p + g2.p, edges, side);
}

int LeafPlan::total() const { return std::accumulate(counts.begin(), counts.end(), 0); }

LeafPlan random_leaf_plan(const Graph& g, int m, std::uint64_t seed) {
    if (g.p == 0) throw Error("invalid-plan", "graph has no vertices");
    Rng rng(seed);
    LeafPlan plan;
    plan.seed = seed;
    plan.counts.assign(g.p, 0);
    for (int i = 0; i < m; ++i) ++plan.counts[rng.below(g.p)];
    return plan;
}

std::vector<int> leaf_parents(const Graph& g, const LeafPlan& plan) {
    if (static_cast<int>(plan.counts.size()) != g.p) throw Error("invalid-plan", "plan must index every vertex");
    std::vector<int> parents;
    for (int v = 0; v < g.p; ++v) {
        if (plan.counts[v] < 0) throw Error("invalid-plan", "negative leaf count");
        for (int i = 0; i < plan.counts[v]; ++i) parents.push_back(v);
    }
    return parents;
}

Graph add_leaves(const Graph& g, const LeafPlan& plan) {
    auto parents = leaf_parents(g, plan);
    std::vector<Edge> edges = g.edges;
    std::vector<int> side = g.side;
    int id = g.p;
    for (int par : parents) {
        edges.push_back({par, id++});
        if (!side.empty()) side.push_back(1 - g.side[par]);
    }
    return Graph::make(id, edges, side);
}

std::vector<int> bfs_parents(const Graph& t, int root) {
    auto adj = t.adjacency();
    std::vector<int> par(t.p, -2);
    par[root] = -1;
    std::deque<int> dq{root};
    while (!dq.empty()) {
        int u = dq.front();
        dq.pop_front();
        for (int w : adj[u])
            if (par[w] == -2) {
                par[w] = u;
                dq.push_back(w);
            }
    }
    return par;
}

namespace {

std::vector<int> bfs_dist(const std::vector<std::vector<int>>& adj, int root) {
    std::vector<int> dist(adj.size(), -1);
    dist[root] = 0;
    std::deque<int> dq{root};
    while (!dq.empty()) {
        int u = dq.front();
        dq.pop_front();
        for (int w : adj[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                dq.push_back(w);
            }
    }
    return dist;
}

int farthest(const std::vector<int>& dist) {
    int best = 0;
    for (int v = 0; v < static_cast<int>(dist.size()); ++v)
        if (dist[v] > dist[best]) best = v;
    return best;
}

}  // namespace

std::vector<int> longest_path(const Graph& t) {
    if (!t.is_tree()) throw Error("not-a-tree", "longest path needs a tree");
    auto adj = t.adjacency();
    int a = farthest(bfs_dist(adj, 0));
    auto par = bfs_parents(t, a);
    int b = farthest(bfs_dist(adj, a));
    std::vector<int> path;
    for (int v = b; v != -1; v = par[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

int diameter(const Graph& t) {
    if (!t.is_tree()) throw Error("not-a-tree", "diameter needs a tree");
    return static_cast<int>(longest_path(t).size()) - 1;
}

PeelTrace peel_leaves(const Graph& t) {
    if (!t.is_tree()) throw Error("not-a-tree", "peeling needs a tree");
    if (t.p < 2) throw Error("domain-error", "peeling needs diameter at least 1");
    auto adj = t.adjacency();
    std::vector<char> alive(t.p, 1);
    std::vector<int> deg = t.degrees();
    PeelTrace tr;
    std::vector<int> cur(t.p);
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
        tr.alive.push_back(cur);
        int inner = 0;
        for (int v : cur)
            if (deg[v] > 1) ++inner;
        if (inner <= 1) break;  // star or K2
        std::vector<int> leaves;
        for (int v : cur)
            if (deg[v] == 1) leaves.push_back(v);
        for (int v : leaves) {
            alive[v] = 0;
            for (int w : adj[v])
                if (alive[w]) --deg[w];
        }
        tr.removed.push_back(leaves);
        std::vector<int> next;
        for (int v : cur)
            if (alive[v]) next.push_back(v);
        cur = std::move(next);
    }
    if (cur.size() == 2) {
        tr.center = cur[1];
        tr.star_leaves = {cur[0]};
    } else {
        for (int v : cur)
            if (deg[v] > 1) tr.center = v;
        for (int v : cur)
            if (v != tr.center) tr.star_leaves.push_back(v);
    }
    return tr;
}

PmMove pm_edge_op(const Graph& t, Edge remove, Edge add) {
    if (t.edge_index(remove.first, remove.second) < 0) throw Error("invalid-move", "removed pair is not an edge");
    if (add.first == add.second || add.first < 0 || add.second < 0 || add.first >= t.p || add.second >= t.p)
        throw Error("invalid-move", "added pair is not a valid vertex pair");
    bool same = std::minmax(remove.first, remove.second) == std::minmax(add.first, add.second);
    if (!same && t.has_edge(add.first, add.second)) throw Error("invalid-move", "added pair is already an edge");
    std::vector<Edge> edges;
    auto rm = std::minmax(remove.first, remove.second);
    for (auto e : t.edges)
        if (e != Edge{rm.first, rm.second}) edges.push_back(e);
    edges.push_back(add);
    PmMove out;
    out.graph = Graph::make(t.p, edges);
    out.is_tree = out.graph.is_tree();
    if (auto col = two_coloring(out.graph)) out.graph.side = *col;
    return out;
}

namespace {

std::vector<Graph> tree_moves(const Graph& t) {
    std::vector<Graph> out;
    for (auto e : t.edges)
        for (int x = 0; x < t.p; ++x)
            for (int y = x + 1; y < t.p; ++y) {
                if (t.has_edge(x, y)) continue;
                auto mv = pm_edge_op(t, e, {x, y});
                if (mv.is_tree) out.push_back(std::move(mv.graph));
            }
    return out;
}

CanonKey labeled_key(const Graph& g) {
    CanonKey k{g.p};
    for (auto [u, v] : g.edges) k.push_back(u), k.push_back(v);
    return k;
}

}  // namespace

PmTreeSet enumerate_pm_tree_set(const Graph& t, int max_nodes, bool labeled) {
    if (!t.is_tree()) throw Error("not-a-tree", "tree sets start from a tree");
    auto key = [&](const Graph& g) { return labeled ? labeled_key(g) : canonical_form(g); };
    PmTreeSet res;
    std::set<CanonKey> one_keys{key(t)};
    res.one_step.push_back(t);
    for (auto& g : tree_moves(t))
        if (one_keys.insert(key(g)).second) res.one_step.push_back(g);

    std::set<CanonKey> seen{key(t)};
    std::deque<std::pair<Graph, int>> dq{{t, 0}};
    while (!dq.empty()) {
        auto [g, dist] = dq.front();
        dq.pop_front();
        res.closure.push_back(g);
        res.distance.push_back(dist);
        for (auto& h : tree_moves(g)) {
            auto k = key(h);
            if (seen.count(k)) continue;
            if (static_cast<int>(seen.size()) >= max_nodes) {
                res.partial = true;
                continue;
            }
            seen.insert(k);
            dq.push_back({std::move(h), dist + 1});
        }
    }
    return res;
}

std::optional<int> pm_distance_uncolored(const Graph& a, const Graph& b, int bound) {
    if (!a.is_tree() || !b.is_tree() || a.p != b.p) throw Error("incompatible", "need two trees of equal order");
    auto target = canonical_form(b);
    std::set<CanonKey> seen{canonical_form(a)};
    std::deque<std::pair<Graph, int>> dq{{a, 0}};
    while (!dq.empty()) {
        auto [g, dist] = dq.front();
        dq.pop_front();
        if (canonical_form(g) == target) return dist;
        if (dist >= bound) continue;
        for (auto& h : tree_moves(g))
            if (seen.insert(canonical_form(h)).second) dq.push_back({std::move(h), dist + 1});
    }
    return std::nullopt;
}

namespace {

struct Canonizer {
    int n;
    std::vector<std::vector<std::pair<int, int>>> nb;  // (neighbour, edge color rank)
    const std::vector<LinForm>* vcol;
    const std::vector<LinForm>* ecol;
    const std::vector<Edge>* edges;
    std::int64_t budget;
    std::int64_t leaves = 0;
    std::optional<CanonKey> best;

    static std::vector<int> normalize(const std::vector<std::int64_t>& raw) {
        std::vector<std::int64_t> vals(raw);
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        std::vector<int> out(raw.size());
        for (std::size_t i = 0; i < raw.size(); ++i)
            out[i] = static_cast<int>(std::lower_bound(vals.begin(), vals.end(), raw[i]) - vals.begin());
        return out;
    }

    void refine(std::vector<int>& cls) const {
        int classes = *std::max_element(cls.begin(), cls.end()) + 1;
        while (true) {
            std::vector<std::vector<int>> sig(n);
            for (int v = 0; v < n; ++v) {
                std::vector<std::pair<int, int>> items;
                for (auto [w, ec] : nb[v]) items.push_back({cls[w], ec});
                std::sort(items.begin(), items.end());
                sig[v].push_back(cls[v]);
                for (auto [a, b] : items) sig[v].push_back(a), sig[v].push_back(b);
            }
            std::vector<std::vector<int>> uniq(sig);
            std::sort(uniq.begin(), uniq.end());
            uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
            for (int v = 0; v < n; ++v)
                cls[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
            int now = static_cast<int>(uniq.size());
            if (now == classes) return;
            classes = now;
        }
    }

    CanonKey leaf_key(const std::vector<int>& pos) const {
        CanonKey key{n, static_cast<std::int64_t>(edges->size())};
        std::vector<int> inv(n);
        for (int v = 0; v < n; ++v) inv[pos[v]] = v;
        for (int i = 0; i < n; ++i) {
            key.push_back((*vcol)[inv[i]].k);
            key.push_back((*vcol)[inv[i]].d);
        }
        std::vector<std::array<std::int64_t, 4>> es;
        for (std::size_t i = 0; i < edges->size(); ++i) {
            int a = pos[(*edges)[i].first], b = pos[(*edges)[i].second];
            if (a > b) std::swap(a, b);
            es.push_back({a, b, (*ecol)[i].k, (*ecol)[i].d});
        }
        std::sort(es.begin(), es.end());
        for (auto& e : es) key.insert(key.end(), e.begin(), e.end());
        return key;
    }

    void search(std::vector<int> cls) {
        refine(cls);
        std::vector<int> size(n, 0);
        for (int c : cls) ++size[c];
        int target = -1;
        for (int c = 0; c < n; ++c)
            if (size[c] > 1) {
                target = c;
                break;
            }
        if (target < 0) {
            if (++leaves > budget) throw Error("too-large", "canonical form search budget exceeded");
            auto key = leaf_key(cls);
            if (!best || key < *best) best = std::move(key);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (cls[v] != target) continue;
            std::vector<std::int64_t> raw(n);
            for (int w = 0; w < n; ++w) raw[w] = 2LL * cls[w] + ((cls[w] == target && w != v) ? 1 : 0);
            search(normalize(raw));
        }
    }
};

CanonKey canon(const Graph& g, const std::vector<LinForm>& vcol, const std::vector<LinForm>& ecol,
               std::int64_t budget) {
    if (g.p == 0) return {0, 0};
    Canonizer c;
    c.n = g.p;
    c.vcol = &vcol;
    c.ecol = &ecol;
    c.edges = &g.edges;
    c.budget = budget;
    std::vector<LinForm> edist(ecol);
    std::sort(edist.begin(), edist.end());
    edist.erase(std::unique(edist.begin(), edist.end()), edist.end());
    c.nb.resize(g.p);
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        int r = static_cast<int>(std::lower_bound(edist.begin(), edist.end(), ecol[i]) - edist.begin());
        c.nb[g.edges[i].first].push_back({g.edges[i].second, r});
        c.nb[g.edges[i].second].push_back({g.edges[i].first, r});
    }
    std::vector<LinForm> vdist(vcol);
    std::sort(vdist.begin(), vdist.end());
    vdist.erase(std::unique(vdist.begin(), vdist.end()), vdist.end());
    std::vector<int> cls(g.p);
    for (int v = 0; v < g.p; ++v)
        cls[v] = static_cast<int>(std::lower_bound(vdist.begin(), vdist.end(), vcol[v]) - vdist.begin());
    c.search(cls);
    return *c.best;
}

}  // namespace

CanonKey canonical_form(const Graph& g) {
    if (g.p > 10) throw Error("too-large", "uncolored canonical forms are limited to 10 vertices");
    return canon(g, std::vector<LinForm>(g.p), std::vector<LinForm>(g.q()), 10'000'000);
}

CanonKey canonical_form_colored(const Graph& g, const std::vector<LinForm>& vcol, const std::vector<LinForm>& ecol,
                                std::int64_t leaf_budget) {
    if (static_cast<int>(vcol.size()) != g.p || static_cast<int>(ecol.size()) != g.q())
        throw Error("incomplete-coloring", "coloring does not match graph");
    return canon(g, vcol, ecol, leaf_budget);
}

bool isomorphic(const Graph& a, const Graph& b) {
    return a.p == b.p && a.q() == b.q() && canonical_form(a) == canonical_form(b);
}

}  // namespace topocode
