#include "topocode/matrix.hpp"

#include <functional>
#include <set>
#include <sstream>

namespace topocode {

TopcodeMatrix from_colored_graph(const Graph& g, const TotalColoring& f) {
    if (static_cast<int>(f.v.size()) != g.p || static_cast<int>(f.e.size()) != g.q())
        throw Error("incomplete-coloring", "coloring does not cover the graph");
    std::vector<TopcodeMatrix::Col> cs;
    for (int i = 0; i < g.q(); ++i) {
        auto [u, v] = g.edges[i];
        int x = u, y = v;
        if (g.has_bipartition()) {
            if (g.side[u] != 0) std::swap(x, y);
        } else if (f.v[v] < f.v[u]) {
            std::swap(x, y);
        }
        cs.push_back({f.v[x], f.e[i], f.v[y]});
    }
    return canonical_order(TopcodeMatrix::from_cols(cs));
}

TopcodeMatrix unit_matrix(std::size_t q) {
    TopcodeMatrix m;
    for (std::size_t i = 0; i < q; ++i) m.push({LinForm{0, 0}, LinForm{1, 0}, LinForm{1, 0}});
    return m;
}

TopcodeMatrix parameterize(const IntMatrix& t) {
    t.check();
    TopcodeMatrix m;
    for (const auto& c : t.cols()) m.push({LinForm{0, c[0]}, LinForm{1, c[1]}, LinForm{1, c[2]}});
    return m;
}

IntMatrix evaluate(const TopcodeMatrix& m, std::int64_t k0, std::int64_t d0) {
    m.check();
    IntMatrix out;
    for (const auto& c : m.cols()) {
        IntMatrix::Col ic{c[0].eval(k0, d0), c[1].eval(k0, d0), c[2].eval(k0, d0)};
        for (auto x : ic)
            if (x < 0) throw Error("negative-entry", "evaluation produced a negative color");
        out.push(ic);
    }
    return out;
}

IntMatrix to_int_matrix(const TopcodeMatrix& m) {
    IntMatrix out;
    for (const auto& c : m.cols()) {
        for (const auto& x : c)
            if (x.k != 0) throw Error("not-integral", "matrix entry has a k part");
        out.push({c[0].d, c[1].d, c[2].d});
    }
    return out;
}

TopcodeMatrix to_topcode(const IntMatrix& m) {
    TopcodeMatrix out;
    for (const auto& c : m.cols()) out.push({LinForm::plain(c[0]), LinForm::plain(c[1]), LinForm::plain(c[2])});
    return out;
}

TopcodeMatrix linear_combine(const std::vector<std::int64_t>& coeffs, const std::vector<TopcodeMatrix>& mats) {
    if (coeffs.size() != mats.size() || mats.empty()) throw Error("length-mismatch", "one coefficient per matrix");
    std::int64_t total = 0;
    for (auto c : coeffs) {
        if (c < 0) throw Error("domain-error", "coefficients must be nonnegative");
        total = checked_add(total, c);
    }
    if (total < 1) throw Error("domain-error", "coefficients must not all be zero");
    std::size_t q = mats[0].q();
    TopcodeMatrix out;
    out.X.assign(q, {});
    out.E.assign(q, {});
    out.Y.assign(q, {});
    for (std::size_t j = 0; j < mats.size(); ++j) {
        mats[j].check();
        if (mats[j].q() != q) throw Error("length-mismatch", "matrices differ in column count");
        for (std::size_t i = 0; i < q; ++i) {
            out.X[i] += mats[j].X[i] * coeffs[j];
            out.E[i] += mats[j].E[i] * coeffs[j];
            out.Y[i] += mats[j].Y[i] * coeffs[j];
        }
    }
    return out;
}

namespace {

struct Group {
    int row;                  // 0 = X, 2 = Y
    std::vector<int> columns;
};

}  // namespace

GraphsFromMatrix graphs_from_matrix(const TopcodeMatrix& m, int max_p, std::int64_t budget) {
    m.check();
    const int q = static_cast<int>(m.q());
    std::vector<Group> groups;
    for (int row : {0, 2}) {
        const auto& vals = row == 0 ? m.X : m.Y;
        std::map<LinForm, std::vector<int>> by;
        for (int i = 0; i < q; ++i) by[vals[i]].push_back(i);
        for (auto& [val, cols] : by) groups.push_back({row, cols});
    }
    GraphsFromMatrix res;
    std::map<CanonKey, RealizedGraph> found;
    // block[g][j] = block index of the j-th occurrence in group g
    std::vector<std::vector<int>> block(groups.size());
    std::vector<int> nblocks(groups.size(), 0);
    const int ngroups = static_cast<int>(groups.size());

    auto emit = [&]() {
        std::vector<int> xv(q), yv(q);
        int id = 0;
        std::vector<int> side;
        std::vector<LinForm> vcol;
        for (int gi = 0; gi < ngroups; ++gi) {
            const auto& gr = groups[gi];
            for (std::size_t j = 0; j < gr.columns.size(); ++j) {
                int c = gr.columns[j];
                (gr.row == 0 ? xv : yv)[c] = id + block[gi][j];
            }
            for (int b = 0; b < nblocks[gi]; ++b) {
                side.push_back(gr.row == 0 ? 0 : 1);
                vcol.push_back(gr.row == 0 ? m.X[gr.columns[0]] : m.Y[gr.columns[0]]);
            }
            id += nblocks[gi];
        }
        std::set<Edge> seen;
        std::vector<std::pair<Edge, LinForm>> es;
        for (int c = 0; c < q; ++c) {
            Edge e{std::min(xv[c], yv[c]), std::max(xv[c], yv[c])};
            if (!seen.insert(e).second) return;  // parallel edge
            es.push_back({e, m.E[c]});
        }
        std::sort(es.begin(), es.end());
        std::vector<Edge> edges;
        TotalColoring f;
        f.v = vcol;
        for (auto& [e, col] : es) {
            edges.push_back(e);
            f.e.push_back(col);
        }
        Graph g = Graph::make(id, edges, side);
        auto key = canonical_form_colored(g, f.v, f.e);
        found.emplace(std::move(key), RealizedGraph{std::move(g), std::move(f)});
    };

    int used_blocks = 0;
    std::function<void(int, int)> rec = [&](int gi, int j) {
        if (res.partial) return;
        if (gi == ngroups) {
            if (++res.candidates > budget) {
                res.partial = true;
                return;
            }
            emit();
            return;
        }
        const auto& gr = groups[gi];
        if (j == static_cast<int>(gr.columns.size())) {
            rec(gi + 1, 0);
            return;
        }
        // restricted growth: join an existing block or open a new one
        int remaining_groups = ngroups - gi - 1;
        for (int b = 0; b <= nblocks[gi]; ++b) {
            bool fresh = b == nblocks[gi];
            if (fresh && used_blocks + 1 + remaining_groups > max_p) continue;
            block[gi][j] = b;
            if (fresh) ++nblocks[gi], ++used_blocks;
            rec(gi, j + 1);
            if (fresh) --nblocks[gi], --used_blocks;
        }
    };
    for (int gi = 0; gi < ngroups; ++gi) block[gi].assign(groups[gi].columns.size(), 0);
    rec(0, 0);
    for (auto& [k, rg] : found) res.graphs.push_back(std::move(rg));
    return res;
}

std::string format_matrix(const TopcodeMatrix& m) {
    std::ostringstream os;
    for (const auto* row : {&m.X, &m.E, &m.Y}) {
        for (std::size_t i = 0; i < row->size(); ++i) os << (i ? " " : "") << to_string((*row)[i]);
        os << "\n";
    }
    return os.str();
}

TopcodeMatrix parse_matrix_text(const std::string& text) {
    std::istringstream is(text);
    std::vector<std::vector<LinForm>> rows;
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::vector<LinForm> row;
        std::string tok;
        while (ls >> tok) row.push_back(parse_linform(tok));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.size() != 3) throw Error("parse-error", "matrix text needs exactly three rows");
    TopcodeMatrix m{rows[0], rows[1], rows[2]};
    m.check();
    return m;
}

}  // namespace topocode
