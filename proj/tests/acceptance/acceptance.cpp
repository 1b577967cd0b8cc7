#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "reference_data.hpp"
#include "topocode/combinatorics.hpp"
#include "topocode/constructors.hpp"
#include "topocode/groups.hpp"
#include "topocode/keystrings.hpp"

using namespace topocode;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

const std::vector<Family>& six_families() {
    static const std::vector<Family> f = {Family::graceful,        Family::harmonious,
                                          Family::edge_difference, Family::edge_magic,
                                          Family::felicitous_difference, Family::graceful_difference};
    return f;
}

Graph random_tree_seeded(std::uint64_t seed, int min_n, int max_n) {
    Rng rng(seed);
    int n = static_cast<int>(rng.range(min_n, max_n));
    return random_tree(n, rng);
}

Outcome exact_strings() {
    auto t0 = Clock::now();
    std::string a = string_from_matrix(ref::g2_matrix(), OrderSpec::rowmajor());
    std::string b = string_from_matrix(evaluate(ref::h2_matrix(), 7, 5), OrderSpec::rowmajor());
    double ms = ms_since(t0);
    std::ostringstream os;
    os << "G2 " << (a == ref::g2_string ? "ok" : "got " + a) << ", H2(7,5) " << (b == ref::h2_string_7_5 ? "ok" : "got " + b)
       << ", " << ms << " ms";
    return {a == ref::g2_string && b == ref::h2_string_7_5 && ms < 1.0, os.str()};
}

Outcome parameter_instantiation() {
    TopcodeMatrix p = parameterize(ref::base22());
    bool same_form = p == ref::param22();
    IntMatrix at = evaluate(p, 1, 2);
    bool ok = same_form && at == ref::example11();
    return {ok, std::string("parameterized form ") + (same_form ? "matches" : "differs") + ", (1,2) instance " +
                    (at == ref::example11() ? "matches" : "differs")};
}

Outcome constructor_soundness() {
    auto t0 = Clock::now();
    const std::vector<std::pair<std::int64_t, std::int64_t>> points = {{1, 1}, {1, 2}, {3, 2}};
    int checks = 0, failures = 0;
    std::string first;
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        Graph t = random_tree_seeded(seed, 2, 14);
        Rng rng(seed * 7919);
        ChoiceVector ch(choice_length(t));
        for (auto& b : ch) b = rng.coin();
        for (Family fam : six_families()) {
            ColoredGraph cg = tree_kd_coloring(t, fam, ch);
            const int q = cg.graph.q();
            FamilySpec spec;
            spec.family = fam;
            auto run = [&](const Params& p, std::vector<LinForm> expected) {
                ++checks;
                VerifyReport rep = verify(cg.graph, cg.coloring, spec, p);
                std::sort(expected.begin(), expected.end());
                // Independent recomputation of the edge set from the coloring.
                std::vector<LinForm> got;
                for (const auto& e : cg.coloring.e)
                    got.push_back(p.symbolic ? e : LinForm::plain(e.eval(p.k, p.d)));
                std::sort(got.begin(), got.end());
                if (!rep.pass || got != expected) {
                    ++failures;
                    if (first.empty())
                        first = family_name(fam) + " seed " + std::to_string(seed) +
                                (rep.pass ? " edge set" : " verify: " + rep.violations.front().reason);
                }
            };
            std::vector<LinForm> sym;
            for (int i = 0; i < q; ++i) sym.push_back(LinForm(1, i));
            run(Params::sym(), sym);
            for (auto [k0, d0] : points) {
                std::vector<LinForm> conc;
                for (int i = 0; i < q; ++i) conc.push_back(LinForm::plain(k0 + i * d0));
                run(Params::at(k0, d0), conc);
            }
        }
    }
    double s = ms_since(t0) / 1000.0;
    std::ostringstream os;
    os << checks << " checks, " << failures << " failures, " << s << " s";
    if (!first.empty()) os << "; first: " << first;
    return {failures == 0 && s < 60.0, os.str()};
}

int diameter_by_bfs(const Graph& t) {
    auto adj = t.adjacency();
    int best = 0;
    for (int s = 0; s < t.p; ++s) {
        std::vector<int> dist(t.p, -1);
        std::vector<int> queue = {s};
        dist[s] = 0;
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (int w : adj[queue[i]])
                if (dist[w] < 0) dist[w] = dist[queue[i]] + 1, queue.push_back(w);
        best = std::max(best, *std::max_element(dist.begin(), dist.end()));
    }
    return best;
}

Outcome multiplicity() {
    int trees = 0, failures = 0;
    std::string first;
    for (int D = 4; D <= 7; ++D) {
        std::vector<Graph> sample = {path_graph(D + 1)};
        for (std::uint64_t seed = 1; sample.size() < 12 && seed < 20000; ++seed) {
            Graph t = random_tree_seeded(seed * 31 + D, D + 1, D + 6);
            if (diameter_by_bfs(t) == D) sample.push_back(t);
        }
        const int m = (D + 1) / 2 - 1;
        for (const Graph& t : sample) {
            ++trees;
            const int L = choice_length(t);
            std::set<TotalColoring> distinct;
            for (int mask = 0; mask < (1 << L); ++mask) {
                ChoiceVector ch(L);
                for (int i = 0; i < L; ++i) ch[i] = (mask >> i) & 1;
                ColoredGraph cg = tree_kd_coloring(t, Family::graceful, ch);
                FamilySpec spec;
                if (!verify(cg.graph, cg.coloring, spec, Params::sym()).pass) ++failures;
                distinct.insert(cg.coloring);
            }
            if (static_cast<int>(distinct.size()) < (1 << m)) {
                ++failures;
                if (first.empty())
                    first = "D=" + std::to_string(D) + " p=" + std::to_string(t.p) + " gave " +
                            std::to_string(distinct.size()) + " < " + std::to_string(1 << m);
            }
        }
    }
    return {failures == 0, std::to_string(trees) + " trees, " + std::to_string(failures) + " failures" +
                               (first.empty() ? "" : "; first: " + first)};
}

// Set-ordered graceful (k,d)-colorings from seeded random trees.
std::vector<ColoredGraph> set_ordered_corpus(int count, std::uint64_t salt) {
    std::vector<ColoredGraph> out;
    for (std::uint64_t seed = 1; static_cast<int>(out.size()) < count; ++seed) {
        Graph t = random_tree_seeded(seed * 1000003 + salt, 2, 12);
        SetOrderedSearch s = find_set_ordered_graceful(t, 2'000'000, 0);
        if (s.status != SearchStatus::found) continue;
        out.push_back({s.graph, s.labeling});
    }
    return out;
}

Outcome equivalence_constants() {
    int failures = 0, checks = 0;
    std::string first;
    for (const ColoredGraph& base : set_ordered_corpus(100, 5)) {
        const Graph& g = base.graph;
        TotalColoring f = kd_from_labeling(g, base.coloring);
        const int q = g.q();
        LinForm maxX(0, -1), minY(1, 1'000'000);
        for (int v = 0; v < g.p; ++v) {
            if (g.side[v] == 0) maxX = std::max(maxX, f.v[v]);
            else minY = std::min(minY, f.v[v]);
        }
        const LinForm two_k_q(2, q - 1);
        const std::map<Family, std::optional<LinForm>> expected = {
            {Family::edge_magic, two_k_q + maxX},
            {Family::edge_difference, two_k_q},
            {Family::graceful_difference, LinForm(0, 0)},
            {Family::felicitous_difference, minY - LinForm::K()},
            {Family::harmonious, std::nullopt},
            {Family::edge_antimagic, std::nullopt}};
        for (const auto& [fam, want] : expected) {
            ++checks;
            Derived dv = derive_equivalent(g, f, fam);
            FamilySpec spec;
            spec.family = fam;
            VerifyReport rep = verify(g, dv.coloring, spec, Params::sym());
            bool ok = rep.pass;
            if (want) ok = ok && dv.constant == want && rep.constant_found == want;
            if (!ok) {
                ++failures;
                if (first.empty()) first = family_name(fam) + " q=" + std::to_string(q);
            }
        }
    }
    return {failures == 0, std::to_string(checks) + " derivations, " + std::to_string(failures) + " failures" +
                               (first.empty() ? "" : "; first: " + first)};
}

Outcome rla_constants() {
    int failures = 0, checks = 0;
    std::string first;
    auto corpus = set_ordered_corpus(100, 11);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const ColoredGraph& base = corpus[i];
        const Graph& g = base.graph;
        std::int64_t maxX = -1, minY = 1 << 30;
        for (int v = 0; v < g.p; ++v) {
            if (g.side[v] == 0) maxX = std::max(maxX, base.coloring.v[v].d);
            else minY = std::min(minY, base.coloring.v[v].d);
        }
        Rng rng(i + 77);
        LeafPlan plan = random_leaf_plan(g, static_cast<int>(rng.range(1, 6)), i + 77);
        const std::int64_t m = plan.total(), q = g.q();
        const std::int64_t M_ed = q + minY - maxX;
        const std::map<Family, LinForm> expected = {
            {Family::graceful_difference, LinForm(0, minY - maxX - 1)},
            {Family::edge_difference, LinForm(2, -2) + LinForm(0, M_ed + m)},
            {Family::felicitous_difference, LinForm(0, maxX + m)},
            {Family::edge_magic, LinForm(2, maxX + q + 2 * m - 1)}};
        for (const auto& [fam, want] : expected) {
            ++checks;
            RlaResult r = rla(g, base.coloring, plan, fam);
            FamilySpec spec;
            spec.family = fam;
            VerifyReport rep = verify(r.graph, r.coloring, spec, Params::sym());
            if (!(rep.pass && r.constant == want && rep.constant_found == want)) {
                ++failures;
                if (first.empty())
                    first = family_name(fam) + " expected " + to_string(want) + " got " + to_string(r.constant);
            }
        }
    }
    return {failures == 0, std::to_string(checks) + " constructions, " + std::to_string(failures) + " failures" +
                               (first.empty() ? "" : "; first: " + first)};
}

std::int64_t rep_mod(std::int64_t v, std::int64_t M) { return ((v - 1) % M + M) % M + 1; }

bool group_exhaustive(const MatrixGroup& G) {
    const std::int64_t M = static_cast<std::int64_t>(G.members.size());
    for (std::int64_t z = 1; z <= M; ++z)
        for (std::int64_t i = 1; i <= M; ++i) {
            if (group_add(G, i, z, z).index != i) return false;
            for (std::int64_t j = 1; j <= M; ++j) {
                GroupOpResult s = group_add(G, i, j, z);
                if (s.index != rep_mod(i + j - z, M) || s.value != G.member(s.index)) return false;
                // Entrywise: vertex rows add as x_i + x_j - x_z modulo M.
                const IntMatrix &a = G.member(i), &b = G.member(j), &c = G.member(z);
                for (std::size_t col = 0; col < a.q(); ++col) {
                    if (s.value.X[col] != rep_mod(a.X[col] + b.X[col] - c.X[col], G.M)) return false;
                    if (s.value.Y[col] != rep_mod(a.Y[col] + b.Y[col] - c.Y[col], G.M)) return false;
                }
                if (group_sub(G, s.index, j, z).index != i) return false;
                if (group_sub(G, i, j, z).value != G.member(rep_mod(i - j + z, M))) return false;
            }
        }
    return true;
}

Outcome group_laws() {
    auto stars = ref::star_group();
    MatrixGroup G = build_every_zero_family(stars[0], 4, EdgeFn::sum);
    bool star_ok = G.members == stars && group_exhaustive(G) && check_group_laws(G);
    int families = 0, failures = 0;
    for (std::int64_t M = 2; M <= 8; ++M)
        for (EdgeFn fn : {EdgeFn::sum, EdgeFn::abs_difference})
            for (std::uint64_t seed = 1; seed <= 5; ++seed) {
                Rng rng(seed * 100 + static_cast<std::uint64_t>(M));
                IntMatrix base;
                const int q = static_cast<int>(rng.range(1, 5));
                for (int c = 0; c < q; ++c) {
                    std::int64_t x = rng.range(1, M), y = rng.range(1, M);
                    base.push({x, apply_edge_fn(fn, x, y), y});
                }
                ++families;
                MatrixGroup H = build_every_zero_family(base, M, fn);
                if (!group_exhaustive(H) || !check_group_laws(H)) ++failures;
            }
    return {star_ok && failures == 0, std::string("star family ") + (star_ok ? "ok" : "FAILED") + ", " +
                                          std::to_string(families) + " generated families, " +
                                          std::to_string(failures) + " failures"};
}

Outcome matrix_identities() {
    const IntMatrix A = ref::alg_a(), B = ref::alg_b();
    bool worked = subtract(union_sum(A, B), B) == A && unite(A, B) == ref::alg_a_union_b() &&
                  subtract(B, A) == ref::alg_b_minus_a() && intersect(A, B) == ref::alg_a_cap_b() &&
                  subtract(A, B) == ref::alg_a_minus_b() &&
                  multiset_equal(unite(A, B), union_sum(union_sum(subtract(A, B), subtract(B, A)), intersect(A, B)));
    int failures = 0;
    Rng rng(2024);
    for (int n = 0; n < 500; ++n) {
        auto random_matrix = [&] {
            IntMatrix m;
            const int q = static_cast<int>(rng.range(0, 6));
            for (int c = 0; c < q; ++c) m.push({rng.range(0, 3), rng.range(0, 3), rng.range(0, 3)});
            return m;
        };
        IntMatrix a = random_matrix(), b = random_matrix();
        bool ok = subtract(union_sum(a, b), b) == a &&
                  multiset_equal(unite(a, b), union_sum(union_sum(subtract(a, b), subtract(b, a)), intersect(a, b)));
        if (!ok) ++failures;
    }
    return {worked && failures == 0, std::string("worked pair ") + (worked ? "ok" : "FAILED") + ", 500 random pairs, " +
                                         std::to_string(failures) + " failures"};
}

Outcome set_coloring_reproduction() {
    auto ex = ref::vset_example();
    SetColoring sc = vset_coloring(ex.tree, ex.f);
    int mismatches = 0;
    for (int v = 0; v < ex.tree.p; ++v) {
        ValueSet want;
        for (int x : ex.vertex_sets[v]) want.push_back(LinForm::plain(x));
        if (sc.v[v] != make_set(want)) ++mismatches;
    }
    for (std::size_t i = 0; i < ex.edge_order.size(); ++i) {
        auto [u, v] = ex.edge_order[i];
        ValueSet want;
        for (int x : ex.edge_sets[i]) want.push_back(LinForm::plain(x));
        if (sc.e[ex.tree.edge_index(u, v)] != make_set(want)) ++mismatches;
    }
    Graph sided = with_bipartition(ex.tree);
    SetColoring lifted = lift_kd(sided, ex.f, sc, LiftMode::origin);
    auto lifted_want = ref::vset_lifted_sets();
    for (int v = 0; v < ex.tree.p; ++v)
        if (lifted.v[v] != make_set(lifted_want[v])) ++mismatches;
    Hypergraph h = extract_hypergraph(lifted, HyperScope::vertices);
    std::set<ValueSet> got(h.edges.begin(), h.edges.end()), want;
    for (const auto& s : lifted_want) want.insert(make_set(s));
    ValueSet lambda;
    for (int i = 0; i <= 4; ++i) lambda.push_back(LinForm(0, i));
    for (int i = 5; i <= 11; ++i) lambda.push_back(LinForm(1, i));
    bool hyper_ok = h.edges.size() == 12 && got == want && h.lambda == lambda && h.covers;
    return {mismatches == 0 && hyper_ok, std::to_string(mismatches) + " set mismatches, hyperedge set " +
                                             (hyper_ok ? "matches (12 sets)" : "differs")};
}

Outcome pnbsp_closed_loop() {
    int recovered = 0, false_positives = 0, cases = 0;
    std::string first;
    FamilySpec spec;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        Rng rng(seed * 4099);
        const int q = static_cast<int>(rng.range(1, 3));
        Graph t = random_tree(q + 1, rng);
        const std::int64_t k0 = rng.range(0, 9), d0 = rng.range(1, 9);
        ColoredGraph cg = tree_kd_coloring(t, Family::graceful, {});
        IntMatrix m = evaluate(canonical_order(from_colored_graph(cg.graph, cg.coloring)), k0, d0);
        std::string s = string_from_matrix(m, OrderSpec::rowmajor());
        PnbspOptions opt;
        opt.budget = 1'000'000;
        PnbspResult r = pnbsp_solve(s, q, spec, opt);
        ++cases;
        bool found = false;
        for (const auto& sol : r.solutions) {
            if (sol.matrix == m && sol.k0 == k0 && sol.d0 == d0) found = true;
            bool regen = evaluate(sol.base, sol.k0, sol.d0) == sol.matrix &&
                         string_from_matrix(sol.matrix, OrderSpec::rowmajor()) == s && !sol.graphs.empty();
            for (const auto& g : sol.graphs) {
                VerifyReport rep = verify(g.graph, g.coloring, spec, Params::at(sol.k0, sol.d0));
                regen = regen && rep.pass;
            }
            if (!regen) ++false_positives;
        }
        if (found) ++recovered;
        else if (first.empty())
            first = s + " at (" + std::to_string(k0) + "," + std::to_string(d0) + ")";
    }
    return {recovered == cases && false_positives == 0,
            std::to_string(recovered) + "/" + std::to_string(cases) + " recovered, " +
                std::to_string(false_positives) + " false positives" + (first.empty() ? "" : "; first miss: " + first)};
}

std::int64_t brute_partitions(int m, int max_part) {
    if (m == 0) return 1;
    std::int64_t total = 0;
    for (int part = std::min(m, max_part); part >= 1; --part) total += brute_partitions(m - part, part);
    return total;
}

Outcome combinatorics_oracles() {
    int mismatches = 0;
    for (int m = 0; m <= 30; ++m)
        for (int k = 1; k <= 8; ++k)
            if (count_partitions(m, k) != brute_partitions(m, k)) ++mismatches;
    int leaf_failures = 0;
    for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
        Graph t = random_tree_seeded(seed, 2, 40);
        auto deg = t.degrees();
        long long leaves = std::count(deg.begin(), deg.end(), 1), rhs = 2;
        for (int d : deg) rhs += d >= 2 ? d - 2 : 0;
        auto [a, b] = leaf_identity_sides(t);
        if (leaves != rhs || a != leaves || b != rhs) ++leaf_failures;
    }
    return {mismatches == 0 && leaf_failures == 0, std::to_string(mismatches) + " partition mismatches (m<=30, k<=8), " +
                                                       std::to_string(leaf_failures) + " leaf-identity failures in 1000 trees"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"exact string reproduction", exact_strings},
        {"parameter instantiation", parameter_instantiation},
        {"constructor soundness", constructor_soundness},
        {"2^m multiplicity of graceful colorings", multiplicity},
        {"equivalence constants", equivalence_constants},
        {"RLA constants", rla_constants},
        {"group laws", group_laws},
        {"matrix algebra identities", matrix_identities},
        {"set-coloring reproduction", set_coloring_reproduction},
        {"PNBSP closed loop", pnbsp_closed_loop},
        {"combinatorics oracles", combinatorics_oracles},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " - "
                  << o.detail << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
