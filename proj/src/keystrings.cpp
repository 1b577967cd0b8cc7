#include "topocode/keystrings.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace topocode {

using i64 = std::int64_t;

std::vector<int> unrank_permutation(std::size_t n, BigInt rank) {
    if (rank < 0 || rank >= factorial(static_cast<int>(n))) throw Error("invalid-order", "permutation rank out of range");
    std::vector<int> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<int>(i);
    std::vector<int> out;
    for (std::size_t i = n; i > 0; --i) {
        BigInt f = factorial(static_cast<int>(i - 1));
        BigInt digit = rank / f;
        rank %= f;
        auto pos = static_cast<std::size_t>(digit);
        out.push_back(pool[pos]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pos));
    }
    return out;
}

OrderSpec OrderSpec::parse(const std::string& text) {
    if (text == "rowmajor") return rowmajor();
    if (text.rfind("perm:", 0) == 0) {
        std::vector<int> p;
        std::stringstream ss(text.substr(5));
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                std::size_t used = 0;
                int v = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                p.push_back(v);
            } catch (const std::logic_error&) {
                throw Error("invalid-order", "bad permutation entry '" + tok + "'");
            }
        }
        return permutation(std::move(p));
    }
    if (text.rfind("index:", 0) == 0) {
        const std::string digits = text.substr(6);
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw Error("invalid-order", "bad permutation index");
        return ranked(BigInt(digits));
    }
    throw Error("invalid-order", "expected rowmajor, perm:<csv> or index:<n>");
}

std::vector<int> OrderSpec::cells(std::size_t q) const {
    const std::size_t n = 3 * q;
    if (kind == Kind::rowmajor) {
        std::vector<int> c(n);
        for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<int>(i);
        return c;
    }
    if (kind == Kind::index) return unrank_permutation(n, index);
    std::vector<bool> seen(n, false);
    if (perm.size() != n) throw Error("invalid-order", "permutation must list all 3q cells");
    for (int c : perm) {
        if (c < 0 || static_cast<std::size_t>(c) >= n || seen[c]) throw Error("invalid-order", "not a bijection");
        seen[c] = true;
    }
    return perm;
}

std::string string_from_matrix(const IntMatrix& m, const OrderSpec& order) {
    m.check();
    const std::size_t q = m.q();
    std::vector<i64> flat;
    for (const auto* row : {&m.X, &m.E, &m.Y})
        for (i64 v : *row) {
            if (v < 0) throw Error("negative-entry", "strings need nonnegative entries");
            flat.push_back(v);
        }
    std::string s;
    for (int c : order.cells(q)) s += std::to_string(flat[c]);
    return s;
}

bool string_multiset_equal(const std::string& a, const std::string& b) {
    std::string x = a, y = b;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
}

StringCounts count_strings(const IntMatrix& m, i64 enumeration_limit) {
    std::vector<std::string> tok;
    for (const auto* row : {&m.X, &m.E, &m.Y})
        for (i64 v : *row) {
            if (v < 0) throw Error("negative-entry", "strings need nonnegative entries");
            tok.push_back(std::to_string(v));
        }
    StringCounts c;
    c.factorial_bound = factorial(static_cast<int>(tok.size()));
    std::map<std::string, int> mult;
    for (const auto& t : tok) ++mult[t];
    c.arrangements = c.factorial_bound;
    for (const auto& [t, n] : mult) c.arrangements /= factorial(n);
    if (c.arrangements <= enumeration_limit) {
        std::sort(tok.begin(), tok.end());
        std::unordered_set<std::string> seen;
        do {
            std::string s;
            for (const auto& t : tok) s += t;
            seen.insert(std::move(s));
        } while (std::next_permutation(tok.begin(), tok.end()));
        c.distinct = static_cast<i64>(seen.size());
    }
    return c;
}

namespace {

enum class EdgeSetKind { arith, odd };

EdgeSetKind edge_kind(Family f) {
    switch (f) {
        case Family::graceful:
        case Family::harmonious:
        case Family::edge_magic:
        case Family::edge_difference:
        case Family::graceful_difference:
        case Family::felicitous_difference:
            return EdgeSetKind::arith;
        case Family::odd_graceful:
        case Family::odd_elegant:
            return EdgeSetKind::odd;
        default:
            throw Error("unsupported-family", "string reconstruction does not support " + family_name(f));
    }
}

// Parameter-free column rule used to prune the Y row early.
bool column_ok(Family f, i64 x, i64 e, i64 y, std::optional<i64>& constant) {
    auto same = [&](i64 c) {
        if (!constant) constant = c;
        return *constant == c;
    };
    switch (f) {
        case Family::graceful:
        case Family::odd_graceful: return e == std::abs(y - x);
        case Family::edge_magic: return same(x + e + y);
        case Family::edge_difference: return same(e + std::abs(y - x));
        case Family::graceful_difference: return same(std::abs(std::abs(y - x) - e));
        case Family::felicitous_difference: return same(std::abs(x + y - e));
        default: return true;
    }
}

struct Task {
    const std::string* s;
    int q;
    FamilySpec fam;
    PnbspOptions opt;
    i64 budget;
    i64 work = 0;
    bool exhausted = false;
    std::vector<i64> vals;
    std::vector<std::pair<i64, i64>> params;
    std::vector<PnbspSolution> out;

    bool tick() {
        if (++work > budget) exhausted = true;
        return !exhausted;
    }

    void candidate_params() {
        params.clear();
        const int q_ = q;
        std::vector<i64> E(vals.begin() + q_, vals.begin() + 2 * q_);
        std::sort(E.begin(), E.end());
        const EdgeSetKind kind = edge_kind(fam.family);
        auto accept = [&](i64 k0, i64 d0) {
            if (k0 < 0 || d0 < 1 || k0 > opt.max_param || d0 > opt.max_param) return;
            for (int i = 0; i < q_; ++i) {
                i64 want = kind == EdgeSetKind::arith ? k0 + i * d0
                                                      : k0 + (fam.odd_alt ? 2 * i : 2 * i + 1) * d0;
                if (E[i] != want) return;
            }
            for (int i = 0; i < q_; ++i)
                if (vals[i] % d0 != 0) return;
            params.emplace_back(k0, d0);
        };
        if (q_ >= 2) {
            i64 gap = E[1] - E[0];
            if (kind == EdgeSetKind::arith) accept(E[0], gap);
            else if (gap % 2 == 0) accept(fam.odd_alt ? E[0] : E[0] - gap / 2, gap / 2);
        } else {
            for (i64 d0 = 1; d0 <= opt.max_param; ++d0)
                accept(kind == EdgeSetKind::arith || fam.odd_alt ? E[0] : E[0] - d0, d0);
        }
    }

    void finish() {
        for (auto [k0, d0] : params) {
            if (!tick()) return;
            PnbspSolution sol;
            sol.k0 = k0;
            sol.d0 = d0;
            bool ok = true;
            for (int c = 0; c < 3 * q && ok; ++c) {
                i64 v = vals[c];
                if (c < q) {
                    sol.beta.push_back(0);
                    sol.gamma.push_back(v / d0);
                } else {
                    if (v < k0 || (v - k0) % d0 != 0) ok = false;
                    sol.beta.push_back(1);
                    sol.gamma.push_back(ok ? (v - k0) / d0 : 0);
                }
            }
            if (!ok) continue;
            for (int i = 0; i < q; ++i) {
                sol.matrix.push({vals[i], vals[q + i], vals[2 * q + i]});
                sol.base.push({LinForm(0, sol.gamma[i]), LinForm(1, sol.gamma[q + i]), LinForm(1, sol.gamma[2 * q + i])});
            }
            if (string_from_matrix(sol.matrix, OrderSpec::rowmajor()) != *s) continue;
            auto realized = graphs_from_matrix(sol.base, 2 * q, std::max<i64>(1000, budget - work));
            for (auto& rg : realized.graphs) {
                FamilySpec spec = fam;
                if (verify(rg.graph, rg.coloring, spec, Params::sym()).pass) {
                    sol.graphs.push_back(std::move(rg));
                    if (static_cast<int>(sol.graphs.size()) >= opt.max_graphs) break;
                }
            }
            if (!sol.graphs.empty()) out.push_back(std::move(sol));
        }
    }

    void rec(std::size_t pos, int j, std::optional<i64> constant) {
        if (exhausted || !tick()) return;
        const int total = 3 * q;
        const std::size_t n = s->size();
        if (j == total) {
            if (pos == n) finish();
            return;
        }
        const std::size_t rem_segs = static_cast<std::size_t>(total - j);
        if (n - pos < rem_segs || n - pos > 18 * rem_segs) return;
        const std::size_t max_len = (*s)[pos] == '0' ? 1 : std::min<std::size_t>(18, n - pos - (rem_segs - 1));
        for (std::size_t len = 1; len <= max_len; ++len) {
            i64 v = std::stoll(s->substr(pos, len));
            vals.push_back(v);
            std::optional<i64> c = constant;
            bool ok = true;
            if (j == 2 * q - 1) {
                candidate_params();
                ok = !params.empty();
            } else if (j >= 2 * q) {
                const int col = j - 2 * q;
                ok = column_ok(fam.family, vals[col], vals[q + col], v, c);
            }
            if (ok) rec(pos + len, j + 1, c);
            vals.pop_back();
            if (exhausted) return;
        }
    }
};

}  // namespace

PnbspResult pnbsp_solve(const std::string& s, int q, const FamilySpec& family, const PnbspOptions& opt) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw Error("domain-error", "the string must be nonempty decimal digits");
    if (q < 1 || q > 4) throw Error("domain-error", "q must be in 1..4");
    edge_kind(family.family);
    const std::size_t max_first = s[0] == '0' ? 1 : std::min<std::size_t>(18, s.size());
    const int ntasks = static_cast<int>(max_first);
    std::vector<Task> tasks(ntasks);
    const i64 share = std::max<i64>(1, opt.budget / ntasks);
    for (auto& t : tasks) {
        t.s = &s;
        t.q = q;
        t.fam = family;
        t.opt = opt;
        t.budget = share;
    }

    auto run = [&](int t) {
        Task& task = tasks[t];
        const std::size_t len = static_cast<std::size_t>(t) + 1;
        if (3 * q == 1 && len != s.size()) return;
        if (s.size() - len < static_cast<std::size_t>(3 * q - 1)) return;
        task.vals.push_back(std::stoll(s.substr(0, len)));
        task.rec(len, 1, std::nullopt);
    };
    const int jobs = std::max(1, std::min(opt.jobs, ntasks));
    if (jobs == 1) {
        for (int t = 0; t < ntasks; ++t) run(t);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w)
            pool.emplace_back([&] {
                for (int t = next++; t < ntasks; t = next++) run(t);
            });
        for (auto& th : pool) th.join();
    }

    PnbspResult res;
    for (auto& t : tasks) {
        res.work += t.work;
        res.exhausted = res.exhausted || t.exhausted;
        for (auto& sol : t.out) res.solutions.push_back(std::move(sol));
    }
    std::sort(res.solutions.begin(), res.solutions.end(), [](const PnbspSolution& a, const PnbspSolution& b) {
        return std::tie(a.d0, a.k0, a.matrix) < std::tie(b.d0, b.k0, b.matrix);
    });
    return res;
}

StringGroupResult string_group_op(const std::vector<std::string>& S, i64 i, i64 j, i64 zero, i64 M, bool add) {
    if (M < 1 || M > 10) throw Error("domain-error", "digitwise groups need 1 <= M <= 10");
    const i64 n = static_cast<i64>(S.size());
    for (i64 x : {i, j, zero})
        if (x < 1 || x > n) throw Error("domain-error", "string index out of range");
    const auto& a = S[i - 1];
    const auto& b = S[j - 1];
    const auto& z = S[zero - 1];
    if (a.size() != b.size() || a.size() != z.size()) throw Error("length-mismatch", "strings differ in length");
    auto digit = [&](char c) {
        if (c < '0' || c > '9' || c - '0' >= M) throw Error("domain-error", "digit outside [0, M-1]");
        return static_cast<i64>(c - '0');
    };
    auto mod = [&](i64 x) { return ((x % M) + M) % M; };
    StringGroupResult r;
    for (std::size_t t = 0; t < a.size(); ++t) {
        i64 v = add ? digit(a[t]) + digit(b[t]) - digit(z[t]) : digit(a[t]) - digit(b[t]) + digit(z[t]);
        r.value.push_back(static_cast<char>('0' + mod(v)));
    }
    r.index = mod((add ? i + j - zero : i - j + zero) - 1) + 1;
    return r;
}

}  // namespace topocode
