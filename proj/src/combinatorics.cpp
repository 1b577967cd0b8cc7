#include "topocode/combinatorics.hpp"

#include <map>
#include <vector>

namespace topocode {

BigInt count_partitions(int m, int k) {
    if (m < 0 || k < 0) throw Error("domain-error", "partition arguments must be nonnegative");
    // table[j][i] = A(i, j), filled column by column
    std::vector<BigInt> prev(m + 1, 0);
    prev[0] = 1;  // A(i,0)
    for (int j = 1; j <= k; ++j) {
        std::vector<BigInt> cur(m + 1);
        for (int i = 0; i <= m; ++i) cur[i] = prev[i] + (i >= j ? cur[i - j] : BigInt(0));
        prev = std::move(cur);
    }
    return prev[m];
}

BigInt factorial(int n) {
    if (n < 0) throw Error("domain-error", "factorial of a negative number");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

std::pair<long long, long long> leaf_identity_sides(const Graph& t) {
    if (!t.is_tree()) throw Error("not-a-tree", "leaf identity is stated for trees");
    std::map<int, long long> hist;
    for (int d : t.degrees()) ++hist[d];
    long long rhs = 2;
    for (auto [d, n] : hist)
        if (d >= 2) rhs += static_cast<long long>(d - 2) * n;
    return {hist.count(1) ? hist[1] : 0, rhs};
}

}  // namespace topocode
