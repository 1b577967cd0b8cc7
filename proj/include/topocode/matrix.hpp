#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "topocode/graph.hpp"
#include "topocode/linform.hpp"
#include "topocode/total_coloring.hpp"

namespace topocode {

// 3 x q matrix with rows X, E, Y; column i is (x_i, e_i, y_i).
template <class T>
struct Mat3 {
    using Col = std::array<T, 3>;
    std::vector<T> X, E, Y;

    std::size_t q() const { return E.size(); }
    Col col(std::size_t i) const { return {X[i], E[i], Y[i]}; }
    void push(const Col& c) {
        X.push_back(c[0]);
        E.push_back(c[1]);
        Y.push_back(c[2]);
    }
    std::vector<Col> cols() const {
        std::vector<Col> out;
        for (std::size_t i = 0; i < q(); ++i) out.push_back(col(i));
        return out;
    }
    static Mat3 from_cols(const std::vector<Col>& cs) {
        Mat3 m;
        for (const auto& c : cs) m.push(c);
        return m;
    }
    void check() const {
        if (X.size() != E.size() || Y.size() != E.size()) throw Error("invalid-matrix", "rows differ in length");
    }
    friend bool operator==(const Mat3&, const Mat3&) = default;
    friend auto operator<=>(const Mat3&, const Mat3&) = default;
};

using TopcodeMatrix = Mat3<LinForm>;
using IntMatrix = Mat3<std::int64_t>;

template <class T>
Mat3<T> union_sum(const Mat3<T>& a, const Mat3<T>& b) {
    Mat3<T> out = a;
    for (const auto& c : b.cols()) out.push(c);
    return out;
}

// Multiset difference: removes one column of a per matching column of b;
// unmatched columns of b are ignored.
template <class T>
Mat3<T> subtract(const Mat3<T>& a, const Mat3<T>& b) {
    std::map<typename Mat3<T>::Col, int> avail;
    for (const auto& c : b.cols()) ++avail[c];
    // The last occurrences are removed, so (a ⊎ b) ∖ b gives back a exactly.
    auto cs = a.cols();
    std::vector<typename Mat3<T>::Col> kept;
    for (auto c = cs.rbegin(); c != cs.rend(); ++c) {
        auto it = avail.find(*c);
        if (it != avail.end() && it->second > 0) --it->second;
        else kept.push_back(*c);
    }
    return Mat3<T>::from_cols({kept.rbegin(), kept.rend()});
}

template <class T>
bool is_submatrix(const Mat3<T>& small, const Mat3<T>& big) {
    return subtract(big, small).q() + small.q() == big.q();
}

template <class T>
Mat3<T> subtract_strict(const Mat3<T>& a, const Mat3<T>& b) {
    if (!is_submatrix(b, a)) throw Error("not-submatrix", "second operand is not a column sub-multiset");
    return subtract(a, b);
}

template <class T>
Mat3<T> intersect(const Mat3<T>& a, const Mat3<T>& b) {
    std::map<typename Mat3<T>::Col, int> avail;
    for (const auto& c : b.cols()) ++avail[c];
    Mat3<T> out;
    for (const auto& c : a.cols()) {
        auto it = avail.find(c);
        if (it != avail.end() && it->second > 0) {
            --it->second;
            out.push(c);
        }
    }
    return out;
}

// A followed by the columns of B not already in A.
template <class T>
Mat3<T> unite(const Mat3<T>& a, const Mat3<T>& b) {
    return union_sum(a, subtract(b, a));
}

template <class T>
bool multiset_equal(const Mat3<T>& a, const Mat3<T>& b) {
    auto x = a.cols(), y = b.cols();
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
}

// Glue a and b along a common sub-matrix h: (a \ h) followed by b.
template <class T>
Mat3<T> coincide(const Mat3<T>& a, const Mat3<T>& b, const Mat3<T>& h) {
    if (!is_submatrix(h, a) || !is_submatrix(h, b)) throw Error("not-submatrix", "h is not common to both operands");
    return union_sum(subtract(a, h), b);
}

// Inverse of coincide: the first `first_only` columns belong to the first
// operand alone, the remaining columns contain h and the rest of the second.
template <class T>
std::pair<Mat3<T>, Mat3<T>> split(const Mat3<T>& c, const Mat3<T>& h, std::size_t first_only) {
    if (first_only > c.q()) throw Error("index-out-of-range", "split point beyond matrix");
    Mat3<T> t1, rest;
    for (std::size_t i = 0; i < c.q(); ++i) (i < first_only ? t1 : rest).push(c.col(i));
    if (!is_submatrix(h, rest)) throw Error("not-submatrix", "h is not contained in the second part");
    Mat3<T> t2 = subtract(rest, h);
    return {union_sum(t1, h), union_sum(t2, h)};
}

template <class T>
Mat3<T> column_exchange(const Mat3<T>& m, std::size_t i, std::size_t j) {
    if (i >= m.q() || j >= m.q()) throw Error("index-out-of-range", "column index");
    Mat3<T> out = m;
    std::swap(out.X[i], out.X[j]);
    std::swap(out.E[i], out.E[j]);
    std::swap(out.Y[i], out.Y[j]);
    return out;
}

template <class T>
Mat3<T> line_exchange(const Mat3<T>& m, std::size_t i) {
    if (i >= m.q()) throw Error("index-out-of-range", "column index");
    Mat3<T> out = m;
    std::swap(out.X[i], out.Y[i]);
    return out;
}

// Invariant of column and line exchanges: each column as (min, e, max), sorted.
template <class T>
std::vector<typename Mat3<T>::Col> similarity_key(const Mat3<T>& m) {
    auto cs = m.cols();
    for (auto& c : cs)
        if (c[2] < c[0]) std::swap(c[0], c[2]);
    std::sort(cs.begin(), cs.end());
    return cs;
}

template <class T>
bool is_similar(const Mat3<T>& a, const Mat3<T>& b) {
    return a.q() == b.q() && similarity_key(a) == similarity_key(b);
}

// Columns sorted by (E, X, Y).
template <class T>
Mat3<T> canonical_order(const Mat3<T>& m) {
    auto cs = m.cols();
    std::sort(cs.begin(), cs.end(), [](const auto& a, const auto& b) {
        return std::tie(a[1], a[0], a[2]) < std::tie(b[1], b[0], b[2]);
    });
    return Mat3<T>::from_cols(cs);
}

TopcodeMatrix from_colored_graph(const Graph& g, const TotalColoring& f);
TopcodeMatrix unit_matrix(std::size_t q);
TopcodeMatrix parameterize(const IntMatrix& t);
IntMatrix evaluate(const TopcodeMatrix& m, std::int64_t k0, std::int64_t d0);
IntMatrix to_int_matrix(const TopcodeMatrix& m);
TopcodeMatrix to_topcode(const IntMatrix& m);
TopcodeMatrix linear_combine(const std::vector<std::int64_t>& coeffs, const std::vector<TopcodeMatrix>& mats);

struct RealizedGraph {
    Graph graph;
    TotalColoring coloring;
};

struct GraphsFromMatrix {
    std::vector<RealizedGraph> graphs;  // sorted by colored canonical form
    bool partial = false;
    std::int64_t candidates = 0;
};

// All colored graphs, up to color-preserving isomorphism, whose Topcode-matrix
// has the same columns as m. Equal values in one row may be one vertex or
// several; X-row and Y-row occurrences are never merged with each other.
GraphsFromMatrix graphs_from_matrix(const TopcodeMatrix& m, int max_p, std::int64_t budget);

std::string format_matrix(const TopcodeMatrix& m);
TopcodeMatrix parse_matrix_text(const std::string& text);

}  // namespace topocode
