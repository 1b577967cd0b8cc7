#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "topocode/coloring.hpp"
#include "topocode/combinatorics.hpp"
#include "topocode/matrix.hpp"

namespace topocode {

// Cell order for emitting a 3 x q matrix. Cells are numbered row-major:
// X row 0..q-1, E row q..2q-1, Y row 2q..3q-1.
struct OrderSpec {
    enum class Kind { rowmajor, perm, index } kind = Kind::rowmajor;
    std::vector<int> perm;
    BigInt index = 0;  // rank in the factorial number system

    static OrderSpec rowmajor() { return {}; }
    static OrderSpec permutation(std::vector<int> p) { return {Kind::perm, std::move(p), 0}; }
    static OrderSpec ranked(BigInt r) { return {Kind::index, {}, std::move(r)}; }
    static OrderSpec parse(const std::string& text);
    std::vector<int> cells(std::size_t q) const;
};

std::vector<int> unrank_permutation(std::size_t n, BigInt rank);

std::string string_from_matrix(const IntMatrix& m, const OrderSpec& order);
bool string_multiset_equal(const std::string& a, const std::string& b);

struct StringCounts {
    BigInt factorial_bound;      // (3q)!
    BigInt arrangements;         // distinct orderings of the entry multiset
    std::int64_t distinct = -1;  // distinct strings, -1 when above the enumeration limit
};
StringCounts count_strings(const IntMatrix& m, std::int64_t enumeration_limit = 1'000'000);

struct PnbspSolution {
    IntMatrix matrix;
    std::int64_t k0 = 0, d0 = 1;
    std::vector<std::int64_t> beta, gamma;  // per cell, row-major
    TopcodeMatrix base;                     // the index form
    std::vector<RealizedGraph> graphs;      // realizations passing the family check
};

struct PnbspResult {
    std::vector<PnbspSolution> solutions;  // sorted by (d0, k0, matrix)
    bool exhausted = false;
    std::int64_t work = 0;
};

struct PnbspOptions {
    std::int64_t budget = 1'000'000;
    std::int64_t max_param = 1000;
    int jobs = 1;
    int max_graphs = 16;
};

PnbspResult pnbsp_solve(const std::string& s, int q, const FamilySpec& family, const PnbspOptions& opt = {});

struct StringGroupResult {
    std::string value;
    std::int64_t index = 0;
};
StringGroupResult string_group_op(const std::vector<std::string>& S, std::int64_t i, std::int64_t j,
                                  std::int64_t zero, std::int64_t M, bool add);

}  // namespace topocode
