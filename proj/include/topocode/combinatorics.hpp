#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "topocode/graph.hpp"

namespace topocode {

using BigInt = boost::multiprecision::cpp_int;

// Partitions of m into parts of size at most k via A(m,k)=A(m,k-1)+A(m-k,k),
// with A(0,k)=1 and A(m,0)=0 for m>0.
BigInt count_partitions(int m, int k);
BigInt factorial(int n);

// n1 == 2 + sum_{d>=2} (d-2) n_d; returns both sides.
std::pair<long long, long long> leaf_identity_sides(const Graph& t);

}  // namespace topocode
