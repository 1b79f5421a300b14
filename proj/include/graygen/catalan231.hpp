#pragma once

#include <functional>
#include <vector>

#include "graygen/permutation.hpp"

namespace graygen {

// The distance-4 Gray code list of all 231-avoiding permutations of
// {1..n}, built by the recursive block decomposition: entries place the
// value n at each position i = 1..n in turn; the prefix runs over the list
// of order i-1 and the suffix over the (shifted) list of order n-i, each
// traversed alternately forwards and backwards so that consecutive blocks
// meet in nearby permutations.  The first entry is n,1,2,...,n-1 and the
// last is 1,2,...,n.
//
// n = 0 yields the one-element list holding the empty permutation.
[[nodiscard]] PermutationList build_d_list(int n);

// Same sequence, but entries are handed to `emit` as they are formed; only
// the lists of orders < n are kept in memory.
void stream_d_list(int n, const std::function<void(const Permutation&)>& emit);

// The Gray code list for one of the other length-3 patterns, obtained from
// build_d_list by the distance-preserving symmetry that carries 231 onto it:
// 132 by reverse, 213 by complement, 312 by reverse-complement.  `pattern`
// must be one of {1,3,2}, {2,1,3}, {3,1,2} or {2,3,1} (the identity case).
[[nodiscard]] PermutationList build_pattern3_list(const Pattern& pattern, int n);

void stream_pattern3_list(const Pattern& pattern, int n,
                          const std::function<void(const Permutation&)>& emit);

// 1-indexed positions in which entries q and q+1 of the order-n list differ
// (2 to 4 positions, forming a cyclic rotation of the moved values).
// Builds the list internally; for whole-list scans prefer build_d_list plus
// delta_positions.
[[nodiscard]] std::vector<int> d_successor_delta(int n, std::size_t q);

}  // namespace graygen
