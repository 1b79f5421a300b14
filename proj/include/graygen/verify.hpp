#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "graygen/permutation.hpp"

namespace graygen {

enum class OracleMatch { matched, mismatched, skipped };

// Outcome of the structural checks on an ordered list of permutations.
// `pass` reflects the bound/duplicate/oracle checks that were actually
// requested; `details` carries up to a handful of human-readable notes for
// the failures (first offending pairs, missing/extra elements, ...).
struct GrayReport {
  std::size_t count = 0;
  int max_adjacent_distance = 0;
  int circular_distance = -1;  // -1 when the wrap pair was not checked
  std::size_t duplicates = 0;
  OracleMatch oracle_match = OracleMatch::skipped;
  bool pass = true;
  std::vector<std::string> details;
};

// Every permutation of 1..n that avoids all given patterns, in
// lexicographic order.  A deliberately naive filter of all n! candidates,
// used as ground truth for the generators.  Guarded by a cap (default
// n <= 8, i.e. 40320 candidates); pass allow_large to lift it knowingly.
[[nodiscard]] std::vector<Permutation> brute_force_avoiders(
    const std::vector<Pattern>& patterns, int n, bool allow_large = false);

// Checks the Gray property: every adjacent pair (and the last/first pair
// when circular) within max_dist, and no duplicate entries.  Throws on an
// empty or ragged list.
[[nodiscard]] GrayReport check_gray(const PermutationList& list, int max_dist,
                                    bool circular);

// Checks that the list is exactly the avoider set for the patterns: no
// duplicates, nothing missing, nothing extra (compared against
// brute_force_avoiders; lists at most 10 missing/extra entries).
[[nodiscard]] GrayReport check_complete(const PermutationList& list,
                                        const std::vector<Pattern>& patterns,
                                        bool allow_large = false);

// True iff b differs from a in 2..4 positions and the displaced values are
// carried one step around the cycle of changed positions, in either
// direction (the only move shapes the distance-4 list performs).
[[nodiscard]] bool is_cyclic_rotation_delta(const Permutation& a,
                                            const Permutation& b);

}  // namespace graygen
