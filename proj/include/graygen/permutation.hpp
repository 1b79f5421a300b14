#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace graygen {

// A permutation of {1, ..., n} stored one-indexed in a plain vector; the
// empty vector is the (unique) permutation of length 0.  Patterns are
// permutations used as containment probes.
using Permutation = std::vector<int>;
using Pattern = std::vector<int>;
using PermutationList = std::vector<Permutation>;

// True iff v holds each of 1..v.size() exactly once.
[[nodiscard]] bool is_permutation(const Permutation& v);

// "3 1 2" for {3,1,2}; the empty permutation formats as the empty string.
[[nodiscard]] std::string format_permutation(const Permutation& v);

// Parses whitespace-separated entries.  Accepts the empty/blank string as
// the empty permutation.  Throws std::invalid_argument on junk tokens or if
// the result is not a permutation of 1..n.
[[nodiscard]] Permutation parse_permutation(std::string_view text);

// True iff some subsequence of perm is order-isomorphic to patt.
// Backtracking search; fine for the short patterns (length <= 5) and
// moderate lengths this library works with.
[[nodiscard]] bool contains_pattern(const Permutation& perm, const Pattern& patt);

[[nodiscard]] bool avoids_all(const Permutation& perm,
                              const std::vector<Pattern>& patterns);

// Number of positions where a and b differ.  Throws on length mismatch.
[[nodiscard]] int hamming_distance(const Permutation& a, const Permutation& b);

// 1-indexed positions where a and b differ, ascending.
[[nodiscard]] std::vector<int> delta_positions(const Permutation& a,
                                               const Permutation& b);

enum class Symmetry { reverse, complement, reverse_complement };

// The classic symmetries of the permutation square: reverse flips positions,
// complement flips values (v -> n+1-v).  Both preserve Hamming distances,
// which is why they transport Gray codes between symmetric pattern classes.
[[nodiscard]] Permutation transform(const Permutation& v, Symmetry op);

// Swaps the entries at positions i and i+1 (1-indexed).  Throws if i is out
// of range.
void apply_adjacent_transposition(Permutation& v, int i);

}  // namespace graygen
