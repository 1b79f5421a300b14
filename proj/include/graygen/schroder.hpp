#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "graygen/permutation.hpp"

namespace graygen {

// A Schroder path of semilength n: a word over u (rise), d (fall), e (long
// level step) describing a lattice walk from (0,0) to (2n,0) that never
// dips below the x-axis.  u and d have width 1, e has width 2.
using PathWord = std::string;

[[nodiscard]] bool is_valid_path(std::string_view word);

// Number of u steps plus number of e steps (= half the total width).
// Throws if the word is not a valid path.
[[nodiscard]] int path_semilength(std::string_view word);

// The circular Gray code list of all Schroder paths of semilength n, in
// which consecutive paths (including last back to first) differ in at most
// five positions once level steps are split in two.  First entry e^n, last
// u e^{n-1} d.  n = 0 yields the one-element list holding the empty word.
[[nodiscard]] std::vector<PathWord> build_s_paths(int n);

void stream_s_paths(int n, const std::function<void(const PathWord&)>& emit);

// Positional Hamming distance after writing each e as two half-width level
// characters, so that all words of equal semilength compare position by
// position.  Throws on semilength mismatch.
[[nodiscard]] int path_distance(std::string_view a, std::string_view b);

// A marked lattice point strictly between a path and the x-axis.  The two
// admissible point families live at quarter-integer offsets, so integer
// coordinates are stored scaled by 4; neither family can ever touch a path
// (path heights at those abscissae always land on other residues), which
// keeps every containment test strict and exact.  The label is
// (4 + x4 - y4) / 8 and is always in 1..n.
struct Dot {
  int x4 = 0;
  int y4 = 0;
  int label = 0;
};

// All dots of the path, sorted by x4 then y4.
[[nodiscard]] std::vector<Dot> place_dots(std::string_view word);

// One maximal horizontal run of dots, read as the product of adjacent
// transpositions s_k s_{k-1} ... s_l (k = label of the run's right end,
// l ... left end, l <= k).
struct SigmaFactor {
  int k = 0;
  int l = 0;
};

// The factors in application order: repeatedly take the rightmost dot not
// yet covered (lowest first when two share an abscissa) and extend its run
// leftward dot by dot while the path stays strictly above the run's height
// over the whole closed interval.
[[nodiscard]] std::vector<SigmaFactor> sigma_decomposition(std::string_view word);

// Applies the factors in order to the given permutation.  A factor (k, l)
// cycles the entries at positions l..k+1 one place left (the entry at l
// moving to k+1), which is s_k s_{k-1} ... s_l with s_l acting first.
[[nodiscard]] Permutation apply_sigma_factors(Permutation start,
                                              const std::vector<SigmaFactor>& factors);

// The path-to-permutation bijection: the image of a path of semilength n is
// sigma_decomposition applied to (n+1, n, ..., 1), a permutation of length
// n+1 avoiding both 1243 and 2143.
[[nodiscard]] Permutation phi(std::string_view word);

// phi applied to build_s_paths(n): a Gray code list (adjacent Hamming
// distance <= 5) of all 1243- and 2143-avoiding permutations of length n+1.
[[nodiscard]] PermutationList build_phi_list(int n);

void stream_phi_list(int n, const std::function<void(const Permutation&)>& emit);

}  // namespace graygen
