#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "graygen/permutation.hpp"

namespace graygen {

// A pattern set whose generating tree is "regular": every permutation
// avoiding the set keeps at least two active sites, the active sites are
// right justified, and the number of active sites of a child depends only
// on which active site was used (i) and how many the parent had (k).  That
// dependence is the succession function chi.
struct SuccessionRule {
  std::string name;             // catalog key, e.g. "321" or "avoid_c"
  int p = 0;                    // parameter for the parameterized classes, else 0
  std::vector<Pattern> patterns;
  std::function<int(int, int)> chi;  // chi(i, k)
};

// Names of the built-in rules.  The avoid_* entries take a parameter p >= 2;
// everything else is fixed.
[[nodiscard]] std::vector<std::string> catalog_names();

// Looks up a rule by name, instantiating the pattern set.  p must be >= 2
// for the parameterized classes and omitted (0) for the fixed ones; throws
// std::invalid_argument otherwise or for unknown names.
[[nodiscard]] SuccessionRule make_rule(std::string_view name, int p = 0);

// Inserts the value len+1 into one of the len+1 gaps of perm.  Sites are
// numbered right to left: site 1 appends, site len+1 prepends.
[[nodiscard]] Permutation insert_at_site(const Permutation& perm, int site);

struct GenStats {
  std::uint64_t calls = 0;    // recursive invocations, root included
  std::uint64_t outputs = 0;  // leaves emitted
};

// Depth-first generation of all length-n avoiders of rule.patterns in tree
// order: from a node of size s with k active sites, child 1 appends s+1 and
// child i+1 follows from child i by one adjacent transposition; child i
// recurses with chi(i, k).  Work per output is constant amortized because
// every internal node has at least two children.
void gen_avoid(const SuccessionRule& rule, int n,
               const std::function<void(const Permutation&)>& emit,
               GenStats* stats = nullptr);

[[nodiscard]] PermutationList gen_avoid_list(const SuccessionRule& rule, int n);

// The unimodal site schedule that turns the tree order into a Gray order:
// odd sites ascending, then even sites descending (1,3,...,4,2).  Starts
// with 1, ends with 2 for k >= 2, and consecutive entries differ by <= 2.
[[nodiscard]] std::vector<int> l_sequence(int k);

struct DirectedPermutation {
  Permutation perm;
  bool up = true;
  int k = 2;  // active-site count
};

// Children of a node in Gray order.  An up node visits sites in l_sequence
// order, the first child up and the rest down; a down node yields the same
// children reversed with every direction flipped.
[[nodiscard]] std::vector<DirectedPermutation> successors(
    const DirectedPermutation& node, const SuccessionRule& rule);

struct CList {
  std::string class_name;
  int n = 0;
  std::vector<DirectedPermutation> entries;
};

// Level-by-level expansion from the root (1)^up: the order-n Gray code list
// for the rule's class.  Adjacent permutations differ in at most five
// positions, adjacent siblings in at most three; the list starts at
// 1,2,...,n, ends at 2,1,3,...,n, and is circular with wrap distance 2.
[[nodiscard]] CList build_c_list(const SuccessionRule& rule, int n);

}  // namespace graygen
