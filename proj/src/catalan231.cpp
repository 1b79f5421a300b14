#include "graygen/catalan231.hpp"

#include <stdexcept>
#include <utility>

namespace graygen {

namespace {

// Catalan numbers as plain integers for loop bounds; list sizes that fit in
// memory fit comfortably in long long.
std::vector<long long> catalan_counts(int n) {
  std::vector<long long> c(static_cast<std::size_t>(n) + 1);
  c[0] = 1;
  for (int m = 1; m <= n; ++m)
    c[static_cast<std::size_t>(m)] =
        c[static_cast<std::size_t>(m - 1)] * 2 * (2 * m - 1) / (m + 1);
  return c;
}

// Emits the order-n list given the materialized lists of all lower orders.
//
// Each entry is tau . n . (sigma + (i-1)) where tau runs over the order
// (i-1) list and sigma over the order (n-i) list.  Direction bookkeeping:
// tau's list is scanned forwards when tau_fwd is set, and flips once per i;
// sigma's list flips after every completed tau step.  The starting parities
// (n mod 2 for tau, backwards for sigma) make consecutive entries agree
// everywhere except in a short cyclic rotation, which is what bounds the
// Hamming distance by 4.
void emit_level(int n, const std::vector<PermutationList>& lower,
                const std::vector<long long>& counts,
                const std::function<void(const Permutation&)>& emit) {
  Permutation row(static_cast<std::size_t>(n));
  bool tau_fwd = (n % 2 == 1);
  bool sigma_fwd = false;
  for (int i = 1; i <= n; ++i) {
    const PermutationList& taus = lower[static_cast<std::size_t>(i - 1)];
    const PermutationList& sigmas = lower[static_cast<std::size_t>(n - i)];
    const long long tcount = counts[static_cast<std::size_t>(i - 1)];
    const long long scount = counts[static_cast<std::size_t>(n - i)];
    for (long long j = 0; j < tcount; ++j) {
      const Permutation& tau =
          taus[static_cast<std::size_t>(tau_fwd ? j : tcount - 1 - j)];
      for (std::size_t t = 0; t < tau.size(); ++t) row[t] = tau[t];
      row[static_cast<std::size_t>(i - 1)] = n;
      for (long long k = 0; k < scount; ++k) {
        const Permutation& sigma =
            sigmas[static_cast<std::size_t>(sigma_fwd ? k : scount - 1 - k)];
        for (std::size_t t = 0; t < sigma.size(); ++t)
          row[static_cast<std::size_t>(i) + t] = sigma[t] + (i - 1);
        emit(row);
      }
      sigma_fwd = !sigma_fwd;
    }
    tau_fwd = !tau_fwd;
  }
}

std::vector<PermutationList> build_lower_levels(int top) {
  std::vector<PermutationList> levels;
  levels.reserve(static_cast<std::size_t>(top));
  levels.push_back({Permutation{}});  // order 0: the empty permutation
  if (top == 0) return levels;
  levels.push_back({Permutation{1}});
  const auto counts = catalan_counts(top);
  for (int m = 2; m < top; ++m) {
    PermutationList list;
    list.reserve(static_cast<std::size_t>(counts[static_cast<std::size_t>(m)]));
    emit_level(m, levels, counts,
               [&list](const Permutation& p) { list.push_back(p); });
    levels.push_back(std::move(list));
  }
  return levels;
}

void require_nonnegative(int n) {
  if (n < 0) throw std::invalid_argument("list order must be >= 0");
}

}  // namespace

void stream_d_list(int n, const std::function<void(const Permutation&)>& emit) {
  require_nonnegative(n);
  if (n == 0) {
    emit(Permutation{});
    return;
  }
  if (n == 1) {
    emit(Permutation{1});
    return;
  }
  const auto levels = build_lower_levels(n);
  emit_level(n, levels, catalan_counts(n), emit);
}

PermutationList build_d_list(int n) {
  PermutationList list;
  stream_d_list(n, [&list](const Permutation& p) { list.push_back(p); });
  return list;
}

namespace {

// 231 is generated directly; each other length-3 pattern is reached from it
// by a distance-preserving symmetry.
Symmetry symmetry_for(const Pattern& pattern, bool& identity) {
  identity = false;
  if (pattern == Pattern{2, 3, 1}) {
    identity = true;
    return Symmetry::reverse;  // unused
  }
  if (pattern == Pattern{1, 3, 2}) return Symmetry::reverse;
  if (pattern == Pattern{2, 1, 3}) return Symmetry::complement;
  if (pattern == Pattern{3, 1, 2}) return Symmetry::reverse_complement;
  throw std::invalid_argument(
      "pattern must be one of 231, 132, 213, 312 (as one-line permutations)");
}

}  // namespace

void stream_pattern3_list(const Pattern& pattern, int n,
                          const std::function<void(const Permutation&)>& emit) {
  bool identity = false;
  const Symmetry op = symmetry_for(pattern, identity);
  if (identity) {
    stream_d_list(n, emit);
    return;
  }
  stream_d_list(n, [&](const Permutation& p) { emit(transform(p, op)); });
}

PermutationList build_pattern3_list(const Pattern& pattern, int n) {
  PermutationList list;
  stream_pattern3_list(pattern, n,
                       [&list](const Permutation& p) { list.push_back(p); });
  return list;
}

std::vector<int> d_successor_delta(int n, std::size_t q) {
  const PermutationList list = build_d_list(n);
  if (q < 1 || q >= list.size())
    throw std::invalid_argument("successor index out of range");
  return delta_positions(list[q - 1], list[q]);
}

}  // namespace graygen
