#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace graygen {

using BigInt = boost::multiprecision::cpp_int;

// The counting sequences realized by the generators in this library.
//
//   catalan           1, 1, 2, 5, 14, 42, ...           (n >= 0)
//   schroder          1, 2, 6, 22, 90, 394, ...         (large Schroder, n >= 0)
//   pell              0, 1, 2, 5, 12, 29, 70, ...       (n >= 0)
//   fibonacci_even    1, 1, 2, 5, 13, 34, ...           (every other Fibonacci)
//   central_binomial  C(2n, n): 1, 2, 6, 20, 70, ...
//   power_of_two      2^n
enum class CountFamily {
  catalan,
  schroder,
  pell,
  fibonacci_even,
  central_binomial,
  power_of_two,
};

// n-th term, exact.  Throws std::invalid_argument for n < 0.
[[nodiscard]] BigInt sequence_term(CountFamily family, int n);

// Terms 0..count-1 in one pass (cheaper than repeated sequence_term for the
// quadratic-recurrence families).
[[nodiscard]] std::vector<BigInt> sequence_prefix(CountFamily family, int count);

// Prefix sums of the catalan / schroder sequences with the 1-based indexing
// used by the list builders: prefix_sum(f, 1) = 0 and prefix_sum(f, i) =
// t_0 + ... + t_{i-2} for i >= 2.  Only the parity of these values matters
// downstream (it selects forward or reversed sublist traversal), but the
// exact values are exposed for testing.  Throws for other families or i < 1.
[[nodiscard]] BigInt prefix_sum(CountFamily family, int i);

}  // namespace graygen
