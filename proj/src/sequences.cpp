#include "graygen/sequences.hpp"

#include <stdexcept>

namespace graygen {

namespace {

std::vector<BigInt> catalan_prefix(int count) {
  std::vector<BigInt> c(static_cast<std::size_t>(count));
  if (count > 0) c[0] = 1;
  // c_{m} = c_{m-1} * 2(2m - 1) / (m + 1), an exact division.
  for (int m = 1; m < count; ++m)
    c[static_cast<std::size_t>(m)] =
        c[static_cast<std::size_t>(m - 1)] * (2 * (2 * m - 1)) / (m + 1);
  return c;
}

std::vector<BigInt> schroder_prefix(int count) {
  // r_0 = 1, r_m = r_{m-1} + sum_{k=1..m} r_{k-1} r_{m-k}.
  std::vector<BigInt> r(static_cast<std::size_t>(count));
  if (count > 0) r[0] = 1;
  for (int m = 1; m < count; ++m) {
    BigInt acc = r[static_cast<std::size_t>(m - 1)];
    for (int k = 1; k <= m; ++k)
      acc += r[static_cast<std::size_t>(k - 1)] * r[static_cast<std::size_t>(m - k)];
    r[static_cast<std::size_t>(m)] = acc;
  }
  return r;
}

std::vector<BigInt> linear_recurrence_prefix(int count, BigInt t0, BigInt t1,
                                             int mul1, int mul0) {
  // t_m = mul1 * t_{m-1} + mul0 * t_{m-2}
  std::vector<BigInt> t(static_cast<std::size_t>(count));
  if (count > 0) t[0] = std::move(t0);
  if (count > 1) t[1] = std::move(t1);
  for (int m = 2; m < count; ++m)
    t[static_cast<std::size_t>(m)] = mul1 * t[static_cast<std::size_t>(m - 1)] +
                                     mul0 * t[static_cast<std::size_t>(m - 2)];
  return t;
}

std::vector<BigInt> central_binomial_prefix(int count) {
  // C(2m, m) = C(2m-2, m-1) * 2(2m - 1) / m, exact.
  std::vector<BigInt> t(static_cast<std::size_t>(count));
  if (count > 0) t[0] = 1;
  for (int m = 1; m < count; ++m)
    t[static_cast<std::size_t>(m)] =
        t[static_cast<std::size_t>(m - 1)] * (2 * (2 * m - 1)) / m;
  return t;
}

std::vector<BigInt> power_of_two_prefix(int count) {
  std::vector<BigInt> t(static_cast<std::size_t>(count));
  if (count > 0) t[0] = 1;
  for (int m = 1; m < count; ++m)
    t[static_cast<std::size_t>(m)] = t[static_cast<std::size_t>(m - 1)] * 2;
  return t;
}

}  // namespace

std::vector<BigInt> sequence_prefix(CountFamily family, int count) {
  if (count < 0) throw std::invalid_argument("sequence_prefix: negative count");
  switch (family) {
    case CountFamily::catalan:
      return catalan_prefix(count);
    case CountFamily::schroder:
      return schroder_prefix(count);
    case CountFamily::pell:
      return linear_recurrence_prefix(count, 0, 1, 2, 1);
    case CountFamily::fibonacci_even:
      return linear_recurrence_prefix(count, 1, 1, 3, -1);
    case CountFamily::central_binomial:
      return central_binomial_prefix(count);
    case CountFamily::power_of_two:
      return power_of_two_prefix(count);
  }
  throw std::invalid_argument("sequence_prefix: unknown family");
}

BigInt sequence_term(CountFamily family, int n) {
  if (n < 0) throw std::invalid_argument("sequence_term: negative index");
  return sequence_prefix(family, n + 1).back();
}

BigInt prefix_sum(CountFamily family, int i) {
  if (family != CountFamily::catalan && family != CountFamily::schroder)
    throw std::invalid_argument("prefix_sum: only catalan/schroder have one");
  if (i < 1) throw std::invalid_argument("prefix_sum: index must be >= 1");
  const auto terms = sequence_prefix(family, i - 1);
  BigInt acc = 0;
  for (const auto& t : terms) acc += t;
  return acc;
}

}  // namespace graygen
