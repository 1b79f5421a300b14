#include "graygen/sequences.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <stdexcept>

namespace graygen {
namespace {

TEST(Sequences, FrozenInitialTerms) {
  const struct {
    CountFamily family;
    std::vector<long long> terms;
  } cases[] = {
      {CountFamily::catalan, {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796}},
      {CountFamily::schroder, {1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098}},
      {CountFamily::pell, {0, 1, 2, 5, 12, 29, 70, 169, 408}},
      {CountFamily::fibonacci_even, {1, 1, 2, 5, 13, 34, 89, 233, 610}},
      {CountFamily::central_binomial, {1, 2, 6, 20, 70, 252, 924, 3432}},
      {CountFamily::power_of_two, {1, 2, 4, 8, 16, 32, 64}},
  };
  for (const auto& c : cases) {
    const auto got = sequence_prefix(c.family, static_cast<int>(c.terms.size()));
    ASSERT_EQ(got.size(), c.terms.size());
    for (std::size_t i = 0; i < c.terms.size(); ++i)
      EXPECT_EQ(got[i], BigInt(c.terms[i])) << "term " << i;
    for (std::size_t i = 0; i < c.terms.size(); ++i)
      EXPECT_EQ(sequence_term(c.family, static_cast<int>(i)), BigInt(c.terms[i]));
  }
}

TEST(Sequences, CatalanAgreesWithCentralBinomialQuotient) {
  // c_n = C(2n, n) / (n + 1), an independent closed form.
  for (int n = 0; n <= 60; ++n)
    EXPECT_EQ(sequence_term(CountFamily::catalan, n) * (n + 1),
              sequence_term(CountFamily::central_binomial, n))
        << n;
}

TEST(Sequences, SchroderSatisfiesThreeTermRecurrence) {
  // (m + 2) r_{m+1} = 3 (2m + 1) r_m - (m - 1) r_{m-1}, independent of the
  // convolution used to build the sequence.
  const auto r = sequence_prefix(CountFamily::schroder, 40);
  for (int m = 1; m + 1 < 40; ++m)
    EXPECT_EQ(BigInt(m + 2) * r[static_cast<std::size_t>(m + 1)],
              BigInt(3 * (2 * m + 1)) * r[static_cast<std::size_t>(m)] -
                  BigInt(m - 1) * r[static_cast<std::size_t>(m - 1)])
        << m;
}

TEST(Sequences, PrefixSumsFrozen) {
  const long long catalan_sums[] = {0, 1, 2, 4, 9, 23, 65};
  for (int i = 1; i <= 7; ++i)
    EXPECT_EQ(prefix_sum(CountFamily::catalan, i), BigInt(catalan_sums[i - 1]))
        << i;
  const long long schroder_sums[] = {0, 1, 3, 9, 31, 121};
  for (int i = 1; i <= 6; ++i)
    EXPECT_EQ(prefix_sum(CountFamily::schroder, i), BigInt(schroder_sums[i - 1]))
        << i;
}

TEST(Sequences, PrefixSumIncrements) {
  for (CountFamily f : {CountFamily::catalan, CountFamily::schroder})
    for (int i = 2; i <= 20; ++i)
      EXPECT_EQ(prefix_sum(f, i) - prefix_sum(f, i - 1), sequence_term(f, i - 2));
}

TEST(Sequences, CatalanPrefixSumParityComesInBlocks) {
  // Writing i = 2^m + k with 0 < k <= 2^m, the catalan prefix sum at i is
  // odd exactly when m is even.  Checked far enough to need exact big
  // integers (the sums overflow 64 bits before i = 40).
  for (int i = 2; i <= 64; ++i) {
    const int m = std::bit_width(static_cast<unsigned>(i - 1)) - 1;
    const bool odd = static_cast<bool>(prefix_sum(CountFamily::catalan, i) % 2);
    EXPECT_EQ(odd, m % 2 == 0) << "i=" << i;
  }
}

TEST(Sequences, ArgumentChecks) {
  EXPECT_THROW(sequence_term(CountFamily::catalan, -1), std::invalid_argument);
  EXPECT_THROW(sequence_prefix(CountFamily::pell, -2), std::invalid_argument);
  EXPECT_THROW(prefix_sum(CountFamily::pell, 3), std::invalid_argument);
  EXPECT_THROW(prefix_sum(CountFamily::catalan, 0), std::invalid_argument);
}

}  // namespace
}  // namespace graygen
