#include "graygen/catalan231.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <stdexcept>

#include "graygen/sequences.hpp"
#include "graygen/verify.hpp"

namespace graygen {
namespace {

Permutation iota_perm(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  return p;
}

TEST(Catalan231, SmallListsExact) {
  EXPECT_EQ(build_d_list(0), (PermutationList{{}}));
  EXPECT_EQ(build_d_list(1), (PermutationList{{1}}));
  EXPECT_EQ(build_d_list(2), (PermutationList{{2, 1}, {1, 2}}));
  EXPECT_EQ(build_d_list(3),
            (PermutationList{
                {3, 1, 2}, {3, 2, 1}, {1, 3, 2}, {2, 1, 3}, {1, 2, 3}}));
}

TEST(Catalan231, EndpointsFollowTheRecursion) {
  // First entry n,1,2,...,n-1; last entry the identity.
  for (int n = 2; n <= 9; ++n) {
    const PermutationList list = build_d_list(n);
    Permutation first = iota_perm(n - 1);
    first.insert(first.begin(), n);  // n,1,2,...,n-1
    EXPECT_EQ(list.front(), first) << n;
    EXPECT_EQ(list.back(), iota_perm(n)) << n;
  }
}

TEST(Catalan231, CountsMatchCatalan) {
  for (int n = 0; n <= 9; ++n) {
    std::size_t count = 0;
    stream_d_list(n, [&count](const Permutation&) { ++count; });
    EXPECT_EQ(BigInt(count), sequence_term(CountFamily::catalan, n)) << n;
  }
}

TEST(Catalan231, AdjacentStepsAreShortCyclicRotations) {
  for (int n = 2; n <= 7; ++n) {
    const PermutationList list = build_d_list(n);
    for (std::size_t q = 0; q + 1 < list.size(); ++q) {
      const int d = hamming_distance(list[q], list[q + 1]);
      ASSERT_LE(d, 4) << "n=" << n << " step " << q + 1;
      ASSERT_TRUE(is_cyclic_rotation_delta(list[q], list[q + 1]))
          << "n=" << n << " step " << q + 1;
    }
  }
}

TEST(Catalan231, CompleteForEveryLengthThreePattern) {
  const Pattern patterns[] = {{2, 3, 1}, {1, 3, 2}, {2, 1, 3}, {3, 1, 2}};
  for (const Pattern& patt : patterns)
    for (int n = 0; n <= 6; ++n) {
      const PermutationList list = build_pattern3_list(patt, n);
      const GrayReport r = check_complete(list, {patt});
      EXPECT_TRUE(r.pass) << format_permutation(patt) << " n=" << n;
      EXPECT_EQ(r.oracle_match, OracleMatch::matched);
    }
}

TEST(Catalan231, TransformedListsKeepTheDistanceBound) {
  const Pattern patterns[] = {{1, 3, 2}, {2, 1, 3}, {3, 1, 2}};
  for (const Pattern& patt : patterns)
    for (int n = 2; n <= 7; ++n) {
      const PermutationList list = build_pattern3_list(patt, n);
      const GrayReport r = check_gray(list, 4, /*circular=*/false);
      EXPECT_TRUE(r.pass) << format_permutation(patt) << " n=" << n;
    }
}

TEST(Catalan231, StreamingMatchesMaterialized) {
  PermutationList streamed;
  stream_d_list(6, [&streamed](const Permutation& p) { streamed.push_back(p); });
  EXPECT_EQ(streamed, build_d_list(6));
}

TEST(Catalan231, SuccessorDelta) {
  const PermutationList list = build_d_list(6);
  EXPECT_EQ(d_successor_delta(6, 1), delta_positions(list[0], list[1]));
  EXPECT_EQ(d_successor_delta(6, 42), delta_positions(list[41], list[42]));
  EXPECT_THROW(d_successor_delta(6, 0), std::invalid_argument);
  EXPECT_THROW(d_successor_delta(6, list.size()), std::invalid_argument);
}

TEST(Catalan231, RejectsUnknownPatternsAndNegativeOrders) {
  EXPECT_THROW(build_pattern3_list({1, 2, 3}, 4), std::invalid_argument);
  EXPECT_THROW(build_pattern3_list({3, 2, 1}, 4), std::invalid_argument);
  EXPECT_THROW(build_pattern3_list({1, 2}, 4), std::invalid_argument);
  EXPECT_THROW(build_d_list(-1), std::invalid_argument);
}

}  // namespace
}  // namespace graygen
