#include "graygen/schroder.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "graygen/sequences.hpp"
#include "graygen/verify.hpp"

namespace graygen {
namespace {

// Independent enumerator: depth-first over {u, e, d} keeping the walk on or
// above the axis and inside the fixed total width.  Order differs from the
// Gray list; only the set is compared.
void enumerate_paths(std::string& cur, int height, int width_left,
                     std::set<PathWord>& out) {
  if (width_left == 0) {
    if (height == 0) out.insert(cur);
    return;
  }
  if (width_left >= 1) {
    cur += 'u';
    enumerate_paths(cur, height + 1, width_left - 1, out);
    cur.pop_back();
  }
  if (width_left >= 2) {
    cur += 'e';
    enumerate_paths(cur, height, width_left - 2, out);
    cur.pop_back();
  }
  if (height > 0) {
    cur += 'd';
    enumerate_paths(cur, height - 1, width_left - 1, out);
    cur.pop_back();
  }
}

std::set<PathWord> all_paths(int n) {
  std::set<PathWord> out;
  std::string cur;
  enumerate_paths(cur, 0, 2 * n, out);
  return out;
}

TEST(SchroderPaths, Validity) {
  EXPECT_TRUE(is_valid_path(""));
  EXPECT_TRUE(is_valid_path("ud"));
  EXPECT_TRUE(is_valid_path("e"));
  EXPECT_TRUE(is_valid_path("uedud"));
  EXPECT_FALSE(is_valid_path("du"));
  EXPECT_FALSE(is_valid_path("uud"));
  EXPECT_FALSE(is_valid_path("ux"));
}

TEST(SchroderPaths, Semilength) {
  EXPECT_EQ(path_semilength(""), 0);
  EXPECT_EQ(path_semilength("eee"), 3);
  EXPECT_EQ(path_semilength("uuuddd"), 3);
  EXPECT_EQ(path_semilength("ududud"), 3);
  EXPECT_THROW((void)path_semilength("du"), std::invalid_argument);
}

TEST(SchroderPaths, SmallListsExact) {
  EXPECT_EQ(build_s_paths(0), (std::vector<PathWord>{""}));
  EXPECT_EQ(build_s_paths(1), (std::vector<PathWord>{"e", "ud"}));
  EXPECT_EQ(build_s_paths(2),
            (std::vector<PathWord>{"ee", "eud", "udud", "ude", "uudd", "ued"}));
}

TEST(SchroderPaths, Endpoints) {
  for (int n = 1; n <= 7; ++n) {
    const auto list = build_s_paths(n);
    EXPECT_EQ(list.front(), std::string(static_cast<std::size_t>(n), 'e')) << n;
    EXPECT_EQ(list.back(),
              "u" + std::string(static_cast<std::size_t>(n) - 1, 'e') + "d")
        << n;
  }
}

TEST(SchroderPaths, CountsMatchSchroder) {
  for (int n = 0; n <= 8; ++n) {
    std::size_t count = 0;
    stream_s_paths(n, [&count](const PathWord&) { ++count; });
    EXPECT_EQ(BigInt(count), sequence_term(CountFamily::schroder, n)) << n;
  }
}

TEST(SchroderPaths, SetMatchesIndependentEnumerator) {
  for (int n = 0; n <= 6; ++n) {
    const auto list = build_s_paths(n);
    const std::set<PathWord> got(list.begin(), list.end());
    EXPECT_EQ(got.size(), list.size()) << "duplicates at n=" << n;
    EXPECT_EQ(got, all_paths(n)) << n;
  }
}

TEST(SchroderPaths, DistanceExamples) {
  EXPECT_EQ(path_distance("e", "ud"), 2);
  EXPECT_EQ(path_distance("ued", "eud"), 2);
  EXPECT_EQ(path_distance("uudd", "udud"), 2);
  EXPECT_EQ(path_distance("ee", "ee"), 0);
  EXPECT_THROW((void)path_distance("e", "ee"), std::invalid_argument);
}

TEST(SchroderPaths, AdjacencyWithinFiveIncludingWrap) {
  for (int n = 1; n <= 7; ++n) {
    const auto list = build_s_paths(n);
    for (std::size_t i = 0; i + 1 < list.size(); ++i)
      ASSERT_LE(path_distance(list[i], list[i + 1]), 5)
          << "n=" << n << " step " << i + 1;
    EXPECT_LE(path_distance(list.back(), list.front()), 5) << n;
  }
}

TEST(SchroderBijection, DotLabelsStayInRange) {
  for (int n = 1; n <= 5; ++n)
    for (const PathWord& w : build_s_paths(n))
      for (const Dot& d : place_dots(w)) {
        EXPECT_GE(d.label, 1) << w;
        EXPECT_LE(d.label, n) << w;
        EXPECT_EQ((4 + d.x4 - d.y4) % 8, 0) << w;
      }
}

TEST(SchroderBijection, SigmaFactorsRotateLeft) {
  // (k, l) cycles positions l..k+1 one place left, and factors apply in
  // the order given.
  EXPECT_EQ(apply_sigma_factors({7, 6, 5, 4, 3, 2, 1},
                                {{6, 5}, {4, 1}, {3, 1}, {2, 2}}),
            (Permutation{5, 2, 4, 6, 7, 1, 3}));
  EXPECT_EQ(apply_sigma_factors({2, 1}, {{1, 1}}), (Permutation{1, 2}));
  EXPECT_THROW(apply_sigma_factors({2, 1}, {{2, 1}}), std::invalid_argument);
  EXPECT_THROW(apply_sigma_factors({2, 1}, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(apply_sigma_factors({3, 2, 1}, {{2, 3}}), std::invalid_argument);
}

TEST(SchroderBijection, ImagesOfKnownPaths) {
  EXPECT_EQ(phi(""), (Permutation{1}));
  EXPECT_EQ(phi("ud"), (Permutation{1, 2}));
  EXPECT_EQ(phi("e"), (Permutation{2, 1}));
  EXPECT_EQ(phi("ududud"), (Permutation{1, 4, 3, 2}));
  EXPECT_EQ(phi("eee"), (Permutation{4, 3, 2, 1}));
  EXPECT_EQ(phi("ueed"), (Permutation{3, 2, 1, 4}));
  EXPECT_EQ(phi("uuuudddd"), (Permutation{1, 2, 3, 4, 5}));
}

TEST(SchroderBijection, SmallImageListExact) {
  EXPECT_EQ(build_phi_list(2),
            (PermutationList{{3, 2, 1},
                             {3, 1, 2},
                             {1, 3, 2},
                             {2, 3, 1},
                             {1, 2, 3},
                             {2, 1, 3}}));
}

TEST(SchroderBijection, EndpointsOfImageList) {
  for (int n = 1; n <= 7; ++n) {
    const PermutationList list = build_phi_list(n);
    Permutation down(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) down[static_cast<std::size_t>(i)] = n + 1 - i;
    EXPECT_EQ(list.front(), down) << n;  // n+1, n, ..., 1
    Permutation last = down;             // n, ..., 1, n+1
    last.erase(last.begin());
    last.push_back(n + 1);
    EXPECT_EQ(list.back(), last) << n;
  }
}

TEST(SchroderBijection, ImageListIsGrayAndComplete) {
  for (int n = 1; n <= 6; ++n) {
    const PermutationList list = build_phi_list(n);
    const GrayReport gray = check_gray(list, 5, /*circular=*/false);
    EXPECT_TRUE(gray.pass) << n;
    const GrayReport complete =
        check_complete(list, {{1, 2, 4, 3}, {2, 1, 4, 3}});
    EXPECT_TRUE(complete.pass) << n;
  }
}

}  // namespace
}  // namespace graygen
