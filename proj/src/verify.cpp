#include "graygen/verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace graygen {

namespace {

constexpr int kOracleCap = 8;

void note_limited(std::vector<std::string>& details, std::size_t shown,
                  std::size_t total, const char* what) {
  if (total > shown)
    details.push_back("... and " + std::to_string(total - shown) + " more " +
                      what);
}

}  // namespace

std::vector<Permutation> brute_force_avoiders(const std::vector<Pattern>& patterns,
                                              int n, bool allow_large) {
  if (n < 0) throw std::invalid_argument("brute_force_avoiders: n < 0");
  if (n > kOracleCap && !allow_large)
    throw std::invalid_argument(
        "brute_force_avoiders: n exceeds the cap of " +
        std::to_string(kOracleCap) + " (pass allow_large to override)");
  Permutation candidate(static_cast<std::size_t>(n));
  std::iota(candidate.begin(), candidate.end(), 1);
  std::vector<Permutation> out;
  do {
    if (avoids_all(candidate, patterns)) out.push_back(candidate);
  } while (std::next_permutation(candidate.begin(), candidate.end()));
  return out;
}

GrayReport check_gray(const PermutationList& list, int max_dist, bool circular) {
  if (list.empty()) throw std::invalid_argument("check_gray: empty list");
  for (const Permutation& p : list)
    if (p.size() != list.front().size())
      throw std::invalid_argument("check_gray: ragged entry lengths");

  GrayReport report;
  report.count = list.size();

  for (std::size_t i = 0; i + 1 < list.size(); ++i) {
    const int d = hamming_distance(list[i], list[i + 1]);
    if (d > report.max_adjacent_distance) report.max_adjacent_distance = d;
    if (d > max_dist && report.details.size() < 10)
      report.details.push_back("entries " + std::to_string(i + 1) + " and " +
                               std::to_string(i + 2) + " differ in " +
                               std::to_string(d) + " positions");
  }
  if (circular)
    report.circular_distance = hamming_distance(list.back(), list.front());

  std::set<Permutation> seen;
  for (const Permutation& p : list)
    if (!seen.insert(p).second) ++report.duplicates;

  report.pass = report.max_adjacent_distance <= max_dist &&
                (!circular || report.circular_distance <= max_dist) &&
                report.duplicates == 0;
  if (circular && report.circular_distance > max_dist)
    report.details.push_back("wrap pair differs in " +
                             std::to_string(report.circular_distance) +
                             " positions");
  if (report.duplicates > 0)
    report.details.push_back(std::to_string(report.duplicates) +
                             " duplicate entries");
  return report;
}

GrayReport check_complete(const PermutationList& list,
                          const std::vector<Pattern>& patterns,
                          bool allow_large) {
  if (list.empty()) throw std::invalid_argument("check_complete: empty list");
  const int n = static_cast<int>(list.front().size());
  for (const Permutation& p : list)
    if (static_cast<int>(p.size()) != n)
      throw std::invalid_argument("check_complete: ragged entry lengths");

  GrayReport report;
  report.count = list.size();

  std::set<Permutation> have;
  for (const Permutation& p : list)
    if (!have.insert(p).second) ++report.duplicates;

  const std::vector<Permutation> expected =
      brute_force_avoiders(patterns, n, allow_large);
  std::vector<Permutation> missing, extra;
  for (const Permutation& p : expected)
    if (!have.count(p)) missing.push_back(p);
  std::set<Permutation> want(expected.begin(), expected.end());
  for (const Permutation& p : have)
    if (!want.count(p)) extra.push_back(p);

  const bool matched =
      missing.empty() && extra.empty() && report.duplicates == 0;
  report.oracle_match = matched ? OracleMatch::matched : OracleMatch::mismatched;
  report.pass = matched;
  for (std::size_t i = 0; i < missing.size() && i < 10; ++i)
    report.details.push_back("missing: " + format_permutation(missing[i]));
  note_limited(report.details, 10, missing.size(), "missing");
  for (std::size_t i = 0; i < extra.size() && i < 10; ++i)
    report.details.push_back("extra: " + format_permutation(extra[i]));
  note_limited(report.details, 10, extra.size(), "extra");
  if (report.duplicates > 0)
    report.details.push_back(std::to_string(report.duplicates) +
                             " duplicate entries");
  return report;
}

bool is_cyclic_rotation_delta(const Permutation& a, const Permutation& b) {
  const std::vector<int> pos = delta_positions(a, b);
  const std::size_t m = pos.size();
  if (m < 2 || m > 4) return false;
  std::vector<int> va(m), vb(m);
  for (std::size_t i = 0; i < m; ++i) {
    va[i] = a[static_cast<std::size_t>(pos[i]) - 1];
    vb[i] = b[static_cast<std::size_t>(pos[i]) - 1];
  }
  const auto rotated = [&](std::size_t shift) {
    for (std::size_t i = 0; i < m; ++i)
      if (vb[i] != va[(i + shift) % m]) return false;
    return true;
  };
  return rotated(1) || rotated(m - 1);
}

}  // namespace graygen
