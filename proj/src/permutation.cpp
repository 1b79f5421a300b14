#include "graygen/permutation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace graygen {

bool is_permutation(const Permutation& v) {
  const int n = static_cast<int>(v.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int x : v) {
    if (x < 1 || x > n || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = true;
  }
  return true;
}

std::string format_permutation(const Permutation& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  Permutation v;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer: '" + tok + "'");
    }
    if (used != tok.size())
      throw std::invalid_argument("not an integer: '" + tok + "'");
    v.push_back(x);
  }
  if (!is_permutation(v))
    throw std::invalid_argument("entries are not a permutation of 1..n: '" +
                                std::string(text) + "'");
  return v;
}

namespace {

// Extend a partial order-isomorphic match: chosen[0..depth) are positions in
// perm matching patt[0..depth).  The next position must sit to the right and
// relate to every chosen entry the same way the pattern entries relate.
bool match_from(const Permutation& perm, const Pattern& patt,
                std::vector<int>& chosen, std::size_t depth, std::size_t from) {
  if (depth == patt.size()) return true;
  for (std::size_t pos = from; pos + (patt.size() - depth) <= perm.size();
       ++pos) {
    bool ok = true;
    for (std::size_t q = 0; q < depth; ++q) {
      const bool perm_less = perm[static_cast<std::size_t>(chosen[q])] < perm[pos];
      const bool patt_less = patt[q] < patt[depth];
      if (perm_less != patt_less) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chosen.push_back(static_cast<int>(pos));
    if (match_from(perm, patt, chosen, depth + 1, pos + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool contains_pattern(const Permutation& perm, const Pattern& patt) {
  if (patt.empty()) return true;
  if (patt.size() > perm.size()) return false;
  std::vector<int> chosen;
  chosen.reserve(patt.size());
  return match_from(perm, patt, chosen, 0, 0);
}

bool avoids_all(const Permutation& perm, const std::vector<Pattern>& patterns) {
  return std::none_of(patterns.begin(), patterns.end(),
                      [&](const Pattern& p) { return contains_pattern(perm, p); });
}

int hamming_distance(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("hamming_distance: length mismatch");
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
  return d;
}

std::vector<int> delta_positions(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("delta_positions: length mismatch");
  std::vector<int> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) out.push_back(static_cast<int>(i) + 1);
  return out;
}

Permutation transform(const Permutation& v, Symmetry op) {
  const int n = static_cast<int>(v.size());
  Permutation out(v);
  if (op == Symmetry::reverse || op == Symmetry::reverse_complement)
    std::reverse(out.begin(), out.end());
  if (op == Symmetry::complement || op == Symmetry::reverse_complement)
    for (int& x : out) x = n + 1 - x;
  return out;
}

void apply_adjacent_transposition(Permutation& v, int i) {
  if (i < 1 || static_cast<std::size_t>(i) >= v.size())
    throw std::invalid_argument("adjacent transposition out of range");
  std::swap(v[static_cast<std::size_t>(i) - 1], v[static_cast<std::size_t>(i)]);
}

}  // namespace graygen
