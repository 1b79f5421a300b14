#include "graygen/schroder.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace graygen {

namespace {

void require_valid(std::string_view word) {
  if (!is_valid_path(word))
    throw std::invalid_argument("not a well-formed path word: '" +
                                std::string(word) + "'");
}

// Large Schroder numbers as loop bounds.
std::vector<long long> schroder_counts(int n) {
  std::vector<long long> r(static_cast<std::size_t>(n) + 1);
  r[0] = 1;
  for (int m = 1; m <= n; ++m) {
    long long acc = r[static_cast<std::size_t>(m - 1)];
    for (int k = 1; k <= m; ++k)
      acc += r[static_cast<std::size_t>(k - 1)] * r[static_cast<std::size_t>(m - k)];
    r[static_cast<std::size_t>(m)] = acc;
  }
  return r;
}

// Emits the semilength-n list from the materialized lower lists.
//
// The list opens with e prefixed to every path of semilength n-1 (in list
// order), then continues with u alpha d beta for every split of the
// remaining semilength, alpha running over the semilength i-1 list and beta
// over the semilength n-i list.  alpha's scan direction flips once per i
// (starting forwards exactly when n is odd), beta's flips after every alpha
// step (starting backwards); these parities make each block hand over to
// the next within the distance bound.
void emit_paths_level(int n, const std::vector<std::vector<PathWord>>& lower,
                      const std::vector<long long>& counts,
                      const std::function<void(const PathWord&)>& emit) {
  PathWord row;
  for (const PathWord& tail : lower[static_cast<std::size_t>(n - 1)]) {
    row.assign("e");
    row += tail;
    emit(row);
  }
  bool alpha_fwd = (n % 2 == 0);
  bool beta_fwd = false;
  for (int i = 1; i <= n; ++i) {
    const auto& alphas = lower[static_cast<std::size_t>(i - 1)];
    const auto& betas = lower[static_cast<std::size_t>(n - i)];
    const long long acount = counts[static_cast<std::size_t>(i - 1)];
    const long long bcount = counts[static_cast<std::size_t>(n - i)];
    for (long long j = 0; j < acount; ++j) {
      const PathWord& alpha =
          alphas[static_cast<std::size_t>(alpha_fwd ? j : acount - 1 - j)];
      for (long long k = 0; k < bcount; ++k) {
        const PathWord& beta =
            betas[static_cast<std::size_t>(beta_fwd ? k : bcount - 1 - k)];
        row.assign("u");
        row += alpha;
        row += 'd';
        row += beta;
        emit(row);
      }
      beta_fwd = !beta_fwd;
    }
    alpha_fwd = !alpha_fwd;
  }
}

// Piecewise-linear height profile of a path, in quarter units (x4 = 4x,
// h4 = 4 * height).  Vertices are the step boundaries.
struct PathProfile {
  std::vector<int> vx;  // boundary abscissae, ascending, vx.front() == 0
  std::vector<int> vh;  // heights at those abscissae

  explicit PathProfile(std::string_view word) {
    vx.reserve(word.size() + 1);
    vh.reserve(word.size() + 1);
    int x = 0, h = 0;
    vx.push_back(x);
    vh.push_back(h);
    for (char c : word) {
      if (c == 'u') {
        x += 4;
        h += 4;
      } else if (c == 'd') {
        x += 4;
        h -= 4;
      } else {
        x += 8;
      }
      vx.push_back(x);
      vh.push_back(h);
    }
  }

  [[nodiscard]] int width() const { return vx.back(); }

  [[nodiscard]] int height_at(int x4) const {
    if (x4 <= 0) return 0;
    const auto it = std::upper_bound(vx.begin(), vx.end(), x4);
    const std::size_t seg = static_cast<std::size_t>(it - vx.begin()) - 1;
    if (seg + 1 >= vx.size()) return vh.back();
    const int run = vx[seg + 1] - vx[seg];
    const int rise = vh[seg + 1] - vh[seg];
    // Steps are unit slope or flat, so rise/run is 0 or +-1; the division
    // below is exact.
    return vh[seg] + (x4 - vx[seg]) * rise / run;
  }

  // Minimum height over the closed interval [a4, b4]: the extremes occur at
  // the endpoints or at interior vertices.
  [[nodiscard]] int min_height(int a4, int b4) const {
    int lo = std::min(height_at(a4), height_at(b4));
    for (std::size_t i = 0; i < vx.size(); ++i)
      if (vx[i] > a4 && vx[i] < b4) lo = std::min(lo, vh[i]);
    return lo;
  }
};

}  // namespace

bool is_valid_path(std::string_view word) {
  int h = 0;
  for (char c : word) {
    if (c == 'u') {
      ++h;
    } else if (c == 'd') {
      if (--h < 0) return false;
    } else if (c != 'e') {
      return false;
    }
  }
  return h == 0;
}

int path_semilength(std::string_view word) {
  require_valid(word);
  int n = 0;
  for (char c : word) n += (c != 'd');
  return n;
}

void stream_s_paths(int n, const std::function<void(const PathWord&)>& emit) {
  if (n < 0) throw std::invalid_argument("semilength must be >= 0");
  if (n == 0) {
    emit(PathWord{});
    return;
  }
  std::vector<std::vector<PathWord>> levels;
  levels.push_back({PathWord{}});
  const auto counts = schroder_counts(n);
  for (int m = 1; m < n; ++m) {
    std::vector<PathWord> list;
    list.reserve(static_cast<std::size_t>(counts[static_cast<std::size_t>(m)]));
    emit_paths_level(m, levels, counts,
                     [&list](const PathWord& p) { list.push_back(p); });
    levels.push_back(std::move(list));
  }
  emit_paths_level(n, levels, counts, emit);
}

std::vector<PathWord> build_s_paths(int n) {
  std::vector<PathWord> list;
  stream_s_paths(n, [&list](const PathWord& p) { list.push_back(p); });
  return list;
}

int path_distance(std::string_view a, std::string_view b) {
  const auto expand = [](std::string_view w) {
    std::string out;
    out.reserve(w.size() * 2);
    for (char c : w) {
      out += c;
      if (c == 'e') out += 'e';  // a level step occupies two positions
    }
    return out;
  };
  const std::string ea = expand(a);
  const std::string eb = expand(b);
  if (path_semilength(a) != path_semilength(b))
    throw std::invalid_argument("path_distance: semilength mismatch");
  int d = 0;
  for (std::size_t i = 0; i < ea.size(); ++i) d += (ea[i] != eb[i]);
  return d;
}

std::vector<Dot> place_dots(std::string_view word) {
  require_valid(word);
  const PathProfile prof(word);
  const int n = path_semilength(word);
  std::vector<Dot> dots;
  for (int m = 0; m < n; ++m) {
    for (int a = 0; a < n; ++a) {
      // The two admissible families of marked points.
      const int coords[2][2] = {{8 * m + 1, 8 * a + 5}, {8 * m + 5, 8 * a + 1}};
      for (const auto& c : coords) {
        const int x4 = c[0], y4 = c[1];
        if (x4 < prof.width() && y4 < prof.height_at(x4))
          dots.push_back({x4, y4, (4 + x4 - y4) / 8});
      }
    }
  }
  std::sort(dots.begin(), dots.end(), [](const Dot& p, const Dot& q) {
    return p.x4 != q.x4 ? p.x4 < q.x4 : p.y4 < q.y4;
  });
  return dots;
}

std::vector<SigmaFactor> sigma_decomposition(std::string_view word) {
  const PathProfile prof(word);
  const std::vector<Dot> dots = place_dots(word);

  // Group dots into horizontal levels, then split each level into maximal
  // runs: neighbouring dots (2 apart, i.e. 8 quarter-units) belong to the
  // same run only if the path clears the run's height over the whole gap.
  std::map<int, std::vector<Dot>> levels;
  for (const Dot& d : dots) levels[d.y4].push_back(d);

  struct Run {
    int right_x4, y4, k, l;
  };
  std::vector<Run> runs;
  for (auto& [y4, level] : levels) {
    std::size_t i = 0;
    while (i < level.size()) {
      std::size_t j = i;
      while (j + 1 < level.size() && level[j + 1].x4 == level[j].x4 + 8 &&
             prof.min_height(level[j].x4, level[j + 1].x4) > y4)
        ++j;
      runs.push_back({level[j].x4, y4, level[j].label, level[i].label});
      i = j + 1;
    }
  }

  // Application order: rightmost run end first; when two run ends share an
  // abscissa the lower dot goes first.
  std::sort(runs.begin(), runs.end(), [](const Run& p, const Run& q) {
    return p.right_x4 != q.right_x4 ? p.right_x4 > q.right_x4 : p.y4 < q.y4;
  });

  std::vector<SigmaFactor> factors;
  factors.reserve(runs.size());
  for (const Run& r : runs) factors.push_back({r.k, r.l});
  return factors;
}

Permutation apply_sigma_factors(Permutation start,
                                const std::vector<SigmaFactor>& factors) {
  for (const SigmaFactor& f : factors) {
    if (f.l < 1 || f.l > f.k || static_cast<std::size_t>(f.k) >= start.size())
      throw std::invalid_argument("sigma factor out of range");
    std::rotate(start.begin() + (f.l - 1), start.begin() + f.l,
                start.begin() + (f.k + 1));
  }
  return start;
}

Permutation phi(std::string_view word) {
  const int n = path_semilength(word);
  Permutation image(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) image[static_cast<std::size_t>(i)] = n + 1 - i;
  return apply_sigma_factors(std::move(image), sigma_decomposition(word));
}

void stream_phi_list(int n, const std::function<void(const Permutation&)>& emit) {
  stream_s_paths(n, [&emit](const PathWord& p) { emit(phi(p)); });
}

PermutationList build_phi_list(int n) {
  PermutationList list;
  stream_phi_list(n, [&list](const Permutation& p) { list.push_back(p); });
  return list;
}

}  // namespace graygen
