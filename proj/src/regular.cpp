#include "graygen/regular.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <utility>

namespace graygen {

namespace {

Pattern pat(std::initializer_list<int> v) { return Pattern(v); }

// {p+1, 1, 2, ..., p}
Pattern tower_pattern(int p) {
  Pattern v;
  v.push_back(p + 1);
  for (int x = 1; x <= p; ++x) v.push_back(x);
  return v;
}

// { (p+1) tau p : tau runs over all permutations of 1..p-1 }
std::vector<Pattern> sandwich_patterns(int p) {
  std::vector<Pattern> out;
  Pattern mid;
  for (int x = 1; x < p; ++x) mid.push_back(x);
  do {
    Pattern v;
    v.push_back(p + 1);
    v.insert(v.end(), mid.begin(), mid.end());
    v.push_back(p);
    out.push_back(std::move(v));
  } while (std::next_permutation(mid.begin(), mid.end()));
  return out;
}

struct CatalogEntry {
  const char* name;
  bool parameterized;
};

constexpr CatalogEntry kCatalog[] = {
    {"321_312", false},  {"321_3412_4123", false}, {"321_3412", false},
    {"321_4123", false}, {"312", false},           {"321", false},
    {"4321_4312", false}, {"4231_4132", false},    {"4123_4213", false},
    {"cbc_a", false},    {"cbc_b", false},         {"avoid_a", true},
    {"avoid_b", true},   {"avoid_c", true},
};

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& e : kCatalog) out.emplace_back(e.name);
  return out;
}

SuccessionRule make_rule(std::string_view name, int p) {
  const auto* entry =
      std::find_if(std::begin(kCatalog), std::end(kCatalog),
                   [&](const CatalogEntry& e) { return name == e.name; });
  if (entry == std::end(kCatalog))
    throw std::invalid_argument("unknown class '" + std::string(name) + "'");
  if (entry->parameterized && p < 2)
    throw std::invalid_argument("class '" + std::string(name) +
                                "' needs a parameter p >= 2");
  if (!entry->parameterized && p != 0)
    throw std::invalid_argument("class '" + std::string(name) +
                                "' takes no parameter");

  SuccessionRule rule;
  rule.name = std::string(name);
  rule.p = p;

  if (name == "321_312") {
    rule.patterns = {pat({3, 2, 1}), pat({3, 1, 2})};
    rule.chi = [](int, int) { return 2; };
  } else if (name == "321_3412_4123") {
    rule.patterns = {pat({3, 2, 1}), pat({3, 4, 1, 2}), pat({4, 1, 2, 3})};
    rule.chi = [](int i, int) { return i == 1 ? 3 : 2; };
  } else if (name == "321_3412") {
    rule.patterns = {pat({3, 2, 1}), pat({3, 4, 1, 2})};
    rule.chi = [](int i, int k) { return i == 1 ? k + 1 : 2; };
  } else if (name == "321_4123") {
    rule.patterns = {pat({3, 2, 1}), pat({4, 1, 2, 3})};
    rule.chi = [](int i, int) { return i == 1 ? 3 : i; };
  } else if (name == "312") {
    rule.patterns = {pat({3, 1, 2})};
    rule.chi = [](int i, int) { return i + 1; };
  } else if (name == "321") {
    rule.patterns = {pat({3, 2, 1})};
    rule.chi = [](int i, int k) { return i == 1 ? k + 1 : i; };
  } else if (name == "4321_4312") {
    rule.patterns = {pat({4, 3, 2, 1}), pat({4, 3, 1, 2})};
    rule.chi = [](int i, int k) { return i <= 2 ? k + 1 : i; };
  } else if (name == "4231_4132") {
    rule.patterns = {pat({4, 2, 3, 1}), pat({4, 1, 3, 2})};
    rule.chi = [](int i, int k) { return (i == 1 || i == k) ? k + 1 : i + 1; };
  } else if (name == "4123_4213") {
    rule.patterns = {pat({4, 1, 2, 3}), pat({4, 2, 1, 3})};
    rule.chi = [](int i, int k) { return i >= k - 1 ? k + 1 : i + 2; };
  } else if (name == "cbc_a") {
    rule.patterns = {pat({4, 3, 2, 1}), pat({4, 2, 3, 1}), pat({4, 3, 1, 2}),
                     pat({4, 1, 3, 2})};
    rule.chi = [](int i, int k) { return i == 1 ? k + 1 : (i == 2 ? 3 : i); };
  } else if (name == "cbc_b") {
    rule.patterns = {pat({4, 2, 3, 1}), pat({4, 1, 3, 2}), pat({4, 2, 1, 3}),
                     pat({4, 1, 2, 3})};
    rule.chi = [](int i, int) { return i == 1 ? 3 : i + 1; };
  } else if (name == "avoid_a") {
    rule.patterns = {pat({3, 2, 1}), tower_pattern(p)};
    rule.chi = [p](int i, int k) {
      if (i != 1) return i;
      return k < p ? k + 1 : p;
    };
  } else if (name == "avoid_b") {
    rule.patterns = {pat({3, 2, 1}), pat({3, 4, 1, 2}), tower_pattern(p)};
    rule.chi = [p](int i, int k) {
      if (i != 1) return 2;
      return k < p ? k + 1 : p;
    };
  } else {  // avoid_c
    rule.patterns = sandwich_patterns(p);
    rule.chi = [p](int i, int k) {
      return (k < p || i > k - p + 1) ? k + 1 : i + p - 1;
    };
  }
  return rule;
}

Permutation insert_at_site(const Permutation& perm, int site) {
  const int len = static_cast<int>(perm.size());
  if (site < 1 || site > len + 1)
    throw std::invalid_argument("site out of range");
  Permutation out;
  out.reserve(perm.size() + 1);
  const int pos = len + 1 - site;  // 0-indexed insertion point
  out.insert(out.end(), perm.begin(), perm.begin() + pos);
  out.push_back(len + 1);
  out.insert(out.end(), perm.begin() + pos, perm.end());
  return out;
}

namespace {

void gen_avoid_rec(Permutation& buf, int size, int k, int n,
                   const SuccessionRule& rule,
                   const std::function<void(const Permutation&)>& emit,
                   GenStats& stats) {
  ++stats.calls;
  if (size == n) {
    ++stats.outputs;
    emit(buf);
    return;
  }
  const int s = size + 1;
  buf[static_cast<std::size_t>(s) - 1] = s;  // child 1: append s at site 1
  gen_avoid_rec(buf, s, rule.chi(1, k), n, rule, emit, stats);
  for (int i = 1; i <= k - 1; ++i) {
    // child i+1: slide the new largest entry one position left
    std::swap(buf[static_cast<std::size_t>(s - i)],
              buf[static_cast<std::size_t>(s - i - 1)]);
    gen_avoid_rec(buf, s, rule.chi(i + 1, k), n, rule, emit, stats);
  }
  for (int i = k - 1; i >= 1; --i)
    std::swap(buf[static_cast<std::size_t>(s - i)],
              buf[static_cast<std::size_t>(s - i - 1)]);
}

}  // namespace

void gen_avoid(const SuccessionRule& rule, int n,
               const std::function<void(const Permutation&)>& emit,
               GenStats* stats) {
  if (n < 1) throw std::invalid_argument("gen_avoid needs n >= 1");
  GenStats local;
  GenStats& st = stats ? *stats : local;
  Permutation buf(static_cast<std::size_t>(n));
  buf[0] = 1;
  gen_avoid_rec(buf, 1, 2, n, rule, emit, st);
}

PermutationList gen_avoid_list(const SuccessionRule& rule, int n) {
  PermutationList list;
  gen_avoid(rule, n, [&list](const Permutation& p) { list.push_back(p); });
  return list;
}

std::vector<int> l_sequence(int k) {
  if (k < 1) throw std::invalid_argument("l_sequence needs k >= 1");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int v = 1; v <= k; v += 2) out.push_back(v);
  for (int v = (k % 2 == 0) ? k : k - 1; v >= 2; v -= 2) out.push_back(v);
  return out;
}

std::vector<DirectedPermutation> successors(const DirectedPermutation& node,
                                            const SuccessionRule& rule) {
  const std::vector<int> sites = l_sequence(node.k);
  std::vector<DirectedPermutation> out;
  out.reserve(sites.size());
  for (std::size_t j = 0; j < sites.size(); ++j)
    out.push_back({insert_at_site(node.perm, sites[j]),
                   /*up=*/j == 0, rule.chi(sites[j], node.k)});
  if (!node.up) {
    std::reverse(out.begin(), out.end());
    for (auto& child : out) child.up = !child.up;
  }
  return out;
}

CList build_c_list(const SuccessionRule& rule, int n) {
  if (n < 1) throw std::invalid_argument("build_c_list needs n >= 1");
  std::vector<DirectedPermutation> level = {{Permutation{1}, true, 2}};
  for (int m = 2; m <= n; ++m) {
    std::vector<DirectedPermutation> next;
    for (const DirectedPermutation& node : level) {
      auto children = successors(node, rule);
      std::move(children.begin(), children.end(), std::back_inserter(next));
    }
    level = std::move(next);
  }
  return {rule.name, n, std::move(level)};
}

}  // namespace graygen
