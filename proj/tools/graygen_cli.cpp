// graygen: generate, count, and verify Gray code lists of pattern-avoiding
// permutations and Schroder paths, and apply the path-to-permutation
// bijection.  Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <climits>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "graygen/catalan231.hpp"
#include "graygen/permutation.hpp"
#include "graygen/regular.hpp"
#include "graygen/schroder.hpp"
#include "graygen/sequences.hpp"
#include "graygen/verify.hpp"

namespace {

using namespace graygen;

enum class Family { s231, s132, s213, s312, schroder_path, schroder_perm, regular };

const std::map<std::string, Family> kFamilies = {
    {"s231", Family::s231},
    {"s132", Family::s132},
    {"s213", Family::s213},
    {"s312", Family::s312},
    {"schroder-path", Family::schroder_path},
    {"schroder-perm", Family::schroder_perm},
    {"regular", Family::regular},
};

struct Options {
  Family family = Family::s231;
  int n = 0;
  std::string class_name;
  int p = 0;
  std::string order = "gray";
  std::string format = "space";
  bool directions = false;
  bool circular = false;
  int max_dist = -1;  // -1: family default
  bool from_stdin = false;
  std::string path_word;
  bool n_given = false;
};

Pattern family_pattern(Family f) {
  switch (f) {
    case Family::s231: return {2, 3, 1};
    case Family::s132: return {1, 3, 2};
    case Family::s213: return {2, 1, 3};
    case Family::s312: return {3, 1, 2};
    default: throw std::logic_error("not a single-pattern family");
  }
}

std::vector<Pattern> completeness_patterns(const Options& opt) {
  switch (opt.family) {
    case Family::s231:
    case Family::s132:
    case Family::s213:
    case Family::s312:
      return {family_pattern(opt.family)};
    case Family::schroder_perm:
      return {{1, 2, 4, 3}, {2, 1, 4, 3}};
    case Family::regular:
      return make_rule(opt.class_name, opt.p).patterns;
    default:
      return {};
  }
}

int default_max_dist(Family f) { return f == Family::regular ? 5
                                        : f == Family::schroder_path ? 5
                                        : f == Family::schroder_perm ? 5
                                                                     : 4; }

void require_regular_options(const Options& opt) {
  if (opt.family == Family::regular) {
    if (opt.class_name.empty())
      throw std::invalid_argument("--class is required with --family regular");
    if (opt.n < 1)
      throw std::invalid_argument("--n must be >= 1 for --family regular");
  } else {
    if (!opt.class_name.empty() || opt.p != 0)
      throw std::invalid_argument("--class/--p apply only to --family regular");
    if (opt.order != "gray")
      throw std::invalid_argument("--order applies only to --family regular");
    if (opt.n < 0) throw std::invalid_argument("--n must be >= 0");
  }
}

std::string render_perm(const Permutation& p, const std::string& format) {
  if (format == "space") return format_permutation(p);
  std::string out;  // compact: digits only, unambiguous through n = 9
  for (int x : p) out += static_cast<char>('0' + x);
  return out;
}

void check_format(const Options& opt) {
  if (opt.format != "space" && opt.format != "compact")
    throw std::invalid_argument("--format must be space or compact");
  if (opt.format == "compact" && opt.n > 9)
    throw std::invalid_argument("--format compact only works through n = 9");
}

// ---------------------------------------------------------------- gen ----

int run_gen(const Options& opt) {
  require_regular_options(opt);
  check_format(opt);
  if (opt.directions && (opt.family != Family::regular || opt.order != "gray"))
    throw std::invalid_argument(
        "--directions needs --family regular --order gray");
  std::ostream& out = std::cout;

  switch (opt.family) {
    case Family::s231:
    case Family::s132:
    case Family::s213:
    case Family::s312:
      stream_pattern3_list(family_pattern(opt.family), opt.n,
                           [&](const Permutation& p) {
                             out << render_perm(p, opt.format) << '\n';
                           });
      break;
    case Family::schroder_path:
      stream_s_paths(opt.n, [&](const PathWord& w) { out << w << '\n'; });
      break;
    case Family::schroder_perm:
      if (opt.n == 0) {
        out << '\n';  // the empty permutation
      } else {
        stream_phi_list(opt.n - 1, [&](const Permutation& p) {
          out << render_perm(p, opt.format) << '\n';
        });
      }
      break;
    case Family::regular: {
      const SuccessionRule rule = make_rule(opt.class_name, opt.p);
      if (opt.order == "tree") {
        gen_avoid(rule, opt.n, [&](const Permutation& p) {
          out << render_perm(p, opt.format) << '\n';
        });
      } else {
        const CList list = build_c_list(rule, opt.n);
        for (const DirectedPermutation& e : list.entries) {
          out << render_perm(e.perm, opt.format);
          if (opt.directions) out << '\t' << (e.up ? "up" : "down");
          out << '\n';
        }
      }
      break;
    }
  }
  return 0;
}

// -------------------------------------------------------------- count ----

BigInt count_regular(const Options& opt) {
  const std::string& c = opt.class_name;
  const int n = opt.n;
  if (c == "312" || c == "321" || (c == "avoid_c" && opt.p == 2))
    return sequence_term(CountFamily::catalan, n);
  if (c == "321_312" || (c == "avoid_a" && opt.p == 2) ||
      (c == "avoid_b" && opt.p == 2))
    return sequence_term(CountFamily::power_of_two, n - 1);
  if (c == "321_3412_4123" || (c == "avoid_b" && opt.p == 3))
    return sequence_term(CountFamily::pell, n);
  if (c == "321_3412" || c == "321_4123" || (c == "avoid_a" && opt.p == 3))
    return sequence_term(CountFamily::fibonacci_even, n);
  if (c == "4321_4312" || c == "4231_4132" || c == "4123_4213" ||
      (c == "avoid_c" && opt.p == 3))
    return sequence_term(CountFamily::schroder, n - 1);
  if (c == "cbc_a" || c == "cbc_b")
    return sequence_term(CountFamily::central_binomial, n - 1);
  // No closed form wired up: stream the tree and count leaves.
  const SuccessionRule rule = make_rule(c, opt.p);
  GenStats stats;
  gen_avoid(rule, n, [](const Permutation&) {}, &stats);
  return stats.outputs;
}

int run_count(const Options& opt) {
  require_regular_options(opt);
  BigInt value;
  switch (opt.family) {
    case Family::s231:
    case Family::s132:
    case Family::s213:
    case Family::s312:
      value = sequence_term(CountFamily::catalan, opt.n);
      break;
    case Family::schroder_path:
      value = sequence_term(CountFamily::schroder, opt.n);
      break;
    case Family::schroder_perm:
      value = opt.n == 0 ? BigInt(1)
                         : sequence_term(CountFamily::schroder, opt.n - 1);
      break;
    case Family::regular:
      value = count_regular(opt);
      break;
  }
  std::cout << value << '\n';
  return 0;
}

// ------------------------------------------------------------- verify ----

std::vector<std::string> read_stdin_lines() {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(std::cin, line)) lines.push_back(line);
  return lines;
}

void print_report(const GrayReport& r, bool distances_enforced) {
  std::cout << "count: " << r.count << '\n';
  std::cout << "max_adjacent_distance: " << r.max_adjacent_distance
            << (distances_enforced ? "" : " (not enforced in tree order)")
            << '\n';
  if (r.circular_distance >= 0)
    std::cout << "circular_distance: " << r.circular_distance << '\n';
  std::cout << "duplicates: " << r.duplicates << '\n';
  std::cout << "oracle: "
            << (r.oracle_match == OracleMatch::matched      ? "matched"
                : r.oracle_match == OracleMatch::mismatched ? "mismatched"
                                                            : "skipped")
            << '\n';
  for (const std::string& d : r.details) std::cout << "  - " << d << '\n';
  std::cout << "result: " << (r.pass ? "pass" : "fail") << '\n';
}

int verify_paths(const Options& opt) {
  std::vector<PathWord> words;
  if (opt.from_stdin) {
    for (const std::string& line : read_stdin_lines()) {
      if (!is_valid_path(line)) {
        std::cerr << "error: not a well-formed path word: '" << line << "'\n";
        return 2;
      }
      words.push_back(line);
    }
    if (words.empty()) {
      std::cerr << "error: no input on stdin\n";
      return 2;
    }
  } else {
    words = build_s_paths(opt.n);
  }

  const int bound = opt.max_dist >= 0 ? opt.max_dist : default_max_dist(opt.family);
  GrayReport report;
  report.count = words.size();
  const int n = path_semilength(words.front());
  bool ok = true;
  for (const PathWord& w : words)
    if (path_semilength(w) != n) {
      report.details.push_back("mixed semilengths in input");
      ok = false;
      break;
    }
  if (opt.n_given && n != opt.n) {
    report.details.push_back("entries have semilength " + std::to_string(n) +
                             ", expected " + std::to_string(opt.n));
    ok = false;
  }
  if (ok) {
    for (std::size_t i = 0; i + 1 < words.size(); ++i) {
      const int d = path_distance(words[i], words[i + 1]);
      report.max_adjacent_distance = std::max(report.max_adjacent_distance, d);
      if (d > bound && report.details.size() < 10)
        report.details.push_back("entries " + std::to_string(i + 1) + " and " +
                                 std::to_string(i + 2) + " differ in " +
                                 std::to_string(d) + " positions");
    }
    if (opt.circular)
      report.circular_distance = path_distance(words.back(), words.front());
    std::set<PathWord> seen(words.begin(), words.end());
    report.duplicates = words.size() - seen.size();
    // Distinct valid words of one semilength: completeness reduces to the
    // count matching the sequence.
    const BigInt expected = sequence_term(CountFamily::schroder, n);
    if (report.duplicates == 0 && BigInt(words.size()) == expected) {
      report.oracle_match = OracleMatch::matched;
    } else {
      report.oracle_match = OracleMatch::mismatched;
      report.details.push_back("expected " + expected.str() + " distinct paths");
    }
    report.pass = report.max_adjacent_distance <= bound &&
                  (!opt.circular || report.circular_distance <= bound) &&
                  report.oracle_match == OracleMatch::matched;
  } else {
    report.pass = false;
  }
  print_report(report, true);
  return report.pass ? 0 : 1;
}

int verify_perms(const Options& opt) {
  PermutationList list;
  if (opt.from_stdin) {
    for (const std::string& line : read_stdin_lines())
      list.push_back(parse_permutation(line));
    if (list.empty()) {
      std::cerr << "error: no input on stdin\n";
      return 2;
    }
  } else {
    switch (opt.family) {
      case Family::s231:
      case Family::s132:
      case Family::s213:
      case Family::s312:
        list = build_pattern3_list(family_pattern(opt.family), opt.n);
        break;
      case Family::schroder_perm:
        list = opt.n == 0 ? PermutationList{Permutation{}}
                          : build_phi_list(opt.n - 1);
        break;
      case Family::regular: {
        const SuccessionRule rule = make_rule(opt.class_name, opt.p);
        if (opt.order == "tree") {
          list = gen_avoid_list(rule, opt.n);
        } else {
          for (DirectedPermutation& e : build_c_list(rule, opt.n).entries)
            list.push_back(std::move(e.perm));
        }
        break;
      }
      default:
        break;
    }
  }

  if (opt.n_given && static_cast<int>(list.front().size()) != opt.n) {
    std::cerr << "error: entries have length " << list.front().size()
              << ", expected " << opt.n << '\n';
    return 2;
  }

  const bool enforce_distances = opt.order != "tree";
  const int bound = opt.max_dist >= 0 ? opt.max_dist : default_max_dist(opt.family);
  GrayReport report = check_gray(list, enforce_distances ? bound : INT_MAX,
                                 opt.circular);

  const int n = static_cast<int>(list.front().size());
  if (n <= 8) {
    const GrayReport completeness =
        check_complete(list, completeness_patterns(opt));
    report.oracle_match = completeness.oracle_match;
    report.pass = report.pass && completeness.pass;
    report.details.insert(report.details.end(), completeness.details.begin(),
                          completeness.details.end());
  }
  print_report(report, enforce_distances);
  return report.pass ? 0 : 1;
}

int run_verify(const Options& opt) {
  if (!opt.from_stdin) require_regular_options(opt);
  if (opt.family == Family::schroder_path) return verify_paths(opt);
  return verify_perms(opt);
}

// ---------------------------------------------------------------- phi ----

int run_phi(const Options& opt) {
  if (!opt.path_word.empty()) {
    std::cout << format_permutation(phi(opt.path_word)) << '\n';
    return 0;
  }
  std::string line;
  while (std::getline(std::cin, line))
    std::cout << format_permutation(phi(line)) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  CLI::App app{
      "Gray code lists of pattern-avoiding permutations and Schroder paths"};
  app.require_subcommand(1);

  Options opt;
  const auto add_common = [&](CLI::App* cmd, bool with_n) {
    cmd->add_option("--family", opt.family, "object family")
        ->required()
        ->transform(CLI::CheckedTransformer(kFamilies, CLI::ignore_case));
    if (with_n) cmd->add_option("--n", opt.n, "object size (list order)");
    cmd->add_option("--class", opt.class_name,
                    "avoidance class for --family regular");
    cmd->add_option("--p", opt.p, "parameter for the avoid_* classes");
  };

  CLI::App* gen = app.add_subcommand("gen", "stream a Gray code list");
  add_common(gen, true);
  gen->add_option("--order", opt.order, "tree or gray (regular only)")
      ->check(CLI::IsMember({"tree", "gray"}));
  gen->add_option("--format", opt.format, "permutation format: space|compact");
  gen->add_flag("--directions", opt.directions,
                "append tab-separated up/down marks (regular gray lists)");

  CLI::App* count = app.add_subcommand("count", "print the list cardinality");
  add_common(count, true);

  CLI::App* verify = app.add_subcommand("verify", "check Gray/completeness properties");
  add_common(verify, true);
  verify->add_option("--order", opt.order, "tree or gray (regular only)")
      ->check(CLI::IsMember({"tree", "gray"}));
  verify->add_option("--max-dist", opt.max_dist,
                     "adjacent distance bound (default: family-specific)");
  verify->add_flag("--circular", opt.circular, "also check the wrap-around pair");
  verify->add_flag("--stdin", opt.from_stdin, "verify lines from stdin instead");

  CLI::App* phi_cmd = app.add_subcommand(
      "phi", "map Schroder path words to permutations");
  phi_cmd->add_option("--path", opt.path_word,
                      "a single path word (otherwise read stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  opt.n_given = (gen->count("--n") + count->count("--n") +
                 verify->count("--n")) > 0;
  try {
    if (gen->parsed()) return run_gen(opt);
    if (count->parsed()) return run_count(opt);
    if (verify->parsed()) return run_verify(opt);
    return run_phi(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
