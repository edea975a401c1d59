// overpart: counting, series, maps and audits for overpartition identities.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 precondition or membership error.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "overpart/overpart.hpp"

namespace {

using namespace overpart;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Countable = std::variant<FamilySpec, SignedSpec>;

Countable parse_countable(const std::string& name, int k) {
  if (auto s = parse_signed(name, k)) return *s;
  try {
    return parse_family(name, k);
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
}

std::string countable_name(const Countable& c) {
  return std::visit(
      [](const auto& spec) {
        if constexpr (std::is_same_v<std::decay_t<decltype(spec)>, FamilySpec>)
          return family_name(spec);
        else
          return signed_name(spec);
      },
      c);
}

BigInt count_of(const Countable& c, int n) {
  if (const auto* f = std::get_if<FamilySpec>(&c)) return count_family(*f, n);
  return signed_count(std::get<SignedSpec>(c), n).value;
}

void require_nonnegative(int v, const char* what) {
  if (v < 0) throw usage_error(std::string(what) + " must be nonnegative");
}

std::vector<Theorem> theorems_for(const std::string& name) {
  if (name == "ALL") return {Theorem::t1, Theorem::t2, Theorem::t3, Theorem::t4e, Theorem::t4o};
  if (auto t = parse_theorem(name)) return {*t};
  throw usage_error("unknown theorem: " + name + " (expected T1, T2, T3, T4e, T4o or ALL)");
}

int min_n(Theorem t) { return t == Theorem::t1 ? 2 : 3; }

// n ranges: an explicit --n, else --n-min (default: smallest valid) .. --n-max.
struct Range {
  int n = -1;
  int n_min = -1;
  int n_max = -1;

  [[nodiscard]] std::pair<int, int> bounds(int floor) const {
    if (n >= 0) {
      if (n < floor) throw usage_error("n=" + std::to_string(n) + " is below the validity bound " + std::to_string(floor));
      return {n, n};
    }
    if (n_max < 0) throw usage_error("one of --n or --n-max is required");
    const int lo = n_min >= 0 ? std::max(n_min, floor) : floor;
    return {lo, n_max};
  }
};

// ---------------------------------------------------------------------------

int cmd_count(std::ostream& out, const std::string& family, int n, int k) {
  require_nonnegative(n, "n");
  out << count_of(parse_countable(family, k), n).str() << "\n";
  return kExitOk;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int cmd_table(std::ostream& out, const std::string& families, int n_max, int k, const std::string& fmt) {
  require_nonnegative(n_max, "n-max");
  std::vector<Countable> cols;
  for (const auto& name : split_commas(families)) cols.push_back(parse_countable(name, k));
  if (cols.empty()) throw usage_error("--families needs at least one family");

  std::vector<std::vector<BigInt>> values(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (int n = 0; n <= n_max; ++n) values[c].push_back(count_of(cols[c], n));

  if (fmt == "json") {
    // One family: the plain row array; several: an object keyed by family.
    nlohmann::json doc = nlohmann::json::object();
    for (std::size_t c = 0; c < cols.size(); ++c) {
      nlohmann::json rows = nlohmann::json::array();
      for (int n = 0; n <= n_max; ++n) rows.push_back({{"n", n}, {"count", values[c][n].str()}});
      doc[countable_name(cols[c])] = std::move(rows);
    }
    out << (cols.size() == 1 ? doc.begin().value() : doc).dump() << "\n";
    return kExitOk;
  }
  const char sep = fmt == "csv" ? ',' : '\t';
  out << "n";
  for (const auto& c : cols) out << sep << countable_name(c);
  out << "\n";
  for (int n = 0; n <= n_max; ++n) {
    out << n;
    for (std::size_t c = 0; c < cols.size(); ++c) out << sep << values[c][n].str();
    out << "\n";
  }
  return kExitOk;
}

int cmd_verify(std::ostream& out, const std::string& identity, const Range& range) {
  std::vector<Identity> ids;
  if (identity == "ALL")
    ids = {Identity::t1,  Identity::t2,  Identity::t3, Identity::t4e, Identity::t4o, Identity::derivation_sum,
           Identity::derivation_difference};
  else if (identity == "T1") ids = {Identity::t1};
  else if (identity == "T2") ids = {Identity::t2};
  else if (identity == "T3") ids = {Identity::t3};
  else if (identity == "T4e") ids = {Identity::t4e};
  else if (identity == "T4o") ids = {Identity::t4o};
  else if (identity == "DERIV") ids = {Identity::derivation_sum, Identity::derivation_difference};
  else throw usage_error("unknown identity: " + identity + " (expected T1, T2, T3, T4e, T4o, DERIV or ALL)");

  CountCache cache;
  bool all_ok = true;
  for (Identity id : ids) {
    const auto [lo, hi] = range.bounds(identity_min_n(id));
    int passed = 0;
    int total = 0;
    for (int n = lo; n <= hi; ++n) {
      const IdentityCheck c = check_identity(id, n, cache);
      ++total;
      if (c.passed()) ++passed;
      out << identity_name(id) << " n=" << n << ": " << c.lhs.str() << " = " << c.rhs.str()
          << (c.reproduces ? "" : " (does not reproduce the unrefined identity)") << "  "
          << (c.passed() ? "PASS" : "FAIL") << "  [" << c.statement << "]\n";
    }
    out << identity_name(id) << ": " << passed << "/" << total << " passed\n";
    all_ok = all_ok && passed == total;
  }
  return all_ok ? kExitOk : kExitFailed;
}

int cmd_map(std::ostream& out, const std::string& theorem_arg, const std::string& input, const std::string& source_arg,
            int n, const std::string& variant, const std::string& fmt) {
  require_nonnegative(n, "n");
  std::string theorem_name_arg = theorem_arg;
  if (theorem_arg == "T4") {
    if (variant == "E" || variant == "e") theorem_name_arg = "T4e";
    else if (variant == "O" || variant == "o") theorem_name_arg = "T4o";
    else throw usage_error("T4 needs --variant E or O");
  }
  const auto theorem = parse_theorem(theorem_name_arg);
  if (!theorem) throw usage_error("unknown theorem: " + theorem_arg);
  const auto source = parse_source(source_arg);
  if (!source) throw usage_error("unknown source tag: " + source_arg + " (expected N, N-1 or N-2)");

  OverPartition pi;
  try {
    pi = parse(input);
  } catch (const parse_error& e) {
    throw usage_error(std::string("bad --input: ") + e.what());
  }
  const MapTrace tr = apply_map(*theorem, pi, *source, n);
  if (fmt == "json") {
    out << to_json(tr).dump() << "\n";
  } else {
    out << "branch " << tr.branch << "\n"
        << "output " << format(tr.output) << "\n"
        << "target " << tr.target << "\n"
        << "signFlip " << (tr.sign_flip ? "true" : "false") << "\n";
  }
  return kExitOk;
}

void print_report(std::ostream& out, const VerificationReport& r) {
  const std::string status = r.passed() ? "PASS" : "FAIL";
  out << theorem_name(r.theorem) << " n=" << r.n << ": ";
  if (r.t3) {
    const T3Blocks& b = *r.t3;
    out << "matching sizes " << b.paired_domain << "/" << b.odd_images << ", even-s block " << b.even_sources
        << "->" << b.even_images << ", signed " << b.signed_lhs.str() << " = " << b.signed_rhs.str();
  } else {
    out << (r.injective && r.surjective ? "bijective" : "not bijective") << ", " << r.domain_size << " = "
        << r.codomain_size;
    if (r.theorem == Theorem::t1) out << (r.inverse_ok ? ", inverse ok" : ", inverse FAILED");
  }
  out << "  " << status << "\n";
  out << "  branches:";
  for (const auto& [branch, count] : r.branch_counts) out << " " << branch << "=" << count;
  out << "\n";
  for (const Violation& v : r.violations)
    out << "  violation: " << format(v.trace.input) << " [" << v.trace.branch << "]: " << v.reason << "\n";
}

int cmd_check_bijection(std::ostream& out, const std::string& theorem_arg, const Range& range, bool golden) {
  bool all_ok = true;
  for (Theorem t : theorems_for(theorem_arg)) {
    const auto [lo, hi] = range.bounds(min_n(t));
    for (int n = lo; n <= hi; ++n) {
      const VerificationReport r = verify(t, n);
      print_report(out, r);
      if (golden) out << golden_listing(t, n);
      all_ok = all_ok && r.passed();
    }
  }
  return all_ok ? kExitOk : kExitFailed;
}

int cmd_series(std::ostream& out, const std::string& family, int k, int z, int order) {
  if (order < 1) throw usage_error("order must be at least 1");
  if (z != 1 && z != -1) throw usage_error("z must be +1 or -1");
  const Countable c = parse_countable(family, k);
  Series s(order);
  if (const auto* sp = std::get_if<SignedSpec>(&c)) {
    if (z != 1) throw usage_error("signed families take no --z");
    s = signed_series(*sp, order);
  } else {
    try {
      s = family_series(std::get<FamilySpec>(c), z, order);
    } catch (const std::invalid_argument& e) {
      throw usage_error(e.what());
    }
  }
  for (int n = 0; n <= order; ++n) out << n << "\t" << s[n].str() << "\n";
  return kExitOk;
}

int cmd_selftest(std::ostream& out, int n_max, int k_max, int order) {
  require_nonnegative(n_max, "n-max");
  if (k_max < 1) throw usage_error("k-max must be at least 1");
  if (order < n_max) throw usage_error("order must be at least n-max");
  const SelftestResult r = selftest(n_max, k_max, order);
  for (const OracleMismatch& m : r.mismatches)
    out << "MISMATCH " << m.family << " n=" << m.n << " enum=" << m.enumerated.str() << " series=" << m.series.str()
        << "\n";
  out << "selftest: " << r.checks << " checks, " << r.mismatches.size() << " mismatches  "
      << (r.passed() ? "PASS" : "FAIL") << "\n";
  return r.passed() ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Overpartition counting, generating functions, bijections and identity audits"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "Write output to this file instead of stdout");

  std::string family, families, fmt = "text", theorem, input, source = "N", variant;
  std::string z_arg = "+1";
  int n = -1, k = 1, n_max = -1, n_min = -1, k_max = 4;
  int order = 0;
  bool golden = false;

  auto* count = app.add_subcommand("count", "Print a family count or signed count");
  count->add_option("family", family, "pbar, spt<k>, spt<k>o, pe, pex, poex, be<k>, bo<k>, ce, co, "
                                      "spt<k>o-prime, poex-prime")
      ->required();
  count->add_option("n", n, "Weight")->required();
  count->add_option("--k", k, "k for sptk/sptko/bek/bok/sptko-prime");

  auto* table = app.add_subcommand("table", "Tabulate counts for n = 0..n-max");
  table->add_option("--families", families, "Comma-separated family names")->required();
  table->add_option("--n-max", n_max)->required();
  table->add_option("--k", k);
  table->add_option("--format", fmt)->check(CLI::IsMember({"text", "csv", "json"}));

  auto* verify_cmd = app.add_subcommand("verify", "Check identities on enumeration counts");
  verify_cmd->add_option("identity", theorem, "T1, T2, T3, T4e, T4o, DERIV or ALL")->required();
  verify_cmd->add_option("--n-max", n_max)->required();
  verify_cmd->add_option("--n-min", n_min);

  auto* map_cmd = app.add_subcommand("map", "Apply one map and print its trace");
  map_cmd->add_option("theorem", theorem, "T1, T2, T3, T4e, T4o, or T4 with --variant")->required();
  map_cmd->add_option("--input", input, "Overpartition literal, e.g. 6o,2,1")->required();
  map_cmd->add_option("--source", source, "N, N-1 or N-2");
  map_cmd->add_option("--n", n)->required();
  map_cmd->add_option("--variant", variant, "E or O (T4 only)");
  map_cmd->add_option("--format", fmt)->check(CLI::IsMember({"text", "json"}));

  auto* check = app.add_subcommand("check-bijection", "Audit a map over its whole domain");
  check->add_option("theorem", theorem, "T1, T2, T3, T4e, T4o or ALL")->required();
  auto* n_opt = check->add_option("--n", n);
  auto* n_max_opt = check->add_option("--n-max", n_max);
  check->add_option("--n-min", n_min);
  n_opt->excludes(n_max_opt);
  check->add_flag("--golden", golden, "Also list every image grouped by branch");

  auto* series = app.add_subcommand("series", "Print generating-function coefficients");
  series->add_option("family", family)->required();
  series->add_option("--k", k);
  series->add_option("--z", z_arg, "+1 or -1 (sptko and poex only)");
  series->add_option("--order", order, "Truncation order (default $OVERPART_ORDER or 200)");

  auto* self = app.add_subcommand("selftest", "Cross-check enumeration against the series oracle");
  self->add_option("--n-max", n_max)->required();
  self->add_option("--k-max", k_max);
  self->add_option("--order", order);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  std::unique_ptr<std::ofstream> file;
  if (!out_path.empty()) {
    file = std::make_unique<std::ofstream>(out_path);
    if (!*file) {
      std::cerr << "cannot open " << out_path << "\n";
      return kExitUsage;
    }
  }
  std::ostream& out = file ? *file : std::cout;

  try {
    if (order == 0) order = default_order();
    const Range range{n, n_min, n_max};
    if (*count) return cmd_count(out, family, n, k);
    if (*table) return cmd_table(out, families, n_max, k, fmt);
    if (*verify_cmd) return cmd_verify(out, theorem, range);
    if (*map_cmd) return cmd_map(out, theorem, input, source, n, variant, fmt);
    if (*check) return cmd_check_bijection(out, theorem, range, golden);
    if (*series) {
      int z = 0;
      if (z_arg == "+1" || z_arg == "1") z = 1;
      else if (z_arg == "-1") z = -1;
      else throw usage_error("z must be +1 or -1");
      return cmd_series(out, family, k, z, order);
    }
    if (*self) return cmd_selftest(out, n_max, k_max, order);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const precondition_error& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
