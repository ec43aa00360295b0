#include "quartic/quartic.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#ifndef QUARTIC_DEFAULT_FIXTURES
#define QUARTIC_DEFAULT_FIXTURES "data/cech_charts.txt"
#endif

namespace {

using namespace quartic;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;

int cmd_build(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << '\n';
    return kBadInput;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  DoubleTernaryForm<Integer> p;
  try {
    p = pair_from_json(parse_json_text(ss.str()));
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }

  json report;
  bool ok = true;
  try {
    auto t = quartic_ring_from_pair(p);
    auto f = resolvent_cubic_form(p);
    auto c = cubic_ring_from_binary_cubic(f);
    Integer dq = ring_discriminant(t), df = disc_binary_cubic(f), dc = ring_discriminant(c);
    json checks;
    checks["quarticAssociative"] = check_associativity(t).empty();
    checks["cubicAssociative"] = check_associativity(c).empty();
    checks["resolventIdentity"] = check_resolvent_identity(p, t);
    checks["discriminantsEqual"] = dq == df && df == dc;
    checks["cubicRoundtrip"] = binary_cubic_from_cubic_ring(c) == f;
    bool roundtrip = false;
    try {
      roundtrip = pair_from_based_quartic(t, c, p) == p;
    } catch (const Error&) {
    }
    checks["pairRoundtrip"] = roundtrip;
    for (const auto& [k, v] : checks.items()) ok = ok && v.get<bool>();
    report["pair"] = pair_to_json(p);
    report["quartic"] = table_to_json(t);
    report["cubic"] = table_to_json(c);
    report["resolventCubic"] = cubic_form_to_json(f);
    report["discriminant"] = {{"quartic", integer_to_json(dq)}, {"cubic", integer_to_json(df)}};
    report["checks"] = checks;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  std::cout << report.dump(2) << '\n';
  return ok ? kOk : kCheckFailed;
}

int cmd_verify(const std::string& suite, const std::string& fixtures, const std::string& disc_mode, bool as_json) {
  SuiteResult result;
  if (suite == "universal" || suite == "all") {
    UniversalOptions opt;
    opt.symbolic_disc = disc_mode == "symbolic";
    result.append(run_universal_suite(opt));
  }
  std::string text;
  if (suite == "cech" || suite == "all") {
    try {
      text = read_text_file(fixtures);
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kBadInput;
    }
    try {
      result.append(run_cech_suite(text));
    } catch (const InvalidInput& e) {
      std::cerr << "error: fixture file " << fixtures << ": " << e.what() << '\n';
      return kBadInput;
    }
  }
  std::string out = format_suite(result);
  if (as_json && !text.empty()) out += verify_fixture_text(text).to_json().dump(2) + "\n";
  std::cout << out;
  if (const auto* f = result.first_failure()) {
    std::cerr << "first failure: " << f->name << (f->detail.empty() ? "" : " : " + f->detail) << '\n';
    return kCheckFailed;
  }
  return kOk;
}

int cmd_scan(const ScanOptions& opt) {
  std::vector<ScanRecord> records;
  try {
    records = run_scan(opt);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  std::cout << scan_csv(records);
  for (const auto& r : records)
    if (!r.healthy()) return kCheckFailed;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quartic rings from pairs of ternary quadratic forms"};
  app.require_subcommand(1);

  std::string build_file;
  auto* build = app.add_subcommand("build", "Build the quartic ring and cubic resolvent of a pair (JSON file)");
  build->add_option("file", build_file, "Pair JSON {\"A\": [a11,a22,a33,a12,a13,a23], \"B\": [...]}")->required();

  std::string suite = "all", fixtures = QUARTIC_DEFAULT_FIXTURES, disc_mode = "symbolic";
  bool as_json = false;
  auto* verify = app.add_subcommand("verify", "Run the identity suites");
  verify->add_option("--suite", suite, "universal, cech or all")
      ->check(CLI::IsMember({"universal", "cech", "all"}));
  verify->add_option("--fixtures", fixtures, "Chart fixture file");
  verify->add_option("--disc-mode", disc_mode, "symbolic or specialization")
      ->check(CLI::IsMember({"symbolic", "specialization"}));
  verify->add_flag("--json", as_json, "Also print the chart report as JSON");

  ScanOptions scan_opt;
  auto* scan = app.add_subcommand("scan", "Scan a coefficient box and emit CSV");
  scan->add_option("--bound", scan_opt.bound, "Coefficient bound")->required()->check(CLI::PositiveNumber);
  scan->add_option("--count", scan_opt.count, "Number of pairs; 0 exhausts a small box")->required();
  scan->add_option("--seed", scan_opt.seed, "Seed for mt19937_64")->required();
  scan->add_flag("--with-spectrum", scan_opt.with_spectrum, "Run the numerical spectrum check");
  scan->add_option("--jobs", scan_opt.jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  if (*build) return cmd_build(build_file);
  if (*verify) return cmd_verify(suite, fixtures, disc_mode, as_json);
  if (*scan) return cmd_scan(scan_opt);
  return kBadInput;
}
