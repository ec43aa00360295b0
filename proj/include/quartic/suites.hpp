#pragma once

// Verification suites as flat lists of named checks.

#include "quartic/cech.hpp"
#include "quartic/cech_fixture.hpp"
#include "quartic/universal.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace quartic {

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::vector<CheckLine> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  const CheckLine* first_failure() const {
    for (const auto& c : checks)
      if (!c.pass) return &c;
    return nullptr;
  }

  void append(const SuiteResult& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }
};

inline SuiteResult run_universal_suite(const UniversalOptions& opt = {}) {
  SuiteResult s;
  auto rep = verify_universal_identities(opt);
  for (const auto& r : rep.results) {
    std::ostringstream d;
    d << r.detail << (r.detail.empty() ? "" : ", ") << r.seconds << " s";
    if (r.name == "discriminant equality")
      d << ", mode " << (rep.disc_mode == DiscMode::Symbolic ? "symbolic" : "specialization");
    s.checks.push_back({"universal " + r.name, r.pass, d.str()});
  }
  return s;
}

/// Builtin Laurent identities: the H expansion, the ten-term lemma, the h/f relations
/// and regularity of the generator representatives.
inline SuiteResult run_cech_identities() {
  SuiteResult s;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      auto d = LaurentPoly::first_difference(H(i, j), H_expansion(i, j));
      s.checks.push_back({"H expansion (" + std::to_string(i) + "," + std::to_string(j) + ")", !d, d.value_or("")});
    }
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      for (int total = 4; total <= 5; ++total)
        for (int m = 1; m < total; ++m) {
          int n = total - m;
          bool ok = verify_lemma_identity(m, n, i, j);
          s.checks.push_back({"lemma (m,n)=(" + std::to_string(m) + "," + std::to_string(n) + ") (i,j)=(" +
                                  std::to_string(i) + "," + std::to_string(j) + ")",
                              ok, ok ? "" : "identity fails"});
        }
    }
  for (const auto& r : verify_hf_relations()) s.checks.push_back({"relation " + r.name, r.pass, r.first_diff});
  auto gens = generators();
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (int i = 1; i <= 3; ++i) {
      bool ok = regular_on_patch(gens[g][static_cast<std::size_t>(i - 1)], i);
      s.checks.push_back({"g" + std::to_string(g + 1) + " regular on U_x" + std::to_string(i), ok,
                          ok ? "" : "representative has a forbidden denominator"});
    }
  return s;
}

/// One check per fixture row. Erratum rows pass when the printed form is confirmed wrong;
/// the detail line records it.
inline SuiteResult run_cech_fixture(const std::string& text) {
  SuiteResult s;
  auto rep = verify_fixture_text(text);
  for (const auto& r : rep.rows) {
    std::string detail = r.first_diff;
    if (r.status == RowStatus::ErratumConfirmed) detail = "erratum confirmed: printed form fails (" + detail + ")";
    if (r.status == RowStatus::ErratumUnexpectedPass) detail = "erratum row unexpectedly holds";
    s.checks.push_back({"chart " + r.row, r.ok(), detail});
  }
  return s;
}

inline SuiteResult run_cech_suite(const std::string& fixture_text) {
  SuiteResult s = run_cech_identities();
  s.append(run_cech_fixture(fixture_text));
  return s;
}

inline std::string format_suite(const SuiteResult& s) {
  std::ostringstream os;
  for (const auto& c : s.checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << " : " << c.detail;
    os << '\n';
  }
  return os.str();
}

}  // namespace quartic
