// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include "quartic/quartic.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace quartic;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

Outcome delone_faddeev_roundtrip() {
  int n = 0;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c)
        for (int d = -2; d <= 2; ++d) {
          BinaryCubicForm<Integer> f{a, b, c, d};
          if (!(binary_cubic_from_cubic_ring(cubic_ring_from_binary_cubic(f)) == f))
            return {false, "roundtrip fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                               std::to_string(c) + "," + std::to_string(d) + ")"};
          ++n;
        }
  return {n == 625, std::to_string(n) + " binary cubics"};
}

Outcome universal_associativity() {
  auto r = verify_universal_associativity();
  return {r.pass, r.pass ? "exact identity in 12 variables" : r.detail};
}

Outcome universal_resolvent_identity() {
  auto r = verify_universal_resolvent_identity();
  return {r.pass, r.pass ? "spanning set and generic x, y" : r.detail};
}

Outcome discriminant_equality() {
  std::mt19937_64 rng(20240601);
  int failures = 0;
  for (int n = 0; n < 1000; ++n) {
    auto p = random_pair(rng, 5);
    auto f = resolvent_cubic_form(p);
    Integer dq = ring_discriminant(quartic_ring_from_pair(p));
    Integer df = disc_binary_cubic(f);
    Integer dc = ring_discriminant(cubic_ring_from_binary_cubic(f));
    failures += !(dq == df && df == dc);
  }
  DiscMode mode = DiscMode::Symbolic;
  auto sym = verify_universal_disc_equality(UniversalOptions{}, mode);
  std::string m = mode == DiscMode::Symbolic ? "symbolic" : "specialization";
  return {failures == 0 && sym.pass,
          "1000 random pairs, " + std::to_string(failures) + " failures; universal identity " +
              (sym.pass ? "holds" : "fails") + " (mode " + m + ", " + sym.detail + ")"};
}

std::string matrix_str(const IntMatrix3& u) { return matrix_to_json(u).dump(); }

Outcome degenerate_fixtures() {
  std::ostringstream d;
  bool ok = true;
  auto zero = quartic_ring_from_pair(DoubleTernaryForm<Integer>{});
  bool zero_ok = zero == IntTable{};
  ok = ok && zero_ok;
  d << "zero pair " << (zero_ok ? "zero table" : "nonzero table");

  auto t1 = quartic_ring_from_pair(pair_from_strings("x1*x2", "x1*x3"));
  auto b1 = find_isomorphism(t1, canonical_split_square_zero());
  ok = ok && b1.has_value();
  d << "; (x1x2,x1x3) ~ Z+Z[z1,z2]/(z1,z2)^2 " << (b1 ? "via u=" + matrix_str(b1->u) : "not found");

  auto t2 = quartic_ring_from_pair(pair_from_strings("x1*x2", "x1^2"));
  auto b2 = find_isomorphism(t2, canonical_local_cubed());
  ok = ok && b2.has_value();
  d << "; (x1x2,x1^2) ~ Z[z1,z2]/(z1^3,z1z2,z2^2) " << (b2 ? "via u=" + matrix_str(b2->u) : "not found");

  auto ts = quartic_ring_from_pair(pair_from_strings("x1^2+x1*x3", "x2^2+x2*x3"));
  auto idem = find_orthogonal_idempotents(ts);
  bool split_ok = ring_discriminant(ts) == 1 && idem.has_value();
  ok = ok && split_ok;
  d << "; split pair disc " << ring_discriminant(ts) << (idem ? " with 4 orthogonal idempotents" : " without idempotents");

  for (long q : {2L, 3L, 5L}) {
    auto p = scaled_split_pair(q);
    auto t = quartic_ring_from_pair(p);
    Integer q6 = Integer(q) * q * q * q * q * q;
    Integer disc = ring_discriminant(t);
    Embedding em;
    try {
      em = split_embedding(p, t);
    } catch (const Error& e) {
      d << "; q=" << q << " embedding failed: " << e.what();
      ok = false;
      continue;
    }
    bool q_ok = disc == q6 * q6 && em.index == q6;
    ok = ok && q_ok;
    d << "; q=" << q << " disc " << disc << " index " << em.index;
  }
  return {ok, d.str()};
}

Outcome cech_suite() {
  auto text = read_text_file(QUARTIC_DATA_DIR "/cech_charts.txt");
  auto suite = run_cech_suite(text);
  std::size_t lemma = 0, errata = 0;
  for (const auto& c : suite.checks) {
    lemma += c.name.rfind("lemma", 0) == 0;
    errata += c.detail.rfind("erratum confirmed", 0) == 0;
  }
  auto rows = mutable_rows(text);
  std::mt19937_64 rng(5);
  int caught = 0;
  for (int n = 0; n < 10; ++n) {
    auto line = rows[static_cast<std::size_t>(bounded_draw(rng, 0, static_cast<long long>(rows.size()) - 1))];
    auto mutated = flip_sign(text, line, static_cast<std::size_t>(bounded_draw(rng, 0, 7)));
    caught += !verify_fixture_text(mutated).all_pass();
  }
  std::ostringstream d;
  d << suite.checks.size() << " checks (" << lemma << " lemma instances), " << errata
    << " printed errata confirmed and replaced by corrected rows, " << caught << "/10 sign mutations caught";
  if (const auto* f = suite.first_failure()) d << "; first failure " << f->name << " : " << f->detail;
  return {suite.all_pass() && caught == 10, d.str()};
}

Outcome gamma_equivariance() {
  std::mt19937_64 rng(77);
  int failures = 0;
  for (int n = 0; n < 100; ++n) {
    auto p = random_pair(rng, 2);
    auto g = random_gamma(rng, 2);
    failures += !(quartic_ring_from_pair(act_gamma(p, g)) ==
                  apply_basis_change(quartic_ring_from_pair(p), BasisChange{dual(g.g), {}}));
  }
  return {failures == 0, "100 random (pair, gamma), " + std::to_string(failures) + " failures"};
}

Outcome pair_roundtrip() {
  std::mt19937_64 rng(88);
  int failures = 0;
  for (int n = 0; n < 100; ++n) {
    auto p = random_pair(rng, 5);
    auto t = quartic_ring_from_pair(p);
    auto c = cubic_ring_from_binary_cubic(resolvent_cubic_form(p));
    try {
      failures += !(pair_from_based_quartic(t, c, p) == p && quartic_ring_from_pair(p) == t);
    } catch (const Error&) {
      ++failures;
    }
  }
  return {failures == 0, "100 random pairs, " + std::to_string(failures) + " failures"};
}

Outcome spectrum_oracle() {
  std::mt19937_64 rng(99);
  int tried = 0, passed = 0, classical = 0, flipped_rejected = 0;
  double worst = 0;
  while (tried < 50) {
    auto p = random_pair(rng, 4);
    if (disc_binary_cubic(resolvent_cubic_form(p)).is_zero()) continue;
    ++tried;
    try {
      auto rep = verify_spectrum_report(p);
      passed += rep.pass;
      worst = std::max({worst, rep.max_eigen_error, rep.max_cross_patch_error, rep.max_charpoly_error});
      auto f = resolvent_cubic_form(p);
      auto cl = verify_classical_resolvent(p, f);
      classical += cl.pass;
      worst = std::max(worst, cl.max_error);
      BinaryCubicForm<Integer> flipped{f.a, -f.b, f.c, -f.d};
      flipped_rejected += flipped == f || !verify_classical_resolvent(p, flipped).pass;
    } catch (const Error&) {
    }
  }
  auto split = verify_spectrum_report(pair_from_strings("x1^2+x1*x3", "x2^2+x2*x3"));
  std::vector<double> eig;
  for (const auto& v : split.eigenvalues[0]) eig.push_back(std::round(v.real()));
  std::sort(eig.begin(), eig.end());
  bool split_ok = split.pass && eig == std::vector<double>{-1, -1, 0, 0};
  std::ostringstream d;
  d << passed << "/50 random pairs at tol 1e-8, classical resolvent " << classical << "/50, z -> -z rejected "
    << flipped_rejected << "/50 (worst relative error " << worst << "); split pair alpha1 spectrum "
    << (split_ok ? "{-1,-1,0,0}" : "mismatch");
  return {passed == 50 && classical == 50 && flipped_rejected == 50 && split_ok, d.str()};
}

Outcome scan_determinism() {
  ScanOptions opt;
  opt.bound = 1;
  opt.count = 100;
  opt.seed = 42;
  auto a = scan_csv(run_scan(opt));
  auto b = scan_csv(run_scan(opt));
  opt.jobs = 4;
  auto c = scan_csv(run_scan(opt));
  return {a == b && a == c, std::to_string(a.size()) + " bytes, identical across two runs and with 4 workers"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Delone-Faddeev roundtrip", delone_faddeev_roundtrip},
      {"universal associativity", universal_associativity},
      {"universal resolvent identity", universal_resolvent_identity},
      {"discriminant equality", discriminant_equality},
      {"degenerate and scaled fixtures", degenerate_fixtures},
      {"Cech suite", cech_suite},
      {"Gamma equivariance", gamma_equivariance},
      {"pair roundtrip", pair_roundtrip},
      {"spectrum oracle", spectrum_oracle},
      {"scan determinism", scan_determinism},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(Clock::now() - t0).count();
    all = all && o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << i + 1 << ". " << criteria[i].first << " [" << s << " s] : " << o.detail
              << std::endl;
  }
  return all ? 0 : 1;
}
