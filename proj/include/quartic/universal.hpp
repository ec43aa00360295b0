#pragma once

// The quartic ring of the universal pair and the polynomial identities it
// satisfies in the twelve coefficient variables.

#include "quartic/forms.hpp"
#include "quartic/random.hpp"
#include "quartic/rings.hpp"
#include "quartic/sparse_poly.hpp"

#include <chrono>
#include <random>
#include <string>
#include <vector>

namespace quartic {

inline const QuarticRingTable<SparsePoly>& universal_quartic_table() {
  static const QuarticRingTable<SparsePoly> table = quartic_ring_from_pair(universal_pair());
  return table;
}

/// Integer table obtained by substituting values for the twelve coefficients.
inline QuarticRingTable<Integer> specialize(const QuarticRingTable<SparsePoly>& t, std::span<const Integer> values) {
  QuarticRingTable<Integer> r;
  for (int i = 1; i <= 3; ++i)
    for (int j = i; j <= 3; ++j)
      for (int k = 0; k <= 3; ++k) r.set_m(i, j, k, t.m(i, j, k).eval(values));
  return r;
}

enum class DiscMode { Symbolic, Specialization };

struct IdentityResult {
  std::string name;
  bool pass = false;
  std::string detail;  // first differing monomial, or a note
  double seconds = 0;
};

struct UniversalReport {
  std::vector<IdentityResult> results;
  DiscMode disc_mode = DiscMode::Symbolic;

  bool all_pass() const {
    for (const auto& r : results)
      if (!r.pass) return false;
    return true;
  }
};

struct UniversalOptions {
  // Prove the discriminant identity as a polynomial identity; when false, compare
  // at random integer specializations instead.
  bool symbolic_disc = true;
  int specialization_points = 200;
  long specialization_range = 1000;
  std::uint64_t seed = 20240601;
};

namespace detail {

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline std::string first_term(const SparsePoly& p) {
  if (p.is_zero()) return {};
  const auto& [m, c] = p.terms().front();
  return c.str() + "*" + (m.str().empty() ? "1" : m.str());
}

}  // namespace detail

inline IdentityResult verify_universal_associativity() {
  auto t0 = std::chrono::steady_clock::now();
  auto v = check_associativity(universal_quartic_table());
  IdentityResult r{"associativity", v.empty(), {}, 0};
  if (!v.empty()) {
    std::size_t r_idx = 0;
    while (v.front().difference[r_idx].is_zero()) ++r_idx;
    r.detail = "triple (" + std::to_string(v.front().i) + "," + std::to_string(v.front().j) + "," +
               std::to_string(v.front().k) + "), first differing monomial " +
               detail::first_term(v.front().difference[r_idx]);
  }
  r.seconds = detail::seconds_since(t0);
  return r;
}

inline IdentityResult verify_universal_resolvent_identity() {
  auto t0 = std::chrono::steady_clock::now();
  auto rc = check_resolvent_identity_report(universal_pair(), universal_quartic_table());
  IdentityResult r{"resolvent identity", rc.holds, rc.detail, 0};
  r.seconds = detail::seconds_since(t0);
  return r;
}

inline IdentityResult verify_universal_disc_equality(const UniversalOptions& opt, DiscMode& mode) {
  auto t0 = std::chrono::steady_clock::now();
  const auto& table = universal_quartic_table();
  SparsePoly disc_cubic = disc_binary_cubic(resolvent_cubic_form(universal_pair()));
  IdentityResult r{"discriminant equality", false, {}, 0};
  if (opt.symbolic_disc) {
    mode = DiscMode::Symbolic;
    SparsePoly disc_quartic = ring_discriminant(table);
    SparsePoly diff = disc_quartic - disc_cubic;
    r.pass = diff.is_zero();
    r.detail = r.pass ? "symbolic identity, " + std::to_string(disc_cubic.size()) + " terms"
                      : "first differing monomial " + detail::first_term(diff);
  } else {
    mode = DiscMode::Specialization;
    std::mt19937_64 rng(opt.seed);
    r.pass = true;
    for (int n = 0; n < opt.specialization_points && r.pass; ++n) {
      std::vector<Integer> vals(kVarCount, Integer(0));
      for (std::size_t i = 0; i < kCoeffVarCount; ++i)
        vals[i] = bounded_draw(rng, -opt.specialization_range, opt.specialization_range);
      Integer lhs = ring_discriminant(specialize(table, vals));
      Integer rhs = disc_cubic.eval(vals);
      if (lhs != rhs) {
        r.pass = false;
        r.detail = "specialization " + std::to_string(n) + ": " + lhs.str() + " != " + rhs.str();
      }
    }
    if (r.pass) r.detail = std::to_string(opt.specialization_points) + " random specializations (fallback mode)";
  }
  r.seconds = detail::seconds_since(t0);
  return r;
}

inline UniversalReport verify_universal_identities(const UniversalOptions& opt = {}) {
  UniversalReport rep;
  rep.results.push_back(verify_universal_associativity());
  rep.results.push_back(verify_universal_resolvent_identity());
  rep.results.push_back(verify_universal_disc_equality(opt, rep.disc_mode));
  return rep;
}

}  // namespace quartic
