#include "quartic/random.hpp"
#include "quartic/universal.hpp"

#include <catch_amalgamated.hpp>

using namespace quartic;

TEST_CASE("universal table entries") {
  const auto& t = universal_quartic_table();
  CHECK(t.m(1, 2, 3) == SparsePoly::parse("a22*b11 - b22*a11"));
  CHECK(t.m(1, 2, 1).is_zero());
  CHECK(t.m(1, 2, 2).is_zero());
  CHECK(t.m(1, 3, 1).is_zero());
  for (int i = 1; i <= 3; ++i)
    for (int j = i; j <= 3; ++j) {
      CHECK(t.m(i, j, 0).is_homogeneous(4));
      for (int k = 1; k <= 3; ++k) CHECK(t.m(i, j, k).is_homogeneous(2));
    }
}

TEST_CASE("structure constants follow the signed lambda formulas") {
  const auto& t = universal_quartic_table();
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      int k = 6 - i - j;
      SparsePoly s(permutation_sign(i, j, k));
      CHECK(t.m(i, j, k) == s * lambda(j, j, i, i));
      CHECK(t.m(i, i, k) == s * lambda(i, j, i, i));
      CHECK(t.m(j, k, k) - t.m(i, j, i) == s * lambda(j, j, i, k));
    }
}

TEST_CASE("specialization commutes with construction") {
  std::mt19937_64 rng(31);
  for (int n = 0; n < 40; ++n) {
    auto p = random_pair(rng, 6);
    auto vals = coefficient_values(p);
    CHECK(specialize(universal_quartic_table(), vals) == quartic_ring_from_pair(p));
  }
  auto split = pair_from_strings("x1^2+x1*x3", "x2^2+x2*x3");
  CHECK(specialize(universal_quartic_table(), coefficient_values(split)) == quartic_ring_from_pair(split));
}

TEST_CASE("universal identities hold") {
  auto rep = verify_universal_identities();
  REQUIRE(rep.results.size() == 3);
  for (const auto& r : rep.results) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.pass);
  }
  CHECK(rep.disc_mode == DiscMode::Symbolic);
}

TEST_CASE("discriminant identity by specialization") {
  UniversalOptions opt;
  opt.symbolic_disc = false;
  DiscMode mode = DiscMode::Symbolic;
  auto r = verify_universal_disc_equality(opt, mode);
  CHECK(r.pass);
  CHECK(mode == DiscMode::Specialization);
  CHECK(r.detail.find("200") != std::string::npos);
}

TEST_CASE("discriminant identity at the split pair") {
  auto vals = coefficient_values(pair_from_strings("x1^2+x1*x3", "x2^2+x2*x3"));
  CHECK(ring_discriminant(specialize(universal_quartic_table(), vals)) == 1);
  CHECK(disc_binary_cubic(resolvent_cubic_form(universal_pair())).eval(vals) == 1);
}

TEST_CASE("perturbed universal table is detected") {
  auto t = universal_quartic_table();
  t.set_m(1, 1, 0, t.m(1, 1, 0) + SparsePoly(1));
  CHECK_FALSE(check_associativity(t).empty());
  auto u = universal_quartic_table();
  u.set_m(2, 3, 1, u.m(2, 3, 1) + SparsePoly::var(Var::a11) * SparsePoly::var(Var::b22));
  CHECK_FALSE(check_resolvent_identity(universal_pair(), u));
}

TEST_CASE("resolvent identity fails with the opposite orientation") {
  CHECK_FALSE(check_resolvent_identity(universal_pair(), universal_quartic_table(), -1));
}
