#include "quartic/forms.hpp"
#include "quartic/random.hpp"
#include "quartic/rings.hpp"

#include <catch_amalgamated.hpp>

using namespace quartic;

namespace {

using Cubic = BinaryCubicForm<Integer>;
using Elem3 = CubicRingTable<Integer>::Element;
using Elem4 = QuarticRingTable<Integer>::Element;

DoubleTernaryForm<Integer> split_pair() { return pair_from_strings("x1^2+x1*x3", "x2^2+x2*x3"); }

}  // namespace

TEST_CASE("cubic_ring_from_binary_cubic examples") {
  auto t = cubic_ring_from_binary_cubic(Cubic{1, 0, 0, 1});
  CHECK(t.product(1, 2) == Elem3{-1, 0, 0});
  CHECK(t.product(1, 1) == Elem3{0, 0, -1});
  CHECK(t.product(2, 2) == Elem3{0, 1, 0});
  CHECK(cubic_ring_from_binary_cubic(Cubic{}) == CubicRingTable<Integer>{});
  auto u = cubic_ring_from_binary_cubic(Cubic{1, 1, 1, 1});
  CHECK(u.product(1, 2) == Elem3{-1, 0, 0});
  CHECK(u.product(1, 1) == Elem3{-1, 1, -1});
  CHECK(u.product(2, 2) == Elem3{-1, 1, -1});
  CHECK(is_normalized(u));
}

TEST_CASE("cubic ring discriminant matches the form") {
  CHECK(ring_discriminant(cubic_ring_from_binary_cubic(Cubic{1, 0, 0, 1})) == -27);
  std::mt19937_64 rng(21);
  for (int n = 0; n < 100; ++n) {
    Cubic f{bounded_draw(rng, -9, 9), bounded_draw(rng, -9, 9), bounded_draw(rng, -9, 9), bounded_draw(rng, -9, 9)};
    CHECK(ring_discriminant(cubic_ring_from_binary_cubic(f)) == disc_binary_cubic(f));
  }
}

TEST_CASE("binary_cubic_from_cubic_ring examples") {
  auto t = cubic_ring_from_binary_cubic(Cubic{1, 0, 0, 1});
  CHECK(binary_cubic_from_cubic_ring(t) == Cubic{1, 0, 0, 1});
  CHECK(binary_cubic_from_cubic_ring(CubicRingTable<Integer>{}) == Cubic{});

  // omega -> omega + 3, theta -> theta + 2 applied to the table of (1,1,1,1).
  auto shifted = shift_basis(cubic_ring_from_binary_cubic(Cubic{1, 1, 1, 1}), std::array<Integer, 2>{3, 2});
  CHECK(shifted.product(1, 2) == Elem3{-7, 2, 3});
  CHECK_FALSE(is_normalized(shifted));
  CHECK(binary_cubic_from_cubic_ring(shifted) == Cubic{1, 1, 1, 1});
}

TEST_CASE("binary_cubic_from_cubic_ring rejects non-associative tables") {
  auto t = cubic_ring_from_binary_cubic(Cubic{1, 1, 1, 1});
  t.set_m(1, 1, 0, t.m(1, 1, 0) + 1);
  try {
    binary_cubic_from_cubic_ring(t);
    FAIL("expected NotAssociative");
  } catch (const NotAssociative& e) {
    CHECK(std::string(e.what()).find("triple") != std::string::npos);
  }
}

TEST_CASE("cubic roundtrip on a box") {
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c)
        for (int d = -2; d <= 2; ++d) {
          Cubic f{a, b, c, d};
          REQUIRE(binary_cubic_from_cubic_ring(cubic_ring_from_binary_cubic(f)) == f);
        }
}

TEST_CASE("quartic_ring_from_pair examples") {
  CHECK(quartic_ring_from_pair(DoubleTernaryForm<Integer>{}) == QuarticRingTable<Integer>{});
  auto t = quartic_ring_from_pair(split_pair());
  CHECK(t.m(1, 2, 3) == -1);
  CHECK(ring_discriminant(t) == 1);
  CHECK(is_normalized(t));
  CHECK(check_associativity(t).empty());
  // Split-pair table in full.
  CHECK(t.product(1, 1) == Elem4{0, -1, 0, 0});
  CHECK(t.product(1, 2) == Elem4{0, 0, 0, -1});
  CHECK(t.product(1, 3) == Elem4{0, 0, 0, -1});
  CHECK(t.product(2, 2) == Elem4{0, 0, -1, 0});
  CHECK(t.product(2, 3) == Elem4{0, 0, 0, -1});
  CHECK(t.product(3, 3) == Elem4{0, 0, 0, -1});
}

TEST_CASE("ring_discriminant examples") {
  CHECK(ring_discriminant(QuarticRingTable<Integer>{}) == 0);
  CHECK(ring_discriminant(quartic_ring_from_pair(split_pair())) == 1);
}

TEST_CASE("associativity checker") {
  CHECK(check_associativity(QuarticRingTable<Integer>{}).empty());
  auto t = quartic_ring_from_pair(split_pair());
  t.set_m(1, 1, 0, t.m(1, 1, 0) + 1);
  auto v = check_associativity(t);
  REQUIRE_FALSE(v.empty());
  CHECK_THROWS_AS(require_associative(t), NotAssociative);
}

TEST_CASE("resolvent identity checker") {
  auto p = split_pair();
  auto t = quartic_ring_from_pair(p);
  CHECK(check_resolvent_identity(p, t));
  CHECK_FALSE(check_resolvent_identity(p, t, -1));
  CHECK(check_resolvent_identity(DoubleTernaryForm<Integer>{}, QuarticRingTable<Integer>{}));
  std::mt19937_64 rng(22);
  for (int n = 0; n < 30; ++n) {
    auto q = random_pair(rng, 5);
    auto tq = quartic_ring_from_pair(q);
    CHECK(check_resolvent_identity(q, tq));
    bool any_lambda = false;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) any_lambda = any_lambda || q.A.c[i] * q.B.c[j] != q.B.c[i] * q.A.c[j];
    if (any_lambda) CHECK_FALSE(check_resolvent_identity(q, tq, -1));
  }
}

TEST_CASE("random pairs give normalized associative tables with equal discriminants") {
  std::mt19937_64 rng(23);
  for (int n = 0; n < 200; ++n) {
    auto p = random_pair(rng, 5);
    auto t = quartic_ring_from_pair(p);
    REQUIRE(is_normalized(t));
    REQUIRE(check_associativity(t).empty());
    auto f = resolvent_cubic_form(p);
    Integer d = ring_discriminant(t);
    CHECK(d == disc_binary_cubic(f));
    CHECK(d == ring_discriminant(cubic_ring_from_binary_cubic(f)));
  }
}

TEST_CASE("apply_basis_change") {
  auto p = split_pair();
  auto t = quartic_ring_from_pair(p);
  CHECK(apply_basis_change(t, BasisChange{}) == t);

  GammaElement swap;
  swap.g = {{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}};
  swap.h = {{{0, 1}, {1, 0}}};
  CHECK(apply_basis_change(t, BasisChange{dual(swap.g), {}}) == t);

  // Shifts only move the lift, which renormalization removes.
  CHECK(apply_basis_change(t, BasisChange{identity3(), {5, -2, 7}}) == t);

  IntMatrix3 two{{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  CHECK_THROWS_AS(apply_basis_change(t, BasisChange{two, {}}), InvalidInput);
}

TEST_CASE("Gamma equivariance") {
  std::mt19937_64 rng(24);
  for (int n = 0; n < 100; ++n) {
    auto p = random_pair(rng, 2);
    auto g = random_gamma(rng, 2);
    CHECK(quartic_ring_from_pair(act_gamma(p, g)) ==
          apply_basis_change(quartic_ring_from_pair(p), BasisChange{dual(g.g), {}}));
  }
}

TEST_CASE("pair_from_based_quartic") {
  auto p = split_pair();
  auto t = quartic_ring_from_pair(p);
  auto c = cubic_ring_from_binary_cubic(resolvent_cubic_form(p));
  CHECK(pair_from_based_quartic(t, c, p) == p);
  DoubleTernaryForm<Integer> zero;
  CHECK(pair_from_based_quartic(QuarticRingTable<Integer>{}, CubicRingTable<Integer>{}, zero) == zero);

  auto wrong_cubic = cubic_ring_from_binary_cubic(Cubic{1, 0, 0, 1});
  CHECK_THROWS_AS(pair_from_based_quartic(t, wrong_cubic, p), PreconditionFailed);
  auto other = pair_from_strings("x1^2+x1*x3", "x2^2-x2*x3");
  CHECK_THROWS_AS(pair_from_based_quartic(t, c, other), PreconditionFailed);
  auto broken = t;
  broken.set_m(2, 3, 0, t.m(2, 3, 0) + 1);
  CHECK_THROWS_AS(pair_from_based_quartic(broken, c, p), NotAssociative);

  std::mt19937_64 rng(25);
  for (int n = 0; n < 100; ++n) {
    auto q = random_pair(rng, 5);
    auto tq = quartic_ring_from_pair(q);
    auto cq = cubic_ring_from_binary_cubic(resolvent_cubic_form(q));
    REQUIRE(pair_from_based_quartic(tq, cq, q) == q);
    // Table -> pair -> table.
    REQUIRE(quartic_ring_from_pair(pair_from_based_quartic(tq, cq, q)) == tq);
  }
}

TEST_CASE("permutation signs") {
  CHECK(permutation_sign(1, 2, 3) == 1);
  CHECK(permutation_sign(2, 3, 1) == 1);
  CHECK(permutation_sign(3, 1, 2) == 1);
  CHECK(permutation_sign(2, 1, 3) == -1);
  CHECK(permutation_sign(1, 3, 2) == -1);
  CHECK(permutation_sign(3, 2, 1) == -1);
}
