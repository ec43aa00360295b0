#include "quartic/forms.hpp"
#include "quartic/random.hpp"

#include <catch_amalgamated.hpp>

#include <boost/multiprecision/cpp_int.hpp>

using namespace quartic;

namespace {

TernaryQuadraticForm<Integer> Q(const char* s) { return ternary_from_poly(SparsePoly::parse(s)); }

DoubleTernaryForm<Integer> split_pair() { return pair_from_strings("x1^2+x1*x3", "x2^2+x2*x3"); }

IntVector3 V(long a, long b, long c) { return {Integer(a), Integer(b), Integer(c)}; }

}  // namespace

TEST_CASE("evaluate_ternary") {
  CHECK(evaluate_ternary(Q("x1^2+x1*x3"), V(1, 0, 1)) == 2);
  CHECK(evaluate_ternary(TernaryQuadraticForm<Integer>{}, V(7, -3, 2)) == 0);
  CHECK(evaluate_ternary(Q("x1*x2"), V(2, 3, 5)) == 6);
}

TEST_CASE("evaluation is homogeneous of degree 2") {
  std::mt19937_64 rng(1);
  for (int n = 0; n < 50; ++n) {
    auto p = random_pair(rng, 5);
    IntVector3 v{bounded_draw(rng, -9, 9), bounded_draw(rng, -9, 9), bounded_draw(rng, -9, 9)};
    Integer t = bounded_draw(rng, -6, 6);
    IntVector3 tv{t * v[0], t * v[1], t * v[2]};
    CHECK(evaluate_ternary(p.A, tv) == t * t * evaluate_ternary(p.A, v));
  }
}

TEST_CASE("resolvent_cubic_form examples") {
  // Split pair under the frozen sign convention; the discriminant is the convention-free check.
  auto f = resolvent_cubic_form(split_pair());
  CHECK(f == BinaryCubicForm<Integer>{0, 1, -1, 0});
  CHECK(disc_binary_cubic(f) == 1);
  CHECK(resolvent_cubic_form(DoubleTernaryForm<Integer>{}) == BinaryCubicForm<Integer>{});
  DoubleTernaryForm<Integer> id{Q("x1^2+x2^2+x3^2"), {}};
  CHECK(resolvent_cubic_form(id) == BinaryCubicForm<Integer>{4, 0, 0, 0});
}

TEST_CASE("resolvent equals 4 Det computed with rational matrices") {
  using boost::multiprecision::cpp_rational;
  std::mt19937_64 rng(2);
  auto matrix = [](const TernaryQuadraticForm<Integer>& q) {
    std::array<std::array<cpp_rational, 3>, 3> m;
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        m[i - 1][j - 1] = i == j ? cpp_rational(q.coeff(i, i)) : cpp_rational(q.coeff(i, j)) / 2;
    return m;
  };
  auto det = [](const std::array<std::array<cpp_rational, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  for (int n = 0; n < 40; ++n) {
    auto p = random_pair(rng, 6);
    auto f = resolvent_cubic_form(p);
    auto MA = matrix(p.A), MB = matrix(p.B);
    for (int y = -2; y <= 2; ++y)
      for (int z = -2; z <= 2; ++z) {
        std::array<std::array<cpp_rational, 3>, 3> m;
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) m[i][j] = MA[i][j] * y - MB[i][j] * z;
        CHECK(cpp_rational(f.evaluate(y, z)) == 4 * det(m));
      }
  }
}

TEST_CASE("resolvent is cubic in the pair") {
  std::mt19937_64 rng(3);
  for (int n = 0; n < 30; ++n) {
    auto p = random_pair(rng, 4);
    Integer t = bounded_draw(rng, -5, 5);
    auto f = resolvent_cubic_form(p), g = resolvent_cubic_form(p.scaled(t));
    Integer t3 = t * t * t;
    CHECK(g == BinaryCubicForm<Integer>{t3 * f.a, t3 * f.b, t3 * f.c, t3 * f.d});
  }
}

TEST_CASE("disc_binary_cubic examples") {
  CHECK(disc_binary_cubic(BinaryCubicForm<Integer>{1, 0, 0, 1}) == -27);
  CHECK(disc_binary_cubic(BinaryCubicForm<Integer>{0, -1, -1, 0}) == 1);
  CHECK(disc_binary_cubic(BinaryCubicForm<Integer>{1, -1, -1, 1}) == 0);
}

TEST_CASE("act_gamma examples") {
  auto p = split_pair();
  CHECK(act_gamma(p, GammaElement{}) == p);

  GammaElement swap;
  swap.g = {{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}};
  swap.h = {{{0, 1}, {1, 0}}};
  CHECK(act_gamma(p, swap) == p);

  GammaElement mix;
  mix.h = {{{1, 1}, {0, 1}}};
  auto q = act_gamma(p, mix);
  CHECK(q.A == p.A + p.B);
  CHECK(q.B == p.B);

  GammaElement bad;
  bad.g = {{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  CHECK_THROWS_AS(act_gamma(p, bad), InvalidInput);
  GammaElement sign_mismatch;
  sign_mismatch.h = {{{0, 1}, {1, 0}}};
  CHECK_THROWS_AS(act_gamma(p, sign_mismatch), InvalidInput);
}

TEST_CASE("act_gamma substitutes x -> x g") {
  DoubleTernaryForm<Integer> p{Q("x1^2"), Q("x2*x3")};
  GammaElement s;
  s.g = {{{1, 0, 0}, {1, 1, 0}, {0, 0, 1}}};  // (x g)_1 = x1 + x2
  auto q = act_gamma(p, s);
  CHECK(q.A == Q("x1^2 + 2*x1*x2 + x2^2"));
  CHECK(q.B == Q("x2*x3"));
}

TEST_CASE("group action law") {
  std::mt19937_64 rng(4);
  for (int n = 0; n < 40; ++n) {
    auto p = random_pair(rng, 4);
    auto g1 = random_gamma(rng, 2), g2 = random_gamma(rng, 2);
    CHECK(act_gamma(act_gamma(p, g1), g2) == act_gamma(p, compose(g2, g1)));
  }
}

TEST_CASE("discriminant is Gamma invariant") {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 40; ++n) {
    auto p = random_pair(rng, 4);
    auto g = random_gamma(rng, 2);
    CHECK(disc_binary_cubic(resolvent_cubic_form(act_gamma(p, g))) == disc_binary_cubic(resolvent_cubic_form(p)));
  }
}

TEST_CASE("evaluate_resolvent_map") {
  CHECK(evaluate_resolvent_map(split_pair(), V(1, 0, 0)) == std::array<Integer, 2>{0, 1});
  CHECK(evaluate_resolvent_map(split_pair(), V(1, 1, 1)) == std::array<Integer, 2>{2, 2});
  CHECK(evaluate_resolvent_map(DoubleTernaryForm<Integer>{}, V(3, -1, 4)) == std::array<Integer, 2>{0, 0});
}

TEST_CASE("dual is transpose inverse") {
  std::mt19937_64 rng(6);
  for (int n = 0; n < 20; ++n) {
    auto g = random_unimodular3(rng, 2);
    CHECK(mul3(transpose3(dual(g)), g) == identity3());
  }
  IntMatrix3 singular{{{1, 2, 3}, {2, 4, 6}, {0, 0, 1}}};
  CHECK_THROWS_AS(dual(singular), InvalidInput);
}

TEST_CASE("universal pair is generic") {
  auto u = universal_pair();
  CHECK(u.A.coeff(1, 2) == SparsePoly::var(Var::a12));
  CHECK(u.B.coeff(3, 3) == SparsePoly::var(Var::b33));
  auto f = resolvent_cubic_form(u);
  CHECK(f.a.is_homogeneous(3));
  CHECK(f.a == SparsePoly::parse("4*a11*a22*a33 + a12*a13*a23 - a11*a23^2 - a22*a13^2 - a33*a12^2"));
}
