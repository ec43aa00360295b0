#include "quartic/cech.hpp"
#include "quartic/cech_fixture.hpp"
#include "quartic/forms.hpp"
#include "quartic/random.hpp"
#include "quartic/suites.hpp"

#include <catch_amalgamated.hpp>

#include <complex>

using namespace quartic;

namespace {

LaurentPoly L(const char* s) { return LaurentPoly(SparsePoly::parse(s)); }

std::vector<Integer> split_values() {
  return coefficient_values(pair_from_strings("x1^2+x1*x3", "x2^2+x2*x3"));
}

std::string charts() { return read_text_file(QUARTIC_DATA_DIR "/cech_charts.txt"); }

}  // namespace

TEST_CASE("localized forms") {
  auto A12 = localized_form(FormSlot::A, 1, 1, 2, 1);
  CHECK(A12.size() == 6);
  CHECK(A12 * L("x1*x2") == universal_form(FormSlot::A));
  CHECK(localized_form(FormSlot::B, 1, 2, 2, 1) * L("x1^2*x2") == universal_form(FormSlot::B) * L("x3"));
  // A = x2^2 + x2 x3
  std::vector<Integer> v(kCoeffVarCount, Integer(0));
  v[static_cast<std::size_t>(Var::a22)] = 1;
  v[static_cast<std::size_t>(Var::a23)] = 1;
  CHECK(A12.specialize(v) == L("x2") * LaurentPoly::x(1, -1) + L("x3") * LaurentPoly::x(1, -1));
  CHECK_THROWS_AS(localized_form(FormSlot::A, 1, 1, 2, 0), InvalidInput);
  CHECK_THROWS_AS(localized_form(FormSlot::A, 1, -1, 2, 3), InvalidInput);
}

TEST_CASE("H expansion") {
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (i != j) CHECK(H(i, j) == H_expansion(i, j));
  for (int t = 0; t < 8; ++t) CHECK_FALSE(H(1, 2) == H_expansion(1, 2, t));
}

TEST_CASE("H at the split pair") {
  auto h = H(1, 2).specialize(split_values());
  CHECK(h == -(L("x2") + L("x3")) * LaurentPoly::x(1, -1));
}

TEST_CASE("h and f relations") {
  CHECK(h_second(2, 1) == -f_under(1, 3));
  for (const auto& r : verify_hf_relations()) {
    INFO(r.name << " " << r.first_diff);
    CHECK(r.pass);
  }
  CHECK(F(1, 2) == F(2, 1));
}

TEST_CASE("ten-term lemma") {
  CHECK(verify_lemma_identity(2, 2, 1, 2));
  CHECK(verify_lemma_identity(3, 1, 2, 3));
  CHECK_FALSE(verify_lemma_identity(2, 2, 1, 2, 0));
  for (int t = 0; t < 10; ++t) CHECK_FALSE(verify_lemma_identity(2, 2, 1, 2, t));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      for (int total = 4; total <= 5; ++total)
        for (int m = 1; m < total; ++m) CHECK(verify_lemma_identity(m, total - m, i, j));
    }
}

TEST_CASE("generators at the split pair") {
  using cplx = std::complex<double>;
  auto gens = generators();
  CHECK(gens[0][0] == LaurentPoly(1));
  auto vals = split_values();
  // Points (0:0:1), (0:1:-1), (1:0:-1), (1:1:-1) and the g2 values there.
  std::array<std::array<cplx, 3>, 4> pts{{{0, 0, 1}, {0, 1, -1}, {1, 0, -1}, {1, 1, -1}}};
  std::array<double, 4> expected{1, 0, 1, 0};
  for (std::size_t n = 0; n < 4; ++n)
    for (int i = 1; i <= 3; ++i) {
      if (std::abs(pts[n][static_cast<std::size_t>(i - 1)]) == 0) continue;
      auto v = gens[1][static_cast<std::size_t>(i - 1)].evaluate(vals, pts[n]);
      CHECK(std::abs(v - expected[n]) < 1e-12);
    }
  // (1:1:-1) through U_x2 and U_x3.
  auto via2 = gens[1][1].evaluate(vals, pts[3]);
  auto via3 = gens[1][2].evaluate(vals, pts[3]);
  CHECK(std::abs(via2) < 1e-12);
  CHECK(std::abs(via3) < 1e-12);
}

TEST_CASE("chart fixture passes") {
  auto rep = verify_fixture_text(charts());
  INFO((rep.first_failure() ? rep.first_failure()->row + " " + rep.first_failure()->first_diff : ""));
  CHECK(rep.all_pass());
  CHECK(rep.errata() == 4);
  auto j = rep.to_json();
  REQUIRE(j.is_array());
  REQUIRE_FALSE(j.empty());
  CHECK(j[0].contains("row"));
  CHECK(j[0].contains("status"));
  CHECK(j[0].contains("firstDiff"));
}

TEST_CASE("chart rows from the printed examples") {
  CHECK(verify_fixture_text("chart g2\npatch 1 : h(_1,2)\npatch 2 : -h(1,_2)\n"
                            "diff 12 : h(_1,2) + h(1,_2) = H(1,2)\n")
            .all_pass());
  CHECK(verify_fixture_text("chart g3\npatch 1 : h(2,_1)\npatch 3 : f(_3,1) + lam(13,22)\n"
                            "diff 13 : h(2,_1) - f(_3,1) - lam(13,22) = -F(1,3)\n")
            .all_pass());
  CHECK_THROWS_AS(verify_fixture_text("chart g2\ndiff 12 : h(_1,2) + h(1,_2) = H(1,2)\n"), InvalidInput);
  CHECK(verify_fixture_text("chart g2\ncell 1 : h(_1,2) = -h(_1,3) + lam(11,23) mod a23*B/x1^2 - b23*A/x1^2\n")
            .all_pass());
}

TEST_CASE("a corrected erratum row is reported") {
  auto rep = verify_fixture_text("chart g4\nerratum cell 1 : F(1,2) = F(2,1)\n");
  REQUIRE(rep.rows.size() == 1);
  CHECK(rep.rows[0].status == RowStatus::ErratumUnexpectedPass);
  CHECK_FALSE(rep.all_pass());
}

TEST_CASE("malformed fixture rows are rejected") {
  CHECK_THROWS_AS(verify_fixture_text("chart g2\ndiff 12 : h(_1,2) + = H(1,2)\n"), InvalidInput);
  CHECK_THROWS_AS(verify_fixture_text("chart g2\nbogus 12 : 1\n"), InvalidInput);
}

TEST_CASE("single sign mutations are caught") {
  auto text = charts();
  auto rows = mutable_rows(text);
  REQUIRE(rows.size() >= 10);
  std::mt19937_64 rng(41);
  for (int n = 0; n < 10; ++n) {
    std::size_t line = rows[static_cast<std::size_t>(bounded_draw(rng, 0, static_cast<long long>(rows.size()) - 1))];
    auto occ = static_cast<std::size_t>(bounded_draw(rng, 0, 7));
    auto mutated = flip_sign(text, line, occ);
    INFO("line " << line + 1 << " occurrence " << occ);
    CHECK_FALSE(verify_fixture_text(mutated).all_pass());
  }
}

TEST_CASE("cech suite") {
  auto s = run_cech_suite(charts());
  INFO(format_suite(s));
  CHECK(s.all_pass());
}
