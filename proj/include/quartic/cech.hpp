#pragma once

// Localized forms on the standard affine cover of the projective plane for the
// universal pair, and the gluing expressions H, F, h, f built from them.

#include "quartic/error.hpp"
#include "quartic/laurent_poly.hpp"
#include "quartic/sparse_poly.hpp"

#include <array>
#include <string>
#include <vector>

namespace quartic {

enum class FormSlot { A, B };

inline int third_index(int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 3 || i == j) throw InvalidInput("indices must be distinct in {1,2,3}");
  return 6 - i - j;
}

/// The universal form A (or B) as a Laurent polynomial.
inline LaurentPoly universal_form(FormSlot which) {
  LaurentPoly r;
  int w = which == FormSlot::A ? 0 : 1;
  for (int i = 1; i <= 3; ++i)
    for (int j = i; j <= 3; ++j) r += LaurentPoly(coeff(w, i, j)) * LaurentPoly::x(i) * LaurentPoly::x(j);
  return r;
}

/// A * x_k^{m+n-2} / (x_i^m x_j^n) for any integers m, n.
inline LaurentPoly shifted_form(FormSlot which, int i, int m, int j, int n) {
  int k = third_index(i, j);
  XExp e;
  e.e[static_cast<std::size_t>(i - 1)] = -m;
  e.e[static_cast<std::size_t>(j - 1)] = -n;
  e.e[static_cast<std::size_t>(k - 1)] = m + n - 2;
  return universal_form(which).shifted(e);
}

/// A_{i^m j^n} (or B_{i^m j^n}) for m, n >= 0, m + n >= 2.
inline LaurentPoly localized_form(FormSlot which, int i, int m, int j, int n) {
  if (m < 0 || n < 0 || m + n < 2)
    throw InvalidInput("localized_form needs m, n >= 0 and m + n >= 2 (got " + std::to_string(m) + ", " +
                       std::to_string(n) + ")");
  return shifted_form(which, i, m, j, n);
}

inline LaurentPoly coeffL(int which, int i, int j) { return LaurentPoly(coeff(which, i, j)); }

inline LaurentPoly lambdaL(int l1, int l2, int l3, int l4) { return LaurentPoly(lambda(l1, l2, l3, l4)); }

/// H_{i,j} = b_kk A_{i^2 j} - a_kk B_{i^2 j} + b_ik A_{ij} - a_ik B_{ij}.
inline LaurentPoly H(int i, int j) {
  int k = third_index(i, j);
  return coeffL(1, k, k) * localized_form(FormSlot::A, i, 2, j, 1) -
         coeffL(0, k, k) * localized_form(FormSlot::B, i, 2, j, 1) +
         coeffL(1, i, k) * localized_form(FormSlot::A, i, 1, j, 1) -
         coeffL(0, i, k) * localized_form(FormSlot::B, i, 1, j, 1);
}

/// F_{ij} = b_kk A_{ij} - a_kk B_{ij}; symmetric in i, j.
inline LaurentPoly F(int i, int j) {
  int k = third_index(i, j);
  return coeffL(1, k, k) * localized_form(FormSlot::A, i, 1, j, 1) -
         coeffL(0, k, k) * localized_form(FormSlot::B, i, 1, j, 1);
}

/// h_{i underlined, j}: the terms of H_{i,j} without x_j in the denominator.
inline LaurentPoly h_first(int i, int j) {
  auto jj = static_cast<std::size_t>(j - 1);
  return H(i, j).filtered([jj](const XExp& e) { return e.e[jj] >= 0; });
}

/// h_{i, j underlined} = H_{i,j} - h_{i underlined, j}.
inline LaurentPoly h_second(int i, int j) { return H(i, j) - h_first(i, j); }

/// f_{i underlined j}: the terms of F_{ij} with x_i in the denominator.
inline LaurentPoly f_under(int i, int j) {
  auto ii = static_cast<std::size_t>(i - 1);
  return F(i, j).filtered([ii](const XExp& e) { return e.e[ii] < 0; });
}

// ---------------------------------------------------------------------------
// Printed expansion of H_{i,j} in lambda brackets: eight terms
// lambda^{l1 l2}_{l3 l4} * x^e, written with symbolic indices i, j, k.

struct HExpansionTerm {
  char l[4];      // each of 'i', 'j', 'k'
  char num[2];    // numerator variables ('-' for none)
  char den[2];    // denominator variables ('-' for none)
};

inline constexpr std::array<HExpansionTerm, 8> kHExpansion = {{
    {{'j', 'j', 'k', 'k'}, {'j', 'k'}, {'i', 'i'}},
    {{'i', 'j', 'k', 'k'}, {'k', '-'}, {'i', '-'}},
    {{'i', 'i', 'k', 'k'}, {'k', '-'}, {'j', '-'}},
    {{'j', 'k', 'k', 'k'}, {'k', 'k'}, {'i', 'i'}},
    {{'j', 'j', 'i', 'k'}, {'j', '-'}, {'i', '-'}},
    {{'i', 'j', 'i', 'k'}, {'-', '-'}, {'-', '-'}},
    {{'i', 'i', 'i', 'k'}, {'i', '-'}, {'j', '-'}},
    {{'j', 'k', 'i', 'k'}, {'k', '-'}, {'i', '-'}},
}};

/// The eight-term lambda expansion of H_{i,j}; `flip` negates one term.
inline LaurentPoly H_expansion(int i, int j, int flip = -1) {
  int k = third_index(i, j);
  auto pick = [&](char c) { return c == 'i' ? i : c == 'j' ? j : k; };
  LaurentPoly r;
  for (std::size_t t = 0; t < kHExpansion.size(); ++t) {
    const auto& term = kHExpansion[t];
    XExp e;
    for (char c : term.num)
      if (c != '-') e.e[static_cast<std::size_t>(pick(c) - 1)] += 1;
    for (char c : term.den)
      if (c != '-') e.e[static_cast<std::size_t>(pick(c) - 1)] -= 1;
    auto v = LaurentPoly::x_monomial(e, lambda(pick(term.l[0]), pick(term.l[1]), pick(term.l[2]), pick(term.l[3])));
    r += static_cast<int>(t) == flip ? -v : v;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Ten-term identity used to bound the exponents of localized generators:
//   b_kk A_{i^m j^n} - a_kk B_{i^m j^n} = sum of the terms below.

struct LemmaTerm {
  int sign;
  int which;      // 0: a coefficient, 1: b coefficient
  char c[2];      // coefficient index pair, symbolic
  FormSlot form;
  int dm, dn;     // exponent shifts on i and j
};

inline constexpr std::array<LemmaTerm, 10> kLemmaTerms = {{
    {-1, 1, {'i', 'k'}, FormSlot::A, -1, 0},
    {+1, 0, {'i', 'k'}, FormSlot::B, -1, 0},
    {-1, 1, {'j', 'k'}, FormSlot::A, 0, -1},
    {+1, 0, {'j', 'k'}, FormSlot::B, 0, -1},
    {+1, 0, {'i', 'j'}, FormSlot::B, -1, -1},
    {-1, 1, {'i', 'j'}, FormSlot::A, -1, -1},
    {-1, 1, {'j', 'j'}, FormSlot::A, 0, -2},
    {+1, 0, {'j', 'j'}, FormSlot::B, 0, -2},
    {-1, 1, {'i', 'i'}, FormSlot::A, -2, 0},
    {+1, 0, {'i', 'i'}, FormSlot::B, -2, 0},
}};

/// Checks the ten-term identity for exponents (m, n) and index order (i, j, k).
/// Shifted exponents may leave the localized range, so the unrestricted form is used.
/// `flip` negates one term of the right-hand side (sensitivity control).
inline bool verify_lemma_identity(int m, int n, int i = 1, int j = 2, int flip = -1) {
  int k = third_index(i, j);
  auto pick = [&](char c) { return c == 'i' ? i : c == 'j' ? j : k; };
  LaurentPoly lhs = coeffL(1, k, k) * shifted_form(FormSlot::A, i, m, j, n) -
                    coeffL(0, k, k) * shifted_form(FormSlot::B, i, m, j, n);
  LaurentPoly rhs;
  for (std::size_t t = 0; t < kLemmaTerms.size(); ++t) {
    const auto& term = kLemmaTerms[t];
    int sign = static_cast<int>(t) == flip ? -term.sign : term.sign;
    LaurentPoly v = coeffL(term.which, pick(term.c[0]), pick(term.c[1])) *
                    shifted_form(term.form, i, m + term.dm, j, n + term.dn);
    rhs += sign > 0 ? v : -v;
  }
  return lhs == rhs;
}

/// x_i^{-2} as a Laurent monomial.
inline LaurentPoly inverse_square(int i) {
  XExp e;
  e.e[static_cast<std::size_t>(i - 1)] = -2;
  return LaurentPoly::x_monomial(e, SparsePoly(1));
}

struct RelationResult {
  std::string name;
  bool pass = false;
  std::string first_diff;
};

inline RelationResult compare_relation(std::string name, const LaurentPoly& lhs, const LaurentPoly& rhs) {
  auto d = LaurentPoly::first_difference(lhs, rhs);
  return {std::move(name), !d.has_value(), d.value_or("")};
}

/// The relations tying the h and f splits together, for every ordered (i, j):
///   h_{j,i_} = -f_{i_k}
///   h_{i_,j} + h_{i_,k} = lam^{ii}_{jk} + a_jk B/x_i^2 - b_jk A/x_i^2
///   F_{ij} = f_{i_j} + f_{j_i} + lam^{ij}_{kk}
///   H_{i,j} = h_{i_,j} + h_{i,j_}
inline std::vector<RelationResult> verify_hf_relations() {
  std::vector<RelationResult> out;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      int k = third_index(i, j);
      std::string ijk = "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
      out.push_back(compare_relation("h(j,_i) = -f(_i,k) " + ijk, h_second(j, i), -f_under(i, k)));
      out.push_back(compare_relation(
          "h(_i,j) + h(_i,k) " + ijk, h_first(i, j) + h_first(i, k),
          lambdaL(i, i, j, k) + coeffL(0, j, k) * universal_form(FormSlot::B) * inverse_square(i) -
              coeffL(1, j, k) * universal_form(FormSlot::A) * inverse_square(i)));
      out.push_back(compare_relation("F split " + ijk, F(i, j), f_under(i, j) + f_under(j, i) + lambdaL(i, j, k, k)));
      out.push_back(compare_relation("H split " + ijk, H(i, j), h_first(i, j) + h_second(i, j)));
    }
  return out;
}

// ---------------------------------------------------------------------------
// Global functions as triples of patch representatives on U_{x1}, U_{x2}, U_{x3}.

using PatchTriple = std::array<LaurentPoly, 3>;

/// True when p is a regular function on U_{x_i}: degree 0 and only x_i in denominators.
inline bool regular_on_patch(const LaurentPoly& p, int i) {
  return p.all_exponents([i](const XExp& e) {
    if (e.degree() != 0) return false;
    for (int s = 1; s <= 3; ++s)
      if (s != i && e.e[static_cast<std::size_t>(s - 1)] < 0) return false;
    return true;
  });
}

/// g1..g4 from the first representative printed in each cell of the generator table.
inline std::array<PatchTriple, 4> generators() {
  return {{
      {LaurentPoly(1), LaurentPoly(1), LaurentPoly(1)},
      {h_first(1, 2), -h_second(1, 2), -f_under(3, 2) + lambdaL(1, 1, 2, 3)},
      {h_second(2, 1), -h_first(2, 1), -h_second(2, 3) + lambdaL(1, 3, 2, 2)},
      {f_under(1, 2), -f_under(2, 1) + lambdaL(3, 3, 1, 2), -h_first(3, 2) + lambdaL(3, 3, 1, 2)},
  }};
}

}  // namespace quartic
