#pragma once

// Degenerate and scaled example pairs: explicit isomorphisms onto canonical
// tables, idempotent splittings, and the embedding of a scaled order in Z^4.

#include "quartic/forms.hpp"
#include "quartic/linalg.hpp"
#include "quartic/oracle.hpp"
#include "quartic/rings.hpp"

#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace quartic {

using IntTable = QuarticRingTable<Integer>;

/// Z x Z[z1,z2]/(z1,z2)^2 on the basis 1, e, z1, z2: e^2 = e, everything else zero.
inline IntTable canonical_split_square_zero() {
  IntTable t;
  t.set_m(1, 1, 1, 1);
  return t;
}

/// Z[z1,z2]/(z1^3, z1 z2, z2^2) on the basis 1, z1, z1^2, z2.
inline IntTable canonical_local_cubed() {
  IntTable t;
  t.set_m(1, 1, 2, 1);
  return t;
}

/// Searches unimodular u with entries in [-bound, bound] (small entries first) such that
/// apply_basis_change(t, {u, 0}) == target. The lift is renormalized, so shifts are implied.
inline std::optional<BasisChange> find_isomorphism(const IntTable& t, const IntTable& target, int bound = 2) {
  for (int b = 1; b <= bound; ++b) {
    const int width = 2 * b + 1;
    long long total = 1;
    for (int i = 0; i < 9; ++i) total *= width;
    for (long long code = 0; code < total; ++code) {
      IntMatrix3 u;
      long long c = code;
      int maxabs = 0;
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t s = 0; s < 3; ++s) {
          int v = static_cast<int>(c % width) - b;
          c /= width;
          u[r][s] = v;
          maxabs = std::max(maxabs, std::abs(v));
        }
      if (maxabs != b) continue;  // covered by a smaller box
      Integer d = det3(u);
      if (d != 1 && d != -1) continue;
      BasisChange bc{u, {}};
      if (apply_basis_change(t, bc) == target) return bc;
    }
  }
  return std::nullopt;
}

/// Nontrivial idempotents x = x0 + x1 q1 + x2 q2 + x3 q3 with entries in [-bound, bound].
inline std::vector<IntTable::Element> find_idempotents(const IntTable& t, int bound = 2) {
  std::vector<IntTable::Element> out;
  const int width = 2 * bound + 1;
  for (int code = 0; code < width * width * width * width; ++code) {
    IntTable::Element x;
    int c = code;
    for (auto& v : x) {
      v = c % width - bound;
      c /= width;
    }
    if (t.multiply(x, x) != x) continue;
    if (x == IntTable::unit() || x == IntTable::Element{}) continue;
    out.push_back(x);
  }
  return out;
}

/// Four pairwise orthogonal idempotents summing to 1, if the small search finds them.
inline std::optional<std::array<IntTable::Element, 4>> find_orthogonal_idempotents(const IntTable& t, int bound = 2) {
  auto ids = find_idempotents(t, bound);
  std::vector<IntTable::Element> prim;
  IntTable::Element zero{};
  // Primitive candidates: idempotents e with no smaller idempotent f, f e = f, f != e.
  for (const auto& e : ids) {
    bool primitive = true;
    for (const auto& f : ids)
      if (f != e && t.multiply(f, e) == f) primitive = false;
    if (primitive) prim.push_back(e);
  }
  for (std::size_t a = 0; a < prim.size(); ++a)
    for (std::size_t b = a + 1; b < prim.size(); ++b)
      for (std::size_t c = b + 1; c < prim.size(); ++c)
        for (std::size_t d = c + 1; d < prim.size(); ++d) {
          std::array<IntTable::Element, 4> e{prim[a], prim[b], prim[c], prim[d]};
          bool ok = true;
          IntTable::Element sum{};
          for (std::size_t i = 0; i < 4 && ok; ++i) {
            for (std::size_t k = 0; k < 4; ++k) sum[k] += e[i][k];
            for (std::size_t j = i + 1; j < 4 && ok; ++j) ok = t.multiply(e[i], e[j]) == zero;
          }
          if (ok && sum == IntTable::unit()) return e;
        }
  return std::nullopt;
}

/// (q(x1^2 + x1x3), q(x2^2 + x2x3)).
inline DoubleTernaryForm<Integer> scaled_split_pair(long q) {
  return pair_from_strings("x1^2+x1*x3", "x2^2+x2*x3").scaled(Integer(q));
}

struct Embedding {
  Matrix<Integer> rows;  // row i: image of basis element i (1, q1, q2, q3) in Z^4
  Integer index;         // |det|
  std::vector<Integer> smith;
};

/// Embeds a split quartic ring in Z^4 through the values of q1, q2, q3 at the four
/// common zeros of the pair. The values are rounded and the map is then checked to be an
/// injective ring homomorphism exactly.
inline Embedding split_embedding(const DoubleTernaryForm<Integer>& p, const IntTable& t) {
  auto pts = intersect_conics(p);
  Embedding em;
  em.rows.assign(4, std::vector<Integer>(4, Integer(1)));
  for (std::size_t r = 0; r < 4; ++r)
    for (int i = 1; i <= 3; ++i) {
      cplx v = -generator_value(p, i + 1, pts.points[r]).first;
      double re = std::round(v.real());
      if (std::abs(v.imag()) > 1e-6 || std::abs(v.real() - re) > 1e-6)
        throw PreconditionFailed("ring does not split over Z at the common zeros");
      em.rows[static_cast<std::size_t>(i)][r] = static_cast<long long>(re);
    }
  // Ring homomorphism: image(q_i q_j) = image(q_i) * image(q_j) componentwise.
  for (int i = 1; i <= 3; ++i)
    for (int j = i; j <= 3; ++j)
      for (std::size_t r = 0; r < 4; ++r) {
        Integer lhs = 0;
        for (std::size_t k = 0; k < 4; ++k) lhs += t.m(i, j, static_cast<int>(k)) * em.rows[k][r];
        Integer rhs = em.rows[static_cast<std::size_t>(i)][r] * em.rows[static_cast<std::size_t>(j)][r];
        if (lhs != rhs) throw InternalDefect("point evaluation is not multiplicative");
      }
  em.index = abs(determinant(em.rows));
  if (em.index.is_zero()) throw PreconditionFailed("point evaluation is not injective");
  em.smith = smith_diagonal(em.rows);
  return em;
}

}  // namespace quartic
