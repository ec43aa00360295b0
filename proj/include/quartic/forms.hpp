#pragma once

// Ternary quadratic forms, pairs of them, binary cubic forms and the action of
// GL3 x GL2 on pairs. Everything is generic over the scalar ring so the same
// code runs on integers and on universal symbolic coefficients.

#include "quartic/error.hpp"
#include "quartic/integer.hpp"
#include "quartic/sparse_poly.hpp"

#include <array>
#include <string>

namespace quartic {

template <typename S>
struct TernaryQuadraticForm {
  // a11, a22, a33, a12, a13, a23
  std::array<S, 6> c{S(0), S(0), S(0), S(0), S(0), S(0)};

  /// Coefficient of x_i x_j (1-based, unordered). Cross terms are stored whole.
  const S& coeff(int i, int j) const { return c[static_cast<std::size_t>(coeff_slot(i, j))]; }
  S& coeff(int i, int j) { return c[static_cast<std::size_t>(coeff_slot(i, j))]; }

  friend bool operator==(const TernaryQuadraticForm&, const TernaryQuadraticForm&) = default;

  TernaryQuadraticForm operator+(const TernaryQuadraticForm& o) const {
    TernaryQuadraticForm r;
    for (std::size_t i = 0; i < 6; ++i) r.c[i] = c[i] + o.c[i];
    return r;
  }

  TernaryQuadraticForm scaled(const S& t) const {
    TernaryQuadraticForm r;
    for (std::size_t i = 0; i < 6; ++i) r.c[i] = c[i] * t;
    return r;
  }

  /// 4*Det of the half-integral symmetric matrix.
  S four_det() const {
    const S &a = c[0], &b = c[1], &cc = c[2], &d = c[3], &e = c[4], &f = c[5];
    return S(4) * a * b * cc + d * e * f - a * f * f - b * e * e - cc * d * d;
  }
};

template <typename S>
struct DoubleTernaryForm {
  TernaryQuadraticForm<S> A;
  TernaryQuadraticForm<S> B;

  friend bool operator==(const DoubleTernaryForm&, const DoubleTernaryForm&) = default;

  DoubleTernaryForm scaled(const S& t) const { return {A.scaled(t), B.scaled(t)}; }
};

template <typename S>
struct BinaryCubicForm {
  S a{0}, b{0}, c{0}, d{0};

  friend bool operator==(const BinaryCubicForm&, const BinaryCubicForm&) = default;

  S evaluate(const S& y, const S& z) const {
    return a * y * y * y + b * y * y * z + c * y * z * z + d * z * z * z;
  }
};

using IntMatrix3 = std::array<std::array<Integer, 3>, 3>;
using IntMatrix2 = std::array<std::array<Integer, 2>, 2>;
using IntVector3 = std::array<Integer, 3>;

inline IntMatrix3 identity3() {
  IntMatrix3 m{};
  for (std::size_t i = 0; i < 3; ++i) m[i][i] = 1;
  return m;
}

inline IntMatrix2 identity2() {
  IntMatrix2 m{};
  m[0][0] = m[1][1] = 1;
  return m;
}

inline Integer det3(const IntMatrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

inline Integer det2(const IntMatrix2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

inline IntMatrix3 mul3(const IntMatrix3& x, const IntMatrix3& y) {
  IntMatrix3 r{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) r[i][j] += x[i][k] * y[k][j];
  return r;
}

inline IntMatrix2 mul2(const IntMatrix2& x, const IntMatrix2& y) {
  IntMatrix2 r{};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) r[i][j] += x[i][k] * y[k][j];
  return r;
}

inline IntMatrix3 transpose3(const IntMatrix3& m) {
  IntMatrix3 r{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r[i][j] = m[j][i];
  return r;
}

/// Inverse of a matrix with determinant ±1 (adjugate times det).
inline IntMatrix3 unimodular_inverse3(const IntMatrix3& m) {
  Integer d = det3(m);
  if (d != 1 && d != -1) throw InvalidInput("matrix is not unimodular (det " + d.str() + ")");
  IntMatrix3 r{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      r[i][j] = (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]) * d;
    }
  return r;
}

/// The dual action on W*: transpose-inverse.
inline IntMatrix3 dual(const IntMatrix3& g) { return transpose3(unimodular_inverse3(g)); }

struct GammaElement {
  IntMatrix3 g = identity3();
  IntMatrix2 h = identity2();

  friend bool operator==(const GammaElement&, const GammaElement&) = default;

  void validate() const {
    Integer dg = det3(g), dh = det2(h);
    if ((dg != 1 && dg != -1) || (dh != 1 && dh != -1) || dg * dh != 1)
      throw InvalidInput("Gamma element must satisfy det(g)*det(h) = 1 with both determinants +-1 (got " +
                         dg.str() + ", " + dh.str() + ")");
  }
};

/// Group law matching act_gamma: act(act(p, first), second) = act(p, compose(second, first)).
inline GammaElement compose(const GammaElement& second, const GammaElement& first) {
  return {mul3(second.g, first.g), mul2(second.h, first.h)};
}

template <typename S, typename T>
auto evaluate_ternary(const TernaryQuadraticForm<S>& q, const std::array<T, 3>& v) {
  using R = decltype(std::declval<S>() * std::declval<T>());
  R sum = R(0);
  for (int i = 1; i <= 3; ++i)
    for (int j = i; j <= 3; ++j)
      sum = sum + q.coeff(i, j) * v[static_cast<std::size_t>(i - 1)] * v[static_cast<std::size_t>(j - 1)];
  return sum;
}

template <typename S>
S evaluate_ternary(const TernaryQuadraticForm<S>& q, const IntVector3& v) {
  S sum = S(0);
  for (int i = 1; i <= 3; ++i)
    for (int j = i; j <= 3; ++j)
      sum = sum + q.coeff(i, j) * S(v[static_cast<std::size_t>(i - 1)] * v[static_cast<std::size_t>(j - 1)]);
  return sum;
}

namespace detail {

// Linear form alpha*y + beta*z in two variables.
template <typename S>
struct Lin {
  S y, z;
};

template <typename S>
void add_product(std::array<S, 4>& out, const S& coef, const Lin<S>& p, const Lin<S>& q, const Lin<S>& r) {
  out[0] = out[0] + coef * p.y * q.y * r.y;
  out[1] = out[1] + coef * (p.y * q.y * r.z + p.y * q.z * r.y + p.z * q.y * r.y);
  out[2] = out[2] + coef * (p.y * q.z * r.z + p.z * q.y * r.z + p.z * q.z * r.y);
  out[3] = out[3] + coef * p.z * q.z * r.z;
}

}  // namespace detail

/// Resolvent binary cubic g(y,z) = 4*Det(M_A*y - M_B*z).
///
/// With this sign on z, x(a)x(b) + x(c)x(d) = B(x) omega + A(x) theta mod Z in the
/// cubic ring of g (verify_classical_resolvent). See docs/conventions.md.
template <typename S>
BinaryCubicForm<S> resolvent_cubic_form(const DoubleTernaryForm<S>& p) {
  std::array<detail::Lin<S>, 6> l;
  for (std::size_t i = 0; i < 6; ++i) l[i] = {p.A.c[i], -p.B.c[i]};
  // 4*a*b*c + d*e*f - a*f^2 - b*e^2 - c*d^2 with (a,b,c,d,e,f) = slots 0..5
  std::array<S, 4> out{S(0), S(0), S(0), S(0)};
  detail::add_product(out, S(4), l[0], l[1], l[2]);
  detail::add_product(out, S(1), l[3], l[4], l[5]);
  detail::add_product(out, S(-1), l[0], l[5], l[5]);
  detail::add_product(out, S(-1), l[1], l[4], l[4]);
  detail::add_product(out, S(-1), l[2], l[3], l[3]);
  return {out[0], out[1], out[2], out[3]};
}

template <typename S>
S disc_binary_cubic(const BinaryCubicForm<S>& f) {
  const S &a = f.a, &b = f.b, &c = f.c, &d = f.d;
  return S(18) * a * b * c * d - S(4) * b * b * b * d + b * b * c * c - S(4) * a * c * c * c -
         S(27) * a * a * d * d;
}

/// The form x -> q(x*g), x a row vector.
template <typename S>
TernaryQuadraticForm<S> substitute(const TernaryQuadraticForm<S>& q, const IntMatrix3& g) {
  TernaryQuadraticForm<S> r;
  // (x g)_i = sum_r x_r g[r][i]
  for (int i = 1; i <= 3; ++i)
    for (int j = i; j <= 3; ++j) {
      const S& a = q.coeff(i, j);
      for (int s = 1; s <= 3; ++s)
        for (int t = s; t <= 3; ++t) {
          const Integer& gsi = g[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(i - 1)];
          const Integer& gsj = g[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(j - 1)];
          const Integer& gti = g[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(i - 1)];
          const Integer& gtj = g[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(j - 1)];
          Integer k = s == t ? Integer(gsi * gsj) : Integer(gsi * gtj + gti * gsj);
          if (!k.is_zero()) r.coeff(s, t) = r.coeff(s, t) + a * S(k);
        }
    }
  return r;
}

/// (A', B')^T = h * (A o g, B o g)^T.
template <typename S>
DoubleTernaryForm<S> act_gamma(const DoubleTernaryForm<S>& p, const GammaElement& gamma) {
  gamma.validate();
  auto Ag = substitute(p.A, gamma.g);
  auto Bg = substitute(p.B, gamma.g);
  DoubleTernaryForm<S> r;
  for (std::size_t i = 0; i < 6; ++i) {
    r.A.c[i] = S(gamma.h[0][0]) * Ag.c[i] + S(gamma.h[0][1]) * Bg.c[i];
    r.B.c[i] = S(gamma.h[1][0]) * Ag.c[i] + S(gamma.h[1][1]) * Bg.c[i];
  }
  return r;
}

/// Coordinates (B(v), A(v)) of phi(v) in the basis (c1, c2).
template <typename S>
std::array<S, 2> evaluate_resolvent_map(const DoubleTernaryForm<S>& p, const IntVector3& v) {
  return {evaluate_ternary(p.B, v), evaluate_ternary(p.A, v)};
}

/// The universal pair: every coefficient is its own variable.
inline DoubleTernaryForm<SparsePoly> universal_pair() {
  DoubleTernaryForm<SparsePoly> p;
  for (std::size_t i = 0; i < 6; ++i) {
    p.A.c[i] = SparsePoly::var(static_cast<Var>(i));
    p.B.c[i] = SparsePoly::var(static_cast<Var>(6 + i));
  }
  return p;
}

/// Parses a ternary form from a polynomial in x1,x2,x3 with integer coefficients.
inline TernaryQuadraticForm<Integer> ternary_from_poly(const SparsePoly& poly) {
  TernaryQuadraticForm<Integer> q;
  for (const auto& [m, c] : poly.terms()) {
    int e[3] = {m.exponent(Var::x1), m.exponent(Var::x2), m.exponent(Var::x3)};
    if (m.degree() != 2 || e[0] + e[1] + e[2] != 2)
      throw InvalidInput("not a ternary quadratic form in x1,x2,x3: " + poly.str());
    int i = 0, j = 0;
    for (int s = 0; s < 3; ++s)
      for (int k = 0; k < e[s]; ++k) (i == 0 ? i : j) = s + 1;
    q.coeff(i, j) = c;
  }
  return q;
}

/// Convenience: `pair_from_strings("x1^2+x1*x3", "x2^2+x2*x3")`.
inline DoubleTernaryForm<Integer> pair_from_strings(std::string_view a, std::string_view b) {
  return {ternary_from_poly(SparsePoly::parse(a)), ternary_from_poly(SparsePoly::parse(b))};
}

inline SparsePoly ternary_to_poly(const TernaryQuadraticForm<Integer>& q) {
  SparsePoly r;
  for (int i = 1; i <= 3; ++i)
    for (int j = i; j <= 3; ++j)
      r += SparsePoly::var(x_var(i)) * SparsePoly::var(x_var(j)) * SparsePoly(q.coeff(i, j));
  return r;
}

/// Specializes a symbolic object at integer coefficients (indexed like Var).
inline Integer specialize_scalar(const SparsePoly& p, std::span<const Integer> values) { return p.eval(values); }

/// Flattened (a11..a23, b11..b23) values padded to the full variable universe.
inline std::vector<Integer> coefficient_values(const DoubleTernaryForm<Integer>& p) {
  std::vector<Integer> v(kVarCount, Integer(0));
  for (std::size_t i = 0; i < 6; ++i) {
    v[i] = p.A.c[i];
    v[6 + i] = p.B.c[i];
  }
  return v;
}

}  // namespace quartic
