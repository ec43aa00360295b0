#pragma once

// Based commutative rings of rank N+1 given by structure constants, with the
// constructions between binary cubic forms and cubic rings and between pairs of
// ternary quadratic forms and quartic rings.

#include "quartic/error.hpp"
#include "quartic/forms.hpp"
#include "quartic/integer.hpp"
#include "quartic/linalg.hpp"

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

namespace quartic {

/// Ring O*1 + O*e_1 + ... + O*e_N. Products e_i e_j are stored symmetrically;
/// index 0 of a coefficient vector is the constant term.
template <typename S, int N>
class RingTable {
 public:
  static constexpr int kRank = N + 1;
  using Element = std::array<S, N + 1>;

  RingTable() {
    for (auto& row : m_)
      for (auto& v : row) v.fill(S(0));
  }

  /// Coefficients of e_i e_j, 1-based.
  const Element& product(int i, int j) const { return m_[idx(i)][idx(j)]; }

  void set_product(int i, int j, const Element& v) {
    m_[idx(i)][idx(j)] = v;
    m_[idx(j)][idx(i)] = v;
  }

  /// m_ij^k with k = 0 for the constant term.
  const S& m(int i, int j, int k) const { return product(i, j)[static_cast<std::size_t>(k)]; }

  void set_m(int i, int j, int k, const S& v) {
    m_[idx(i)][idx(j)][static_cast<std::size_t>(k)] = v;
    m_[idx(j)][idx(i)][static_cast<std::size_t>(k)] = v;
  }

  friend bool operator==(const RingTable&, const RingTable&) = default;

  static Element unit() {
    Element e;
    e.fill(S(0));
    e[0] = S(1);
    return e;
  }

  static Element basis(int i) {
    Element e;
    e.fill(S(0));
    e[static_cast<std::size_t>(i)] = S(1);
    return e;
  }

  Element multiply(const Element& x, const Element& y) const {
    Element r;
    r.fill(S(0));
    r[0] = x[0] * y[0];
    for (std::size_t k = 1; k <= N; ++k) r[k] = x[0] * y[k] + x[k] * y[0];
    for (int i = 1; i <= N; ++i) {
      if (is_zero(x[static_cast<std::size_t>(i)])) continue;
      for (int j = 1; j <= N; ++j) {
        if (is_zero(y[static_cast<std::size_t>(j)])) continue;
        S c = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
        const Element& p = product(i, j);
        for (std::size_t k = 0; k <= N; ++k)
          if (!is_zero(p[k])) r[k] = r[k] + c * p[k];
      }
    }
    return r;
  }

 private:
  static std::size_t idx(int i) {
    if (i < 1 || i > N) throw InvalidInput("ring basis index out of range");
    return static_cast<std::size_t>(i - 1);
  }

  std::array<std::array<Element, N>, N> m_;
};

/// 1, omega, theta. e = omega*theta, f = omega^2, g = theta^2.
template <typename S>
using CubicRingTable = RingTable<S, 2>;

/// 1, q1, q2, q3.
template <typename S>
using QuarticRingTable = RingTable<S, 3>;

template <typename S, int N>
struct AssociativityViolation {
  int i, j, k;
  typename RingTable<S, N>::Element difference;  // (e_i e_j) e_k - e_i (e_j e_k)
};

/// Empty iff (e_i e_j) e_k = e_i (e_j e_k) for all i < k and all j.
template <typename S, int N>
std::vector<AssociativityViolation<S, N>> check_associativity(const RingTable<S, N>& t) {
  using T = RingTable<S, N>;
  std::vector<AssociativityViolation<S, N>> out;
  for (int i = 1; i <= N; ++i)
    for (int k = i + 1; k <= N; ++k)
      for (int j = 1; j <= N; ++j) {
        auto lhs = t.multiply(t.product(i, j), T::basis(k));
        auto rhs = t.multiply(T::basis(i), t.product(j, k));
        typename T::Element d;
        bool bad = false;
        for (std::size_t r = 0; r <= N; ++r) {
          d[r] = lhs[r] - rhs[r];
          if (!is_zero(d[r])) bad = true;
        }
        if (bad) out.push_back({i, j, k, d});
      }
  return out;
}

template <typename S, int N>
std::string describe(const AssociativityViolation<S, N>& v) {
  std::ostringstream os;
  os << "triple (" << v.i << "," << v.j << "," << v.k << "): (e" << v.i << "*e" << v.j << ")*e" << v.k << " != e" << v.i << "*(e" << v.j << "*e" << v.k
     << "), difference [";
  for (std::size_t r = 0; r < v.difference.size(); ++r) os << (r ? ", " : "") << to_string(v.difference[r]);
  os << "]";
  return os.str();
}

template <typename S, int N>
void require_associative(const RingTable<S, N>& t) {
  auto v = check_associativity(t);
  if (!v.empty()) throw NotAssociative("table is not associative: " + describe(v.front()));
}

/// det of the trace pairing Tr(e_i e_j) on the basis 1, e_1, ..., e_N.
template <typename S, int N>
S ring_discriminant(const RingTable<S, N>& t) {
  std::array<S, N + 1> tr;
  tr[0] = S(N + 1);
  for (int r = 1; r <= N; ++r) {
    S s = S(0);
    for (int k = 1; k <= N; ++k) s = s + t.m(r, k, k);
    tr[static_cast<std::size_t>(r)] = s;
  }
  Matrix<S> m(N + 1, std::vector<S>(N + 1, S(0)));
  for (int i = 0; i <= N; ++i)
    for (int j = 0; j <= N; ++j) {
      if (i == 0 || j == 0) {
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = tr[static_cast<std::size_t>(i + j)];
        continue;
      }
      S s = S(0);
      const auto& p = t.product(i, j);
      for (std::size_t l = 0; l <= N; ++l) s = s + p[l] * tr[l];
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
    }
  return determinant(m);
}

// ---------------------------------------------------------------------------
// Cubic rings

template <typename S>
CubicRingTable<S> cubic_ring_from_binary_cubic(const BinaryCubicForm<S>& f) {
  CubicRingTable<S> t;
  t.set_product(1, 2, {-(f.a * f.d), S(0), S(0)});
  t.set_product(1, 1, {-(f.a * f.c), f.b, -f.a});
  t.set_product(2, 2, {-(f.b * f.d), f.d, -f.c});
  return t;
}

/// Replaces e_i by e_i + shift_i (i = 1..N); returns the table in the new basis.
template <typename S, int N>
RingTable<S, N> shift_basis(const RingTable<S, N>& t, const std::array<S, static_cast<std::size_t>(N)>& shift) {
  RingTable<S, N> r;
  for (int i = 1; i <= N; ++i)
    for (int j = i; j <= N; ++j) {
      auto p = t.product(i, j);
      const S& si = shift[static_cast<std::size_t>(i - 1)];
      const S& sj = shift[static_cast<std::size_t>(j - 1)];
      // (e_i + si)(e_j + sj) = e_i e_j + sj e_i + si e_j + si sj, rewritten in e'_k = e_k + s_k.
      p[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)] + sj;
      p[static_cast<std::size_t>(j)] = p[static_cast<std::size_t>(j)] + si;
      p[0] = p[0] + si * sj;
      for (int k = 1; k <= N; ++k) p[0] = p[0] - p[static_cast<std::size_t>(k)] * shift[static_cast<std::size_t>(k - 1)];
      r.set_product(i, j, p);
    }
  return r;
}

template <typename S>
bool is_normalized(const CubicRingTable<S>& t) {
  return is_zero(t.m(1, 2, 1)) && is_zero(t.m(1, 2, 2));
}

template <typename S>
CubicRingTable<S> normalize(const CubicRingTable<S>& t) {
  // omega -> omega - e2, theta -> theta - e1
  return shift_basis(t, std::array<S, 2>{-t.m(1, 2, 2), -t.m(1, 2, 1)});
}

template <typename S>
BinaryCubicForm<S> binary_cubic_from_cubic_ring(const CubicRingTable<S>& t) {
  require_associative(t);
  auto n = normalize(t);
  BinaryCubicForm<S> f{-n.m(1, 1, 2), n.m(1, 1, 1), -n.m(2, 2, 2), n.m(2, 2, 1)};
  if (!(cubic_ring_from_binary_cubic(f) == n))
    throw InternalDefect("associative normalized cubic table does not match the table of its binary cubic");
  return f;
}

// ---------------------------------------------------------------------------
// Quartic rings

template <typename S>
bool is_normalized(const QuarticRingTable<S>& t) {
  return is_zero(t.m(1, 2, 1)) && is_zero(t.m(1, 2, 2)) && is_zero(t.m(1, 3, 1));
}

/// Shifts the lift of q1,q2,q3 so that m12^1 = m12^2 = m13^1 = 0.
template <typename S>
QuarticRingTable<S> normalize(const QuarticRingTable<S>& t) {
  return shift_basis(t, std::array<S, 3>{-t.m(1, 2, 2), -t.m(1, 2, 1), -t.m(1, 3, 1)});
}

/// Sign of the permutation (i, j, k) of (1, 2, 3).
constexpr int permutation_sign(int i, int j, int k) {
  return ((i == 1 && j == 2 && k == 3) || (i == 2 && j == 3 && k == 1) || (i == 3 && j == 1 && k == 2)) ? 1 : -1;
}

/// lambda^{l1 l2}_{l3 l4} of a pair.
template <typename S>
S lambda_of(const DoubleTernaryForm<S>& p, int l1, int l2, int l3, int l4) {
  return p.A.coeff(l1, l2) * p.B.coeff(l3, l4) - p.B.coeff(l1, l2) * p.A.coeff(l3, l4);
}

/// sigma * det(xbar, ybar, (xy)bar) - (B(x)A(y) - A(x)B(y)); zero iff the
/// resolvent identity holds at (x, y) under orientation sigma.
template <typename S>
S resolvent_residual(const DoubleTernaryForm<S>& p, const QuarticRingTable<S>& t,
                     const typename QuarticRingTable<S>::Element& x,
                     const typename QuarticRingTable<S>::Element& y, int sigma = 1) {
  auto xy = t.multiply(x, y);
  Matrix<S> m(3, std::vector<S>(3, S(0)));
  for (std::size_t r = 0; r < 3; ++r) {
    m[r][0] = x[r + 1];
    m[r][1] = y[r + 1];
    m[r][2] = xy[r + 1];
  }
  S det = determinant(m);
  std::array<S, 3> xv{x[1], x[2], x[3]}, yv{y[1], y[2], y[3]};
  S Ax = evaluate_ternary(p.A, xv), Bx = evaluate_ternary(p.B, xv);
  S Ay = evaluate_ternary(p.A, yv), By = evaluate_ternary(p.B, yv);
  S rhs = Bx * Ay - Ax * By;
  return sigma > 0 ? det - rhs : S(0) - det - rhs;
}

namespace detail {

template <typename S>
std::vector<typename QuarticRingTable<S>::Element> spanning_set() {
  using T = QuarticRingTable<S>;
  std::vector<typename T::Element> v;
  for (int i = 1; i <= 3; ++i) v.push_back(T::basis(i));
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) {
      auto e = T::basis(i);
      e[static_cast<std::size_t>(j)] = S(1);
      v.push_back(e);
    }
  auto all = T::basis(1);
  all[2] = all[3] = S(1);
  v.push_back(all);
  return v;
}

}  // namespace detail

struct ResolventCheck {
  bool holds = true;
  std::string detail;  // first failing pair, when any
};

/// Resolvent identity on the spanning set {q_i, q_i+q_j, q1+q2+q3}; over
/// symbolic scalars also for generic x = sum x_i q_i, y = sum y_i q_i.
template <typename S>
ResolventCheck check_resolvent_identity_report(const DoubleTernaryForm<S>& p, const QuarticRingTable<S>& t,
                                               int sigma = 1) {
  auto span = detail::spanning_set<S>();
  for (std::size_t a = 0; a < span.size(); ++a)
    for (std::size_t b = a; b < span.size(); ++b) {
      S r = resolvent_residual(p, t, span[a], span[b], sigma);
      if (!is_zero(r))
        return {false, "spanning pair (" + std::to_string(a) + ", " + std::to_string(b) + ") residual " + to_string(r)};
    }
  if constexpr (std::is_same_v<S, SparsePoly>) {
    typename QuarticRingTable<S>::Element x{S(0), SparsePoly::var(Var::x1), SparsePoly::var(Var::x2),
                                            SparsePoly::var(Var::x3)};
    typename QuarticRingTable<S>::Element y{S(0), SparsePoly::var(Var::y1), SparsePoly::var(Var::y2),
                                            SparsePoly::var(Var::y3)};
    S r = resolvent_residual(p, t, x, y, sigma);
    if (!r.is_zero()) return {false, "generic x,y: first differing term " + r.terms().front().first.str()};
  }
  return {};
}

template <typename S>
bool check_resolvent_identity(const DoubleTernaryForm<S>& p, const QuarticRingTable<S>& t, int sigma = 1) {
  return check_resolvent_identity_report(p, t, sigma).holds;
}

template <typename S>
QuarticRingTable<S> quartic_ring_from_pair(const DoubleTernaryForm<S>& p) {
  QuarticRingTable<S> t;
  auto lam = [&](int l1, int l2, int l3, int l4) { return lambda_of(p, l1, l2, l3, l4); };
  // m_ij^k = sign(i,j,k) lambda^{jj}_{ii}
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) {
      int k = 6 - i - j;
      S v = lam(j, j, i, i);
      t.set_m(i, j, k, permutation_sign(i, j, k) > 0 ? v : S(0) - v);
    }
  // m_ii^k = sign(i,j,k) lambda^{ij}_{ii}
  for (int i = 1; i <= 3; ++i)
    for (int k = 1; k <= 3; ++k) {
      if (k == i) continue;
      int j = 6 - i - k;
      S v = lam(i, j, i, i);
      t.set_m(i, i, k, permutation_sign(i, j, k) > 0 ? v : S(0) - v);
    }
  // m_jk^k - m_ij^i = sign(i,j,k) lambda^{jj}_{ik}, resolved against m12^1 = m12^2 = m13^1 = 0.
  t.set_m(1, 3, 3, S(0) - lam(1, 1, 2, 3));
  t.set_m(2, 3, 2, S(0) - lam(3, 3, 1, 2));
  t.set_m(2, 3, 3, lam(2, 2, 1, 3));
  // m_ii^i from the resolvent identity at x = q_i + q_k, y = q_i + q_j. The
  // residual is affine in m_ii^i with slope +-1.
  for (int i = 1; i <= 3; ++i) {
    int j = i % 3 + 1, k = j % 3 + 1;
    auto x = QuarticRingTable<S>::basis(i), y = QuarticRingTable<S>::basis(i);
    x[static_cast<std::size_t>(k)] = S(1);
    y[static_cast<std::size_t>(j)] = S(1);
    t.set_m(i, i, i, S(0));
    S r0 = resolvent_residual(p, t, x, y);
    t.set_m(i, i, i, S(1));
    S slope = resolvent_residual(p, t, x, y) - r0;
    if (!(slope == S(1) || slope == S(-1)))
      throw InternalDefect("resolvent identity is not unimodular in m_ii^i");
    t.set_m(i, i, i, slope == S(1) ? S(0) - r0 : r0);
  }
  // Constants: the q_k-coefficient of (q_i q_j) q_k = q_i (q_j q_k) with k != i
  // reads m_ij^0 = sum_l (m_jk^l m_il^k - m_ij^l m_lk^k).
  for (int i = 1; i <= 3; ++i)
    for (int j = i; j <= 3; ++j) {
      int k = i == 1 ? 2 : 1;
      S v = S(0);
      for (int l = 1; l <= 3; ++l) v = v + t.m(j, k, l) * t.m(i, l, k) - t.m(i, j, l) * t.m(l, k, k);
      t.set_m(i, j, 0, v);
    }
  auto viol = check_associativity(t);
  if (!viol.empty()) throw InternalDefect("associativity system for the constants is inconsistent: " + describe(viol.front()));
  return t;
}

struct BasisChange {
  IntMatrix3 u = identity3();
  IntVector3 t{};
};

/// Rewrites a table in the basis q'_i = sum_j (u^{-T})_ij q_j + t_i, i.e. u acts on
/// the coordinate functionals of Q/O, then renormalizes the lift.
template <typename S>
QuarticRingTable<S> apply_basis_change(const QuarticRingTable<S>& t, const BasisChange& c) {
  IntMatrix3 P = transpose3(unimodular_inverse3(c.u));  // throws on non-unimodular u
  using T = QuarticRingTable<S>;
  // Old-basis coordinates of q'_i.
  std::array<typename T::Element, 3> q;
  for (std::size_t i = 0; i < 3; ++i) {
    q[i][0] = S(c.t[i]);
    for (std::size_t j = 0; j < 3; ++j) q[i][j + 1] = S(P[i][j]);
  }
  // An old-basis vector w has new coordinates u * (w1,w2,w3) and constant w0 - sum_k c_k t_k.
  T r;
  for (int i = 1; i <= 3; ++i)
    for (int j = i; j <= 3; ++j) {
      auto w = t.multiply(q[static_cast<std::size_t>(i - 1)], q[static_cast<std::size_t>(j - 1)]);
      typename T::Element out;
      out[0] = w[0];
      for (std::size_t k = 0; k < 3; ++k) {
        S s = S(0);
        for (std::size_t l = 0; l < 3; ++l)
          if (!c.u[k][l].is_zero()) s = s + S(c.u[k][l]) * w[l + 1];
        out[k + 1] = s;
        if (!c.t[k].is_zero()) out[0] = out[0] - s * S(c.t[k]);
      }
      r.set_product(i, j, out);
    }
  return normalize(r);
}

/// Reads the pair back from a based quartic ring with cubic resolvent (t, c, phi).
template <typename S>
DoubleTernaryForm<S> pair_from_based_quartic(const QuarticRingTable<S>& t, const CubicRingTable<S>& c,
                                             const DoubleTernaryForm<S>& phi) {
  require_associative(t);
  auto rc = check_resolvent_identity_report(phi, t);
  if (!rc.holds) throw PreconditionFailed("resolvent identity fails: " + rc.detail);
  if (!(c == cubic_ring_from_binary_cubic(resolvent_cubic_form(phi))))
    throw PreconditionFailed("cubic ring is not the ring of Det(phi)");
  return phi;
}

}  // namespace quartic
