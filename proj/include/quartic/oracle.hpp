#pragma once

// Numerical cross-check. The four common zeros of A and B are found in
// floating point, and the spectra of multiplication by the basis elements of the
// constructed ring are compared with the values of the gluing generators at
// those points.

#include "quartic/cech.hpp"
#include "quartic/error.hpp"
#include "quartic/forms.hpp"
#include "quartic/linalg.hpp"
#include "quartic/random.hpp"
#include "quartic/rings.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>
#include <vector>

namespace quartic {

using cplx = std::complex<double>;
using ProjectivePoint = std::array<cplx, 3>;

struct IntersectionSet {
  std::array<ProjectivePoint, 4> points;  // largest-magnitude coordinate equal to 1
  double residual = 0;                    // max |A(P)|, |B(P)| relative to the coefficient size
  int shear_attempts = 0;
};

struct OracleOptions {
  double tol = 1e-8;
  int max_shears = 10;
  long long shear_bound = 3;
  std::uint64_t seed = 0x5eed5eedULL;
};

namespace detail {

// Homogeneous binary form in (s, t): coefficient k belongs to s^k t^(d-k).
using BinaryForm = std::vector<Integer>;

inline BinaryForm bf_mul(const BinaryForm& a, const BinaryForm& b) {
  BinaryForm r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline BinaryForm bf_sub(const BinaryForm& a, const BinaryForm& b) {
  BinaryForm r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

inline BinaryForm bf_scale(const BinaryForm& a, const Integer& c) {
  BinaryForm r = a;
  for (auto& v : r) v *= c;
  return r;
}

template <typename T>
T eval_form(const TernaryQuadraticForm<Integer>& q, const std::array<T, 3>& x) {
  T s = 0;
  for (int i = 1; i <= 3; ++i)
    for (int j = i; j <= 3; ++j)
      s += static_cast<T>(q.coeff(i, j).convert_to<double>()) * x[static_cast<std::size_t>(i - 1)] *
           x[static_cast<std::size_t>(j - 1)];
  return s;
}

template <typename T>
std::array<T, 3> gradient(const TernaryQuadraticForm<Integer>& q, const std::array<T, 3>& x) {
  std::array<T, 3> g{T(0), T(0), T(0)};
  for (int i = 1; i <= 3; ++i)
    for (int j = i; j <= 3; ++j) {
      T c = static_cast<T>(q.coeff(i, j).convert_to<double>());
      auto ii = static_cast<std::size_t>(i - 1), jj = static_cast<std::size_t>(j - 1);
      g[ii] += c * x[jj];
      g[jj] += c * x[ii];
    }
  return g;
}

inline double coefficient_scale(const TernaryQuadraticForm<Integer>& q) {
  double m = 0;
  for (const auto& c : q.c) m = std::max(m, std::abs(c.convert_to<double>()));
  return m;
}

inline ProjectivePoint normalize_point(ProjectivePoint p) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (std::abs(p[i]) > std::abs(p[best])) best = i;
  cplx s = p[best];
  for (auto& v : p) v /= s;
  p[best] = 1.0;
  return p;
}

/// Newton iteration on A = B = 0 in the affine chart of the largest coordinate.
inline ProjectivePoint polish(const DoubleTernaryForm<Integer>& p, ProjectivePoint pt) {
  using lc = std::complex<long double>;
  pt = normalize_point(pt);
  std::size_t fixed = 0;
  for (std::size_t i = 0; i < 3; ++i)
    if (pt[i] == cplx(1.0)) fixed = i;
  std::array<lc, 3> x{lc(pt[0]), lc(pt[1]), lc(pt[2])};
  std::size_t u = (fixed + 1) % 3, v = (fixed + 2) % 3;
  for (int it = 0; it < 60; ++it) {
    lc fa = eval_form(p.A, x), fb = eval_form(p.B, x);
    auto ga = gradient(p.A, x), gb = gradient(p.B, x);
    lc det = ga[u] * gb[v] - ga[v] * gb[u];
    if (std::abs(det) == 0) break;
    lc du = (fa * gb[v] - fb * ga[v]) / det;
    lc dv = (ga[u] * fb - gb[u] * fa) / det;
    x[u] -= du;
    x[v] -= dv;
    if (std::abs(du) + std::abs(dv) < 1e-19L * (1 + std::abs(x[u]) + std::abs(x[v]))) break;
  }
  return normalize_point({cplx(x[0]), cplx(x[1]), cplx(x[2])});
}

inline double residual(const DoubleTernaryForm<Integer>& p, const ProjectivePoint& pt) {
  double sa = std::max(1.0, coefficient_scale(p.A)), sb = std::max(1.0, coefficient_scale(p.B));
  return std::max(std::abs(eval_form(p.A, pt)) / sa, std::abs(eval_form(p.B, pt)) / sb);
}

inline std::vector<cplx> polynomial_roots(const std::vector<double>& coeffs_low_to_high) {
  const std::size_t n = coeffs_low_to_high.size() - 1;
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  double lead = coeffs_low_to_high[n];
  for (std::size_t i = 0; i < n; ++i) {
    comp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(n - 1)) = -coeffs_low_to_high[i] / lead;
    if (i > 0) comp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  std::vector<cplx> roots;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) roots.push_back(es.eigenvalues()(i));
  return roots;
}

}  // namespace detail

/// Common zeros of A and B in the projective plane.
inline IntersectionSet intersect_conics(const DoubleTernaryForm<Integer>& p, const OracleOptions& opt = {}) {
  if (disc_binary_cubic(resolvent_cubic_form(p)).is_zero())
    throw Degenerate("resolvent discriminant is zero; the conics do not meet in four distinct points");
  std::mt19937_64 rng(opt.seed);
  for (int attempt = 1; attempt <= opt.max_shears; ++attempt) {
    IntMatrix3 g = attempt == 1 ? identity3() : random_unimodular3(rng, opt.shear_bound);
    // Work with A(y g), B(y g); a zero y maps back to x = y g.
    auto As = substitute(p.A, g), Bs = substitute(p.B, g);
    // As a quadratic in y1: c2 y1^2 + c1 y1 + c0 with c1, c0 binary forms in (y2, y3).
    Integer a2 = As.coeff(1, 1), b2 = Bs.coeff(1, 1);
    detail::BinaryForm a1{As.coeff(1, 3), As.coeff(1, 2)}, b1{Bs.coeff(1, 3), Bs.coeff(1, 2)};
    detail::BinaryForm a0{As.coeff(3, 3), As.coeff(2, 3), As.coeff(2, 2)};
    detail::BinaryForm b0{Bs.coeff(3, 3), Bs.coeff(2, 3), Bs.coeff(2, 2)};
    if (a2.is_zero() && b2.is_zero()) continue;
    auto e0 = detail::bf_sub(detail::bf_scale(b0, a2), detail::bf_scale(a0, b2));  // a2 b0 - a0 b2
    auto e1 = detail::bf_sub(detail::bf_scale(b1, a2), detail::bf_scale(a1, b2));  // a2 b1 - a1 b2
    auto e2 = detail::bf_sub(detail::bf_mul(a1, b0), detail::bf_mul(a0, b1));       // a1 b0 - a0 b1
    auto res = detail::bf_sub(detail::bf_mul(e0, e0), detail::bf_mul(e1, e2));       // degree 4 in (y2, y3)
    if (res.size() != 5 || res[4].is_zero()) continue;
    std::vector<double> c;
    for (const auto& v : res) c.push_back(v.convert_to<double>());
    auto roots = detail::polynomial_roots(c);  // t = y2 / y3
    double sep = 1e300, scale = 1;
    for (auto r : roots) scale = std::max(scale, std::abs(r));
    for (std::size_t i = 0; i < roots.size(); ++i)
      for (std::size_t j = i + 1; j < roots.size(); ++j) sep = std::min(sep, std::abs(roots[i] - roots[j]));
    if (sep < 1e-6 * scale) continue;
    IntersectionSet out;
    out.shear_attempts = attempt;
    bool ok = true;
    for (std::size_t r = 0; r < 4 && ok; ++r) {
      cplx t = roots[r];
      // b2*A - a2*B is linear in y1: e1(t,1) y1 + e0(t,1) = 0 up to sign.
      cplx den = e1[0].convert_to<double>() + e1[1].convert_to<double>() * t;
      cplx num = e0[0].convert_to<double>() + e0[1].convert_to<double>() * t + e0[2].convert_to<double>() * t * t;
      if (std::abs(den) < 1e-9 * (1 + std::abs(num))) {
        ok = false;
        break;
      }
      std::array<cplx, 3> y{-num / den, t, 1.0};
      ProjectivePoint x{0.0, 0.0, 0.0};
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < 3; ++i) x[j] += y[i] * g[i][j].convert_to<double>();
      out.points[r] = detail::polish(p, x);
    }
    if (!ok) continue;
    double minsep = 1e300;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) {
        double d = 0;
        for (std::size_t k = 0; k < 3; ++k) d = std::max(d, std::abs(out.points[i][k] - out.points[j][k]));
        minsep = std::min(minsep, d);
      }
    if (minsep < 1e-6) continue;
    out.residual = 0;
    for (const auto& pt : out.points) out.residual = std::max(out.residual, detail::residual(p, pt));
    if (out.residual > opt.tol)
      throw ToleranceNotMet("intersection residual " + std::to_string(out.residual) + " exceeds tolerance");
    return out;
  }
  throw Degenerate("no coordinate shear separated the intersection points within " +
                   std::to_string(opt.max_shears) + " attempts");
}

/// Exact characteristic polynomial det(t I - M), coefficients low to high (Faddeev-LeVerrier).
inline std::vector<Integer> characteristic_polynomial(const Matrix<Integer>& m) {
  const std::size_t n = m.size();
  std::vector<Integer> c(n + 1, Integer(0));
  c[n] = 1;
  Matrix<Integer> Mk(n, std::vector<Integer>(n, Integer(0)));  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = M * M_{k-1} + c_{n-k+1} I ; c_{n-k} = -tr(M M_k) / k
    Matrix<Integer> next(n, std::vector<Integer>(n, Integer(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Integer s = 0;
        for (std::size_t l = 0; l < n; ++l) s += m[i][l] * Mk[l][j];
        if (i == j) s += c[n - k + 1];
        next[i][j] = s;
      }
    Mk = std::move(next);
    Integer tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += m[i][l] * Mk[l][i];
    if (!(tr % Integer(k)).is_zero()) throw InternalDefect("Faddeev-LeVerrier division is not exact");
    c[n - k] = -tr / Integer(k);
  }
  return c;
}

/// Matrix of multiplication by q_i on the basis 1, q1, q2, q3 (column k = q_i * e_k).
inline Matrix<Integer> multiplication_matrix(const QuarticRingTable<Integer>& t, int i) {
  Matrix<Integer> m(4, std::vector<Integer>(4, Integer(0)));
  for (int k = 0; k < 4; ++k) {
    auto col = t.multiply(QuarticRingTable<Integer>::basis(i), QuarticRingTable<Integer>::basis(k));
    for (std::size_t r = 0; r < 4; ++r) m[r][static_cast<std::size_t>(k)] = col[r];
  }
  return m;
}

struct SpectrumReport {
  bool pass = false;
  double max_eigen_error = 0;       // eigenvalues vs generator values
  double max_cross_patch_error = 0; // agreement of patch representatives
  double max_charpoly_error = 0;    // prod (t - value) vs exact characteristic polynomial
  std::array<std::vector<cplx>, 3> eigenvalues;
  std::array<std::vector<cplx>, 3> expected;
  std::string detail;
};

namespace detail {

/// Greedy nearest matching of two multisets of equal size; returns the worst relative gap.
inline double multiset_gap(std::vector<cplx> a, const std::vector<cplx>& b) {
  double worst = 0;
  for (const auto& v : b) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < a.size(); ++i)
      if (std::abs(a[i] - v) < std::abs(a[best] - v)) best = i;
    worst = std::max(worst, std::abs(a[best] - v) / std::max(1.0, std::abs(v)));
    a.erase(a.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return worst;
}

inline const std::array<PatchTriple, 4>& cached_generators() {
  static const std::array<PatchTriple, 4> g = generators();
  return g;
}

}  // namespace detail

/// Value of generator g_n (n = 1..4) at a point, from every patch where the point lies
/// comfortably inside; returns the value from the patch of the largest coordinate and the
/// largest disagreement between patches.
inline std::pair<cplx, double> generator_value(const DoubleTernaryForm<Integer>& p, int n, const ProjectivePoint& pt) {
  auto vals = coefficient_values(p);
  const auto& g = detail::cached_generators()[static_cast<std::size_t>(n - 1)];
  std::size_t best = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (std::abs(pt[i]) > std::abs(pt[best])) best = i;
  cplx v = g[best].evaluate(vals, pt);
  double spread = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i == best || std::abs(pt[i]) < 1e-3) continue;
    cplx w = g[i].evaluate(vals, pt);
    spread = std::max(spread, std::abs(w - v) / std::max(1.0, std::abs(v)));
  }
  return {v, spread};
}

inline SpectrumReport verify_spectrum_report(const DoubleTernaryForm<Integer>& p, const OracleOptions& opt = {}) {
  SpectrumReport rep;
  auto pts = intersect_conics(p, opt);
  auto t = quartic_ring_from_pair(p);
  std::ostringstream why;
  for (int i = 1; i <= 3; ++i) {
    auto m = multiplication_matrix(t, i);
    Eigen::Matrix4d md;
    for (Eigen::Index r = 0; r < 4; ++r)
      for (Eigen::Index c = 0; c < 4; ++c)
        md(r, c) = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].convert_to<double>();
    Eigen::EigenSolver<Eigen::Matrix4d> es(md, false);
    auto& eig = rep.eigenvalues[static_cast<std::size_t>(i - 1)];
    auto& exp = rep.expected[static_cast<std::size_t>(i - 1)];
    for (Eigen::Index k = 0; k < 4; ++k) eig.push_back(es.eigenvalues()(k));
    for (const auto& pt : pts.points) {
      auto [v, spread] = generator_value(p, i + 1, pt);
      exp.push_back(-v);  // alpha_i = -g_{i+1}
      rep.max_cross_patch_error = std::max(rep.max_cross_patch_error, spread);
    }
    rep.max_eigen_error = std::max(rep.max_eigen_error, detail::multiset_gap(eig, exp));
    // prod (t - alpha_i(P)) against the exact characteristic polynomial.
    auto cp = characteristic_polynomial(m);
    std::vector<cplx> prod{1.0};
    for (const auto& v : exp) {
      std::vector<cplx> next(prod.size() + 1, 0.0);
      for (std::size_t k = 0; k < prod.size(); ++k) {
        next[k + 1] += prod[k];
        next[k] -= v * prod[k];
      }
      prod = next;
    }
    double cscale = 1;
    for (const auto& c : cp) cscale = std::max(cscale, std::abs(c.convert_to<double>()));
    for (std::size_t k = 0; k < cp.size(); ++k)
      rep.max_charpoly_error =
          std::max(rep.max_charpoly_error, std::abs(prod[k] - cplx(cp[k].convert_to<double>())) / cscale);
  }
  rep.pass = rep.max_eigen_error <= opt.tol && rep.max_cross_patch_error <= opt.tol && rep.max_charpoly_error <= opt.tol;
  why << "eigen " << rep.max_eigen_error << ", cross-patch " << rep.max_cross_patch_error << ", charpoly "
      << rep.max_charpoly_error;
  rep.detail = why.str();
  return rep;
}

/// Ring homomorphisms of an etale cubic table to C, as values on (1, omega, theta).
inline std::vector<std::array<cplx, 3>> cubic_embeddings(const CubicRingTable<Integer>& t) {
  using T = CubicRingTable<Integer>;
  std::vector<std::array<cplx, 3>> best;
  double best_gap = -1;
  for (int s : {1, 2, 3, 5, 7, 11}) {
    T::Element z{Integer(0), Integer(1), Integer(s)};
    Eigen::Matrix3d m;
    for (int k = 0; k < 3; ++k) {
      auto col = t.multiply(z, T::basis(k));
      for (int r = 0; r < 3; ++r) m(k, r) = col[static_cast<std::size_t>(r)].convert_to<double>();  // transposed
    }
    Eigen::EigenSolver<Eigen::Matrix3d> es(m);
    const Eigen::Matrix3cd vecs = es.eigenvectors();
    double gap = std::numeric_limits<double>::infinity();
    for (Eigen::Index a = 0; a < 3; ++a)
      for (Eigen::Index b = a + 1; b < 3; ++b) gap = std::min(gap, std::abs(es.eigenvalues()(a) - es.eigenvalues()(b)));
    if (gap <= best_gap) continue;
    std::vector<std::array<cplx, 3>> cand;
    for (Eigen::Index e = 0; e < 3; ++e)
      if (std::abs(vecs(0, e)) > 1e-12) cand.push_back({1.0, vecs(1, e) / vecs(0, e), vecs(2, e) / vecs(0, e)});
    if (cand.size() < 3) continue;
    best_gap = gap;
    best = cand;
  }
  if (best_gap < 1e-9) throw Degenerate("cubic ring is not etale");
  return best;
}

struct ClassicalResolventReport {
  bool pass = false;
  double max_error = 0;  // best matching, worst test vector
  std::string detail;
};

/// For x in Q/Z and the three ways {ab|cd} to split the four intersection points,
/// x(a)x(b) + x(c)x(d) - B(x) omega - A(x) theta must be one and the same integer
/// under some matching of splittings with embeddings of the cubic ring of f.
inline ClassicalResolventReport verify_classical_resolvent(const DoubleTernaryForm<Integer>& p,
                                                           const BinaryCubicForm<Integer>& f,
                                                           const OracleOptions& opt = {}) {
  ClassicalResolventReport rep;
  auto pts = intersect_conics(p, opt);
  std::array<std::array<cplx, 3>, 4> alpha{};  // alpha[P][i-1] = q_i at P
  for (std::size_t n = 0; n < 4; ++n)
    for (int i = 1; i <= 3; ++i) alpha[n][static_cast<std::size_t>(i - 1)] = -generator_value(p, i + 1, pts.points[n]).first;
  auto psi = cubic_embeddings(cubic_ring_from_binary_cubic(f));
  std::vector<IntVector3> xs;
  for (int i = 0; i < 3; ++i) {
    IntVector3 e{};
    e[static_cast<std::size_t>(i)] = 1;
    xs.push_back(e);
  }
  xs.push_back({1, 1, 0});
  xs.push_back({1, 0, 1});
  xs.push_back({0, 1, 1});
  xs.push_back({2, -1, 3});
  constexpr std::array<std::array<std::size_t, 4>, 3> splits{{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
  std::array<std::size_t, 3> perm{0, 1, 2};
  rep.max_error = std::numeric_limits<double>::infinity();
  do {
    double worst = 0;
    for (const auto& x : xs) {
      std::array<cplx, 4> xv{};
      for (std::size_t n = 0; n < 4; ++n)
        for (std::size_t i = 0; i < 3; ++i) xv[n] += x[i].convert_to<double>() * alpha[n][i];
      double a = evaluate_ternary(p.A, x).convert_to<double>(), b = evaluate_ternary(p.B, x).convert_to<double>();
      std::array<cplx, 3> d{};
      double scale = 1;
      for (std::size_t s = 0; s < 3; ++s) {
        const auto& sp = splits[s];
        cplx phi = xv[sp[0]] * xv[sp[1]] + xv[sp[2]] * xv[sp[3]];
        const auto& h = psi[perm[s]];
        d[s] = phi - b * h[1] - a * h[2];
        scale = std::max({scale, std::abs(phi), std::abs(b * h[1]), std::abs(a * h[2])});
      }
      double err = std::max(std::abs(d[1] - d[0]), std::abs(d[2] - d[0]));
      err = std::max(err, std::abs(d[0] - std::round(d[0].real())));
      worst = std::max(worst, err / scale);
    }
    rep.max_error = std::min(rep.max_error, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  rep.pass = rep.max_error <= opt.tol;
  std::ostringstream why;
  why << "relative error " << rep.max_error << " over " << xs.size() << " vectors";
  rep.detail = why.str();
  return rep;
}

inline ClassicalResolventReport verify_classical_resolvent(const DoubleTernaryForm<Integer>& p,
                                                           const OracleOptions& opt = {}) {
  return verify_classical_resolvent(p, resolvent_cubic_form(p), opt);
}

inline bool verify_spectrum(const DoubleTernaryForm<Integer>& p, double tol = 1e-8) {
  OracleOptions opt;
  opt.tol = tol;
  return verify_spectrum_report(p, opt).pass;
}

}  // namespace quartic
