#pragma once

// Laurent polynomials in x1,x2,x3 whose coefficients are SparsePoly values in
// the twelve universal coefficients. Exponents of the x's may be negative.

#include "quartic/sparse_poly.hpp"

#include <array>
#include <complex>
#include <functional>
#include <map>

namespace quartic {

struct XExp {
  std::array<int, 3> e{};

  int degree() const { return e[0] + e[1] + e[2]; }

  XExp operator+(const XExp& o) const { return {{e[0] + o.e[0], e[1] + o.e[1], e[2] + o.e[2]}}; }

  friend bool operator==(const XExp&, const XExp&) = default;

  // Graded lexicographic, same convention as Monomial.
  friend std::strong_ordering operator<=>(const XExp& a, const XExp& b) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    return a.e <=> b.e;
  }

  std::string str() const {
    std::string s;
    for (int i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      if (!s.empty()) s += '*';
      s += "x" + std::to_string(i + 1);
      if (e[i] != 1) s += '^' + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
  }
};

class LaurentPoly {
 public:
  // Sorted descending by exponent.
  using Map = std::map<XExp, SparsePoly, std::greater<>>;

  LaurentPoly() = default;
  LaurentPoly(int c) : LaurentPoly(SparsePoly(c)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Integer& c) : LaurentPoly(SparsePoly(c)) {}  // NOLINT(google-explicit-constructor)

  /// Splits the x-part out of every monomial of `p`.
  LaurentPoly(const SparsePoly& p) {  // NOLINT(google-explicit-constructor)
    for (const auto& [m, c] : p.terms()) {
      XExp x{{m.exponent(Var::x1), m.exponent(Var::x2), m.exponent(Var::x3)}};
      if (m.exponent(Var::y1) || m.exponent(Var::y2) || m.exponent(Var::y3))
        throw InvalidInput("LaurentPoly coefficients may not involve y variables");
      Monomial rest = m;
      rest.set(Var::x1, 0);
      rest.set(Var::x2, 0);
      rest.set(Var::x3, 0);
      add_term(x, SparsePoly::monomial(rest, c));
    }
  }

  static LaurentPoly x_monomial(const XExp& x, const SparsePoly& c = SparsePoly(1)) {
    LaurentPoly r;
    r.add_term(x, c);
    return r;
  }

  /// x_i^e for 1-based i.
  static LaurentPoly x(int i, int e = 1) {
    XExp x;
    x.e[static_cast<std::size_t>(i - 1)] = e;
    return x_monomial(x);
  }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Number of terms after expanding the coefficients into monomials.
  std::size_t expanded_size() const {
    std::size_t n = 0;
    for (const auto& [x, c] : terms_) n += c.size();
    return n;
  }

  SparsePoly coefficient(const XExp& x) const {
    auto it = terms_.find(x);
    return it == terms_.end() ? SparsePoly{} : it->second;
  }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& [x, c] : r.terms_) c = -c;
    return r;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    for (const auto& [x, c] : b.terms_) a.add_term(x, c);
    return a;
  }

  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    for (const auto& [x, c] : b.terms_) a.add_term(x, -c);
    return a;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [xa, ca] : a.terms_)
      for (const auto& [xb, cb] : b.terms_) r.add_term(xa + xb, ca * cb);
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly shifted(const XExp& by) const {
    LaurentPoly r;
    for (const auto& [x, c] : terms_) r.terms_.emplace(x + by, c);
    return r;
  }

  /// Inverse of a single-term Laurent polynomial with unit coefficient ±1.
  std::optional<LaurentPoly> unit_inverse() const {
    if (terms_.size() != 1) return std::nullopt;
    const auto& [x, c] = *terms_.begin();
    auto v = c.constant_value();
    if (!v || (*v != 1 && *v != -1)) return std::nullopt;
    return x_monomial(XExp{{-x.e[0], -x.e[1], -x.e[2]}}, SparsePoly(*v));
  }

  LaurentPoly pow(long e) const {
    if (e < 0) {
      auto inv = unit_inverse();
      if (!inv) throw InvalidInput("negative power of a non-monomial Laurent polynomial");
      return inv->pow(-e);
    }
    LaurentPoly r(1);
    for (long i = 0; i < e; ++i) r *= *this;
    return r;
  }

  /// Terms whose x-exponent satisfies `keep`.
  LaurentPoly filtered(const std::function<bool(const XExp&)>& keep) const {
    LaurentPoly r;
    for (const auto& [x, c] : terms_)
      if (keep(x)) r.terms_.emplace(x, c);
    return r;
  }

  bool all_exponents(const std::function<bool(const XExp&)>& pred) const {
    for (const auto& [x, c] : terms_)
      if (!pred(x)) return false;
    return true;
  }

  /// Substitutes integers for the twelve coefficient variables.
  LaurentPoly specialize(std::span<const Integer> coeffs) const {
    std::vector<std::optional<Integer>> vals(kVarCount);
    for (std::size_t i = 0; i < kCoeffVarCount && i < coeffs.size(); ++i) vals[i] = coeffs[i];
    LaurentPoly r;
    for (const auto& [x, c] : terms_) r.add_term(x, c.specialize(vals));
    return r;
  }

  /// Numerical value at a complex point, after full specialization of the coefficients.
  std::complex<double> evaluate(std::span<const Integer> coeffs,
                                const std::array<std::complex<double>, 3>& pt) const {
    std::vector<Integer> all(kVarCount, Integer(0));
    for (std::size_t i = 0; i < kCoeffVarCount && i < coeffs.size(); ++i) all[i] = coeffs[i];
    std::complex<double> sum = 0;
    for (const auto& [x, c] : terms_) {
      double cv = c.eval(all).convert_to<double>();
      std::complex<double> term = cv;
      for (int i = 0; i < 3; ++i) term *= std::pow(pt[static_cast<std::size_t>(i)], x.e[static_cast<std::size_t>(i)]);
      sum += term;
    }
    return sum;
  }

  /// `(a11*b22 - a22*b11)*x1^-2*x2 + ...`
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [x, c] : terms_) {
      if (!s.empty()) s += " + ";
      std::string xs = x.str();
      std::string cs = c.terms().size() > 1 ? "(" + c.str() + ")" : c.str();
      if (xs == "1")
        s += cs;
      else if (cs == "1")
        s += xs;
      else if (cs == "-1")
        s += "-" + xs;
      else
        s += cs + "*" + xs;
    }
    return s;
  }

  /// First x-monomial (in canonical order) at which two Laurent polynomials differ.
  static std::optional<std::string> first_difference(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly d = a - b;
    if (d.is_zero()) return std::nullopt;
    const auto& [x, c] = *d.terms_.begin();
    return x.str() + ": " + c.str();
  }

 private:
  void add_term(const XExp& x, const SparsePoly& c) {
    if (c.is_zero()) return;
    for (int i = 0; i < 3; ++i)
      if (x.e[static_cast<std::size_t>(i)] < -127 || x.e[static_cast<std::size_t>(i)] > 127)
        throw InvalidInput("Laurent exponent out of range");
    auto [it, inserted] = terms_.try_emplace(x, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Map terms_;
};

inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }
inline std::string to_string(const LaurentPoly& p) { return p.str(); }

}  // namespace quartic
