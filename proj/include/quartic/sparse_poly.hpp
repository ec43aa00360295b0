#pragma once

// Exact sparse multivariate polynomials over Z.
//
// The variable universe is fixed: the twelve coefficients of a pair of ternary
// quadratic forms (a11..a23, b11..b23), followed by x1,x2,x3 and y1,y2,y3, which
// serve as coordinates of generic elements. Terms are kept sorted by graded
// lexicographic order (descending) with a11 > a22 > ... > b23 > x1 > ... > y3,
// so equality is structural.

#include "quartic/error.hpp"
#include "quartic/expr.hpp"
#include "quartic/integer.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace quartic {

enum class Var : std::uint8_t {
  a11, a22, a33, a12, a13, a23,
  b11, b22, b33, b12, b13, b23,
  x1, x2, x3,
  y1, y2, y3,
};

inline constexpr std::size_t kVarCount = 18;
inline constexpr std::size_t kCoeffVarCount = 12;

inline constexpr std::array<std::string_view, kVarCount> kVarNames = {
    "a11", "a22", "a33", "a12", "a13", "a23", "b11", "b22", "b33",
    "b12", "b13", "b23", "x1",  "x2",  "x3",  "y1",  "y2",  "y3"};

inline std::optional<Var> parse_var(std::string_view name) {
  for (std::size_t i = 0; i < kVarCount; ++i)
    if (kVarNames[i] == name) return static_cast<Var>(i);
  return std::nullopt;
}

/// Slot (0..5) of the coefficient of x_i x_j in the (a11,a22,a33,a12,a13,a23) order.
/// Indices are 1-based and unordered.
constexpr int coeff_slot(int i, int j) {
  if (i > j) std::swap(i, j);
  if (i == j) return i - 1;
  if (i == 1) return j == 2 ? 3 : 4;
  return 5;
}

/// The variable a_ij (which = 0) or b_ij (which = 1).
constexpr Var coeff_var(int which, int i, int j) {
  return static_cast<Var>(which * 6 + coeff_slot(i, j));
}

constexpr Var x_var(int i) { return static_cast<Var>(static_cast<int>(Var::x1) + i - 1); }
constexpr Var y_var(int i) { return static_cast<Var>(static_cast<int>(Var::y1) + i - 1); }

class Monomial {
 public:
  static constexpr std::size_t kSlots = 24;  // kVarCount padded to three machine words

  Monomial() = default;

  static Monomial of(Var v, int e = 1) {
    Monomial m;
    m.set(v, e);
    return m;
  }

  int exponent(Var v) const { return e_[static_cast<std::size_t>(v)]; }
  int exponent(std::size_t slot) const { return e_[slot]; }

  void set(Var v, int e) {
    if (e < -127 || e > 127) throw InvalidInput("monomial exponent out of range");
    e_[static_cast<std::size_t>(v)] = static_cast<std::int8_t>(e);
  }

  int degree() const {
    int d = 0;
    for (std::size_t i = 0; i < kVarCount; ++i) d += e_[i];
    return d;
  }

  bool is_one() const {
    for (std::size_t i = 0; i < kVarCount; ++i)
      if (e_[i] != 0) return false;
    return true;
  }

  bool has_negative() const {
    for (std::size_t i = 0; i < kVarCount; ++i)
      if (e_[i] < 0) return true;
    return false;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      int s = e_[i] + o.e_[i];
      if (s < -127 || s > 127) throw InvalidInput("monomial exponent overflow");
      r.e_[i] = static_cast<std::int8_t>(s);
    }
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  // Graded lexicographic order.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da <=> db;
    for (std::size_t i = 0; i < kVarCount; ++i)
      if (a.e_[i] != b.e_[i]) return a.e_[i] <=> b.e_[i];
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::uint64_t w[3];
    std::memcpy(w, e_.data(), sizeof(w));
    std::uint64_t h = w[0] * 0x9E3779B97F4A7C15ULL;
    h ^= (w[1] + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2));
    h ^= (w[2] + 0x85EBCA77C2B2AE63ULL + (h << 6) + (h >> 2));
    return static_cast<std::size_t>(h ^ (h >> 29));
  }

  /// `a11^2*b23` style; empty string for the unit monomial.
  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (e_[i] == 0) continue;
      if (!s.empty()) s += '*';
      s += kVarNames[i];
      if (e_[i] != 1) s += '^' + std::to_string(e_[i]);
    }
    return s;
  }

 private:
  std::array<std::int8_t, kSlots> e_{};
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

class SparsePoly {
 public:
  using Term = std::pair<Monomial, Integer>;

  SparsePoly() = default;
  SparsePoly(int c) : SparsePoly(Integer(c)) {}  // NOLINT(google-explicit-constructor)
  SparsePoly(long long c) : SparsePoly(Integer(c)) {}  // NOLINT(google-explicit-constructor)
  SparsePoly(const Integer& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_.emplace_back(Monomial{}, c);
  }

  static SparsePoly var(Var v) { return monomial(Monomial::of(v), 1); }

  static SparsePoly monomial(const Monomial& m, const Integer& c) {
    SparsePoly p;
    if (m.has_negative()) throw InvalidInput("SparsePoly monomial with negative exponent");
    if (!c.is_zero()) p.terms_.emplace_back(m, c);
    return p;
  }

  /// Collects like terms, drops zeros and sorts.
  static SparsePoly from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first > b.first; });
    SparsePoly p;
    for (auto& t : terms) {
      if (t.first.has_negative()) throw InvalidInput("SparsePoly monomial with negative exponent");
      if (!p.terms_.empty() && p.terms_.back().first == t.first) {
        p.terms_.back().second += t.second;
        if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
      } else if (!t.second.is_zero()) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  static SparsePoly parse(std::string_view text);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
  }

  /// Value when the polynomial is constant.
  std::optional<Integer> constant_value() const {
    if (terms_.empty()) return Integer(0);
    if (is_constant()) return terms_[0].second;
    return std::nullopt;
  }

  /// Total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.front().first.degree(); }

  bool is_homogeneous(int d) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const Term& t) { return t.first.degree() == d; });
  }

  /// Degree in the variables of [first, last] only.
  bool is_homogeneous_in(Var first, Var last, int d) const {
    for (const auto& t : terms_) {
      int s = 0;
      for (auto i = static_cast<std::size_t>(first); i <= static_cast<std::size_t>(last); ++i)
        s += t.first.exponent(i);
      if (s != d) return false;
    }
    return true;
  }

  SparsePoly operator-() const {
    SparsePoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) { return merge(a, b, false); }
  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return merge(a, b, true); }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_constant()) return b.scaled(a.terms_[0].second);
    if (b.is_constant()) return a.scaled(b.terms_[0].second);
    std::unordered_map<Monomial, Integer, MonomialHash> acc;
    acc.reserve(std::min<std::size_t>(a.size() * b.size(), 1u << 22));
    for (const auto& ta : a.terms_)
      for (const auto& tb : b.terms_) acc[ta.first * tb.first] += ta.second * tb.second;
    SparsePoly r;
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!c.is_zero()) r.terms_.emplace_back(m, std::move(c));
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Term& x, const Term& y) { return x.first > y.first; });
    return r;
  }

  SparsePoly& operator+=(const SparsePoly& o) { return *this = *this + o; }
  SparsePoly& operator-=(const SparsePoly& o) { return *this = *this - o; }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

  SparsePoly scaled(const Integer& c) const {
    if (c.is_zero()) return {};
    SparsePoly r = *this;
    for (auto& t : r.terms_) t.second *= c;
    return r;
  }

  SparsePoly pow(unsigned e) const {
    SparsePoly r(1);
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
  }

  /// Substitutes an integer for every variable (indexed by Var).
  Integer eval(std::span<const Integer> values) const {
    if (values.size() < kVarCount) throw InvalidInput("eval needs a value for every variable");
    Integer sum = 0;
    for (const auto& [m, c] : terms_) {
      Integer v = c;
      for (std::size_t i = 0; i < kVarCount; ++i)
        for (int k = 0; k < m.exponent(i); ++k) v *= values[i];
      sum += v;
    }
    return sum;
  }

  /// Substitutes integers for the variables that have a value; others stay symbolic.
  SparsePoly specialize(std::span<const std::optional<Integer>> values) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
      Integer v = c;
      Monomial rest;
      for (std::size_t i = 0; i < kVarCount && i < values.size(); ++i) {
        int e = m.exponent(i);
        if (e == 0) continue;
        if (values[i]) {
          for (int k = 0; k < e; ++k) v *= *values[i];
        } else {
          rest.set(static_cast<Var>(i), e);
        }
      }
      for (std::size_t i = values.size(); i < kVarCount; ++i)
        if (m.exponent(i) != 0) rest.set(static_cast<Var>(i), m.exponent(i));
      out.emplace_back(rest, std::move(v));
    }
    return from_terms(std::move(out));
  }

  /// Coefficient of `m` (zero if absent).
  Integer coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.first == m) return t.second;
    return 0;
  }

  /// Canonical textual form, e.g. `a11^2*b23 - 2*a12 + 7`.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Integer mag = c < 0 ? Integer(-c) : c;
      if (first) {
        if (c < 0) s += '-';
      } else {
        s += c < 0 ? " - " : " + ";
      }
      first = false;
      std::string ms = m.str();
      if (ms.empty()) {
        s += mag.str();
      } else if (mag == 1) {
        s += ms;
      } else {
        s += mag.str() + '*' + ms;
      }
    }
    return s;
  }

 private:
  static SparsePoly merge(const SparsePoly& a, const SparsePoly& b, bool subtract) {
    SparsePoly r;
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a.terms_[i].first > b.terms_[j].first)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.size() || b.terms_[j].first > a.terms_[i].first) {
        r.terms_.emplace_back(b.terms_[j].first, subtract ? Integer(-b.terms_[j].second)
                                                          : b.terms_[j].second);
        ++j;
      } else {
        Integer c = subtract ? Integer(a.terms_[i].second - b.terms_[j].second)
                             : Integer(a.terms_[i].second + b.terms_[j].second);
        if (!c.is_zero()) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

inline bool is_zero(const SparsePoly& p) { return p.is_zero(); }
inline std::string to_string(const SparsePoly& p) { return p.str(); }

inline SparsePoly SparsePoly::parse(std::string_view text) {
  ExprContext<SparsePoly> ctx;
  ctx.number = [](const Integer& v) { return SparsePoly(v); };
  ctx.symbol = [](std::string_view name) -> std::optional<SparsePoly> {
    if (auto v = parse_var(name)) return SparsePoly::var(*v);
    return std::nullopt;
  };
  ctx.power = [](const SparsePoly& b, long e) {
    if (e < 0) throw InvalidInput("negative exponent in a polynomial");
    return b.pow(static_cast<unsigned>(e));
  };
  return parse_expression(text, ctx);
}

/// The polynomial a_ij (which = 0) or b_ij (which = 1) for 1-based unordered i,j.
inline SparsePoly coeff(int which, int i, int j) { return SparsePoly::var(coeff_var(which, i, j)); }

/// lambda^{l1 l2}_{l3 l4} = a_{l1l2} b_{l3l4} - b_{l1l2} a_{l3l4}.
inline SparsePoly lambda(int l1, int l2, int l3, int l4) {
  return coeff(0, l1, l2) * coeff(1, l3, l4) - coeff(1, l1, l2) * coeff(0, l3, l4);
}

}  // namespace quartic
