#pragma once

// Data-driven verification of the gluing charts. A fixture file lists, one per
// line, the equalities printed for each generator:
//
//   chart g2
//   patch 1 : h(_1,2)                      representative on U_{x1}
//   cell 1 : e1 = e2 [mod c]                equal, or e1 - e2 = c with c in (A, B) on U_{x1}
//   diff 12 : e1 = e2 = ...                 all equal, and equal to patch 1 - patch 2
//   lift 12 : u , v                         A*v - B*u = patch 1 - patch 2
//   triple : s                              lift12 + lift23 - lift13 = (A*s, B*s)
//   claim : x1                              s pairs with the dual vector x1*
//
// Prefixing a row with `erratum` records a printed form that is expected to
// fail; the verifier reports whether it does. Function syntax: h(_i,j) and
// h(i,_j) for the underlined halves of H_{i,j}, f(_i,j), H(i,j), F(i,j),
// lam(l1l2,l3l4), and the symbols a11..b23, x1..x3, A, B.

#include "quartic/cech.hpp"
#include "quartic/error.hpp"
#include "quartic/expr.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace quartic {

enum class RowStatus { Pass, Fail, ErratumConfirmed, ErratumUnexpectedPass };

inline std::string to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Pass: return "pass";
    case RowStatus::Fail: return "fail";
    case RowStatus::ErratumConfirmed: return "erratum-confirmed";
    case RowStatus::ErratumUnexpectedPass: return "erratum-unexpected-pass";
  }
  return "?";
}

struct RowResult {
  std::string row;     // "g2 diff 12 (line 14)"
  RowStatus status = RowStatus::Pass;
  std::string first_diff;

  bool ok() const { return status == RowStatus::Pass || status == RowStatus::ErratumConfirmed; }
};

struct CechReport {
  std::vector<RowResult> rows;

  bool all_pass() const {
    for (const auto& r : rows)
      if (!r.ok()) return false;
    return true;
  }

  const RowResult* first_failure() const {
    for (const auto& r : rows)
      if (!r.ok()) return &r;
    return nullptr;
  }

  std::size_t errata() const {
    std::size_t n = 0;
    for (const auto& r : rows) n += r.status == RowStatus::ErratumConfirmed;
    return n;
  }

  nlohmann::json to_json() const {
    auto arr = nlohmann::json::array();
    for (const auto& r : rows)
      arr.push_back({{"row", r.row},
                     {"status", to_string(r.status)},
                     {"firstDiff", r.first_diff.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.first_diff)}});
    return arr;
  }
};

namespace detail {

inline std::string trim_copy(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

/// Splits on `sep` at parenthesis depth 0.
inline std::vector<std::string> split_top(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim_copy(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(trim_copy(cur));
  return out;
}

struct IndexArg {
  int value;
  bool underlined;
};

inline IndexArg parse_index(const std::string& s) {
  std::string t = trim_copy(s);
  bool u = !t.empty() && t[0] == '_';
  if (u) t = t.substr(1);
  if (t.size() != 1 || t[0] < '1' || t[0] > '3') throw InvalidInput("bad index argument '" + s + "'");
  return {t[0] - '0', u};
}

inline std::pair<int, int> parse_pair_digits(const std::string& s) {
  std::string t = trim_copy(s);
  if (t.size() != 2 || t[0] < '1' || t[0] > '3' || t[1] < '1' || t[1] > '3')
    throw InvalidInput("bad index pair '" + s + "'");
  return {t[0] - '0', t[1] - '0'};
}

}  // namespace detail

/// Expression evaluator for fixture rows; A and B can be rebound for certificate checks.
class CechExpr {
 public:
  CechExpr() : A_(universal_form(FormSlot::A)), B_(universal_form(FormSlot::B)) {}

  LaurentPoly eval(std::string_view text) const { return eval_with(text, A_, B_); }

  LaurentPoly eval_with(std::string_view text, const LaurentPoly& A, const LaurentPoly& B) const {
    ExprContext<LaurentPoly> ctx;
    ctx.number = [](const Integer& v) { return LaurentPoly(v); };
    ctx.symbol = [&](std::string_view name) -> std::optional<LaurentPoly> {
      if (name == "A") return A;
      if (name == "B") return B;
      if (auto v = parse_var(name)) {
        if (*v >= Var::y1) return std::nullopt;
        return LaurentPoly(SparsePoly::var(*v));
      }
      return std::nullopt;
    };
    ctx.call = [](std::string_view name, const std::vector<std::string>& args) -> std::optional<LaurentPoly> {
      if (args.size() != 2) throw InvalidInput("function '" + std::string(name) + "' takes two arguments");
      if (name == "lam") {
        auto [l1, l2] = detail::parse_pair_digits(args[0]);
        auto [l3, l4] = detail::parse_pair_digits(args[1]);
        return lambdaL(l1, l2, l3, l4);
      }
      auto a = detail::parse_index(args[0]);
      auto b = detail::parse_index(args[1]);
      if (name == "H" || name == "F") {
        if (a.underlined || b.underlined) throw InvalidInput("H and F take plain indices");
        return name == "H" ? H(a.value, b.value) : F(a.value, b.value);
      }
      if (name == "h") {
        if (a.underlined == b.underlined) throw InvalidInput("h needs exactly one underlined index");
        return a.underlined ? h_first(a.value, b.value) : h_second(a.value, b.value);
      }
      if (name == "f") {
        if (!a.underlined || b.underlined) throw InvalidInput("f needs its first index underlined");
        return f_under(a.value, b.value);
      }
      return std::nullopt;
    };
    ctx.divide = [](const LaurentPoly& x, const LaurentPoly& y) {
      auto inv = y.unit_inverse();
      if (!inv) throw InvalidInput("division by something other than a unit monomial: " + y.str());
      return x * *inv;
    };
    ctx.power = [](const LaurentPoly& b, long e) { return b.pow(e); };
    return parse_expression(text, ctx);
  }

  const LaurentPoly& A() const { return A_; }
  const LaurentPoly& B() const { return B_; }

 private:
  LaurentPoly A_, B_;
};

/// Problem with a certificate c, if any. A valid c is cA*A/x_i^2 + cB*B/x_i^2 with cA, cB
/// regular on U_{x_i}; cA and cB are read off by rebinding A and B to x_i^2 and 0.
inline std::optional<std::string> certificate_problem(const CechExpr& ex, const std::string& cert, int i) {
  LaurentPoly xi2 = LaurentPoly::x(i, 2);
  LaurentPoly zero;
  if (!ex.eval_with(cert, zero, zero).is_zero()) return "certificate has a part outside (A, B)";
  LaurentPoly cA = ex.eval_with(cert, xi2, zero);
  LaurentPoly cB = ex.eval_with(cert, zero, xi2);
  if (!(ex.eval_with(cert, xi2, xi2) == cA + cB)) return "certificate is not linear in A, B";
  if (!regular_on_patch(cA, i) || !regular_on_patch(cB, i))
    return "certificate coefficients are not regular on U_x" + std::to_string(i);
  return std::nullopt;
}

/// Verifies every row of a fixture text; rows are reported in file order.
inline CechReport verify_fixture_text(const std::string& text) {
  CechReport rep;
  CechExpr ex;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  std::string chart;
  std::map<int, LaurentPoly> patch;
  std::map<std::string, std::pair<LaurentPoly, LaurentPoly>> lift;
  std::optional<XExp> triple;
  bool triple_seen = false;

  auto patch_diff = [&](const std::string& ij) -> std::optional<LaurentPoly> {
    auto [i, j] = detail::parse_pair_digits(ij);
    if (!patch.count(i) || !patch.count(j)) return std::nullopt;
    return patch[i] - patch[j];
  };

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = detail::trim_copy(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (line.rfind("chart ", 0) == 0) {
      chart = detail::trim_copy(line.substr(6));
      patch.clear();
      lift.clear();
      triple.reset();
      triple_seen = false;
      continue;
    }
    bool erratum = false;
    if (line.rfind("erratum ", 0) == 0) {
      erratum = true;
      line = detail::trim_copy(line.substr(8));
    }
    auto colon = line.find(':');
    if (colon == std::string::npos) throw InvalidInput("fixture line " + std::to_string(lineno) + ": missing ':'");
    std::string head = detail::trim_copy(line.substr(0, colon));
    std::string body = detail::trim_copy(line.substr(colon + 1));
    std::istringstream hs(head);
    std::string kind, arg;
    hs >> kind >> arg;

    RowResult row;
    row.row = chart + " " + head + (erratum ? " [erratum]" : "") + " (line " + std::to_string(lineno) + ")";
    std::optional<std::string> problem;

    auto check_equal = [&](const LaurentPoly& x, const LaurentPoly& y, const std::string& what) {
      if (problem) return;
      if (auto d = LaurentPoly::first_difference(x, y)) problem = what + ": " + *d;
    };

    try {
      if (kind == "patch") {
        int i = detail::parse_index(arg).value;
        LaurentPoly v = ex.eval(body);
        if (!regular_on_patch(v, i)) problem = "not regular on U_x" + arg;
        if (!erratum) patch[i] = v;
      } else if (kind == "cell" || kind == "diff") {
        std::string cert;
        auto mod = body.find(" mod ");
        if (mod != std::string::npos) {
          cert = detail::trim_copy(body.substr(mod + 5));
          body = body.substr(0, mod);
        }
        auto sides = detail::split_top(body, '=');
        std::vector<LaurentPoly> vals;
        for (const auto& s : sides) vals.push_back(ex.eval(s));
        if (!cert.empty()) {
          if (vals.size() != 2) throw InvalidInput("a 'mod' row must have exactly two sides");
          int i = kind == "cell" ? detail::parse_index(arg).value : 0;
          if (i == 0) throw InvalidInput("'mod' is only allowed on cell rows");
          check_equal(vals[0] - vals[1], ex.eval(cert), "lhs - rhs vs certificate");
          if (!problem) problem = certificate_problem(ex, cert, i);
        } else {
          for (std::size_t s = 1; s < vals.size(); ++s)
            check_equal(vals[0], vals[s], "side 1 vs side " + std::to_string(s + 1));
        }
        if (kind == "diff") {
          auto d = patch_diff(arg);
          if (!d) throw InvalidInput("diff row before its patches");
          check_equal(vals[0], *d, "side 1 vs patch difference");
        }
      } else if (kind == "lift") {
        auto parts = detail::split_top(body, ',');
        if (parts.size() != 2) throw InvalidInput("lift row needs 'u , v'");
        LaurentPoly u = ex.eval(parts[0]), v = ex.eval(parts[1]);
        auto d = patch_diff(arg);
        if (!d) throw InvalidInput("lift row before its patches");
        check_equal(ex.A() * v - ex.B() * u, *d, "A*v - B*u vs patch difference");
        if (!erratum) lift[arg] = {u, v};
      } else if (kind == "triple") {
        if (!erratum) triple_seen = true;
        LaurentPoly s = ex.eval(body);
        if (s.size() != 1 || s.terms().begin()->second != SparsePoly(1)) {
          problem = "not a unit monomial";
        } else {
          XExp e = s.terms().begin()->first;
          if (e.degree() != -4 || e.e[0] >= 0 || e.e[1] >= 0 || e.e[2] >= 0) problem = "not a top-degree Cech monomial";
          if (!lift.count("12") || !lift.count("23") || !lift.count("13"))
            throw InvalidInput("triple row before its lifts");
          check_equal(lift["12"].first + lift["23"].first - lift["13"].first, ex.A() * s, "first component");
          check_equal(lift["12"].second + lift["23"].second - lift["13"].second, ex.B() * s, "second component");
          if (!erratum && !problem) triple = e;
        }
      } else if (kind == "claim") {
        if (!triple_seen) throw InvalidInput("claim row before its triple");
        if (!triple) {
          problem = "the chart's triple row failed";
        } else {
          int k = 0;
          for (int s = 0; s < 3; ++s)
            if (triple->e[static_cast<std::size_t>(s)] == -2) k = s + 1;
          std::string computed = "x" + std::to_string(k);
          if (body != computed)
            problem = "class " + XExp(*triple).str() + " pairs with " + computed + "*, not " + body + "*";
        }
      } else {
        throw InvalidInput("fixture line " + std::to_string(lineno) + ": unknown row kind '" + kind + "'");
      }
    } catch (const InvalidInput& e) {
      throw InvalidInput("fixture line " + std::to_string(lineno) + ": " + e.what());
    }

    if (problem) {
      row.status = erratum ? RowStatus::ErratumConfirmed : RowStatus::Fail;
      row.first_diff = *problem;
    } else {
      row.status = erratum ? RowStatus::ErratumUnexpectedPass : RowStatus::Pass;
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidInput("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline CechReport verify_fixture_file(const std::string& path) { return verify_fixture_text(read_text_file(path)); }

/// Indices of the lines of `text` that are identity rows eligible for mutation.
inline std::vector<std::size_t> mutable_rows(const std::string& text) {
  std::vector<std::size_t> out;
  std::istringstream in(text);
  std::string raw;
  for (std::size_t n = 0; std::getline(in, raw); ++n) {
    std::string line = detail::trim_copy(raw.substr(0, raw.find('#')));
    if (line.empty() || line.rfind("chart", 0) == 0 || line.rfind("erratum", 0) == 0 ||
        line.rfind("claim", 0) == 0)
      continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    std::string body = line.substr(colon + 1);
    if (body.find_first_of("+-") != std::string::npos) out.push_back(n);
  }
  return out;
}

/// Flips the `occurrence`-th (mod count) sign character after the ':' on line `line_index`.
inline std::string flip_sign(const std::string& text, std::size_t line_index, std::size_t occurrence) {
  std::istringstream in(text);
  std::ostringstream out;
  std::string raw;
  for (std::size_t n = 0; std::getline(in, raw); ++n) {
    if (n == line_index) {
      auto colon = raw.find(':');
      std::vector<std::size_t> pos;
      for (std::size_t p = colon + 1; p < raw.size() && raw[p] != '#'; ++p)
        if (raw[p] == '+' || raw[p] == '-') pos.push_back(p);
      if (pos.empty()) throw InvalidInput("no sign to flip on line " + std::to_string(line_index + 1));
      std::size_t p = pos[occurrence % pos.size()];
      raw[p] = raw[p] == '+' ? '-' : '+';
    }
    out << raw << '\n';
  }
  return out.str();
}

}  // namespace quartic
