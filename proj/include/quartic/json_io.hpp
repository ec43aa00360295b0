#pragma once

// JSON encodings of pairs, Gamma elements and ring tables.

#include "quartic/error.hpp"
#include "quartic/forms.hpp"
#include "quartic/rings.hpp"

#include <json.hpp>

#include <cctype>
#include <string>

namespace quartic {

using json = nlohmann::json;

/// Integers with |v| < 2^53 become JSON numbers, larger ones decimal strings.
inline json integer_to_json(const Integer& v) {
  static const Integer limit = Integer(1) << 53;
  if (abs(v) < limit) return v.convert_to<long long>();
  return v.str();
}

inline Integer integer_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) return j.get<long long>();
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long long>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    bool ok = s.size() > start;
    for (std::size_t i = start; i < s.size() && ok; ++i) ok = std::isdigit(static_cast<unsigned char>(s[i])) != 0;
    if (!ok) throw InvalidInput(field + ": not a decimal integer string: \"" + s + "\"");
    return Integer(s[0] == '+' ? s.substr(1) : s);
  }
  throw InvalidInput(field + ": expected an integer, got " + std::string(j.type_name()));
}

inline json form_to_json(const TernaryQuadraticForm<Integer>& q) {
  json a = json::array();
  for (const auto& v : q.c) a.push_back(integer_to_json(v));
  return a;
}

inline TernaryQuadraticForm<Integer> form_from_json(const json& j, const std::string& field) {
  if (!j.is_array()) throw InvalidInput(field + ": expected an array of 6 integers");
  if (j.size() != 6)
    throw InvalidInput(field + ": expected 6 coefficients [x11,x22,x33,x12,x13,x23], got " + std::to_string(j.size()));
  TernaryQuadraticForm<Integer> q;
  for (std::size_t i = 0; i < 6; ++i) q.c[i] = integer_from_json(j[i], field + "[" + std::to_string(i) + "]");
  return q;
}

inline json pair_to_json(const DoubleTernaryForm<Integer>& p) {
  return json{{"A", form_to_json(p.A)}, {"B", form_to_json(p.B)}};
}

inline DoubleTernaryForm<Integer> pair_from_json(const json& j) {
  if (!j.is_object()) throw InvalidInput("pair: expected an object with fields \"A\" and \"B\"");
  for (const char* f : {"A", "B"})
    if (!j.contains(f)) throw InvalidInput(std::string(f) + ": missing field");
  for (const auto& [k, v] : j.items())
    if (k != "A" && k != "B") throw InvalidInput(k + ": unexpected field");
  return {form_from_json(j["A"], "A"), form_from_json(j["B"], "B")};
}

template <std::size_t R>
json matrix_to_json(const std::array<std::array<Integer, R>, R>& m) {
  json a = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& v : row) r.push_back(integer_to_json(v));
    a.push_back(r);
  }
  return a;
}

template <std::size_t R>
std::array<std::array<Integer, R>, R> matrix_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != R)
    throw InvalidInput(field + ": expected a " + std::to_string(R) + "x" + std::to_string(R) + " matrix");
  std::array<std::array<Integer, R>, R> m;
  for (std::size_t r = 0; r < R; ++r) {
    std::string rf = field + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].size() != R)
      throw InvalidInput(rf + ": expected " + std::to_string(R) + " entries");
    for (std::size_t c = 0; c < R; ++c) m[r][c] = integer_from_json(j[r][c], rf + "[" + std::to_string(c) + "]");
  }
  return m;
}

inline json gamma_to_json(const GammaElement& g) { return json{{"g", matrix_to_json(g.g)}, {"h", matrix_to_json(g.h)}}; }

inline GammaElement gamma_from_json(const json& j) {
  if (!j.is_object() || !j.contains("g") || !j.contains("h"))
    throw InvalidInput("gamma: expected an object with fields \"g\" and \"h\"");
  GammaElement g{matrix_from_json<3>(j["g"], "g"), matrix_from_json<2>(j["h"], "h")};
  g.validate();
  return g;
}

namespace detail {

inline std::string table_key(int i, int j, int n) {
  if (n == 3) return std::to_string(i) + std::to_string(j);
  static const char names[] = {'w', 't'};
  return std::string{names[i - 1], names[j - 1]};
}

}  // namespace detail

template <int N>
json table_to_json(const RingTable<Integer, N>& t) {
  json m = json::object();
  for (int i = 1; i <= N; ++i)
    for (int j = i; j <= N; ++j) {
      json row = json::array();
      for (const auto& v : t.product(i, j)) row.push_back(integer_to_json(v));
      m[detail::table_key(i, j, N)] = row;
    }
  return json{{"m", m}};
}

template <int N>
RingTable<Integer, N> table_from_json(const json& j) {
  if (!j.is_object() || !j.contains("m") || !j["m"].is_object())
    throw InvalidInput("m: expected an object of products");
  RingTable<Integer, N> t;
  for (int i = 1; i <= N; ++i)
    for (int k = i; k <= N; ++k) {
      std::string key = detail::table_key(i, k, N);
      std::string field = "m." + key;
      if (!j["m"].contains(key)) throw InvalidInput(field + ": missing product");
      const auto& row = j["m"][key];
      if (!row.is_array() || row.size() != static_cast<std::size_t>(N + 1))
        throw InvalidInput(field + ": expected " + std::to_string(N + 1) + " integers");
      for (std::size_t c = 0; c <= static_cast<std::size_t>(N); ++c)
        t.set_m(i, k, static_cast<int>(c), integer_from_json(row[c], field + "[" + std::to_string(c) + "]"));
    }
  return t;
}

inline json cubic_form_to_json(const BinaryCubicForm<Integer>& f) {
  return json::array({integer_to_json(f.a), integer_to_json(f.b), integer_to_json(f.c), integer_to_json(f.d)});
}

/// Parses JSON text; syntax errors are reported with their byte position.
inline json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("parse error: ") + e.what());
  }
}

}  // namespace quartic
