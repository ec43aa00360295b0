#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <cstdint>
#include <string>

namespace quartic {

namespace mp = boost::multiprecision;

// Expression templates off: values behave like plain value types under auto and ?:.
using Integer = mp::number<mp::cpp_int_backend<>, mp::et_off>;
using Rational = mp::number<mp::cpp_rational_backend, mp::et_off>;

/// Minimal commutative-ring interface shared by Integer and SparsePoly.
template <typename T>
concept CommutativeRing = requires(T a, T b) {
  { T(0) } -> std::convertible_to<T>;
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a == b } -> std::convertible_to<bool>;
};

inline bool is_zero(const Integer& v) { return v.is_zero(); }

inline std::string to_string(const Integer& v) { return v.str(); }

}  // namespace quartic
