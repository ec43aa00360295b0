#pragma once

// Small recursive-descent parser for arithmetic expressions over an arbitrary
// ring-like value type. Used for the canonical polynomial syntax and for the
// identity fixture files.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' ['-'] digits)?
//   primary := integer | ident ['(' rawargs ')'] | '(' expr ')'

#include "quartic/error.hpp"
#include "quartic/integer.hpp"

#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace quartic {

template <typename T>
struct ExprContext {
  std::function<T(const Integer&)> number;
  // Plain identifier; nullopt means "unknown symbol".
  std::function<std::optional<T>(std::string_view)> symbol;
  // Identifier followed by a parenthesised, comma-separated raw argument list.
  std::function<std::optional<T>(std::string_view, const std::vector<std::string>&)> call;
  std::function<T(const T&, const T&)> divide;
  std::function<T(const T&, long)> power;
};

namespace detail {

template <typename T>
class ExprParser {
 public:
  ExprParser(std::string_view text, const ExprContext<T>& ctx) : s_(text), ctx_(ctx) {}

  T parse_all() {
    T v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("expression parse error at offset " + std::to_string(pos_) + ": " + what +
                       " in \"" + std::string(s_) + "\"");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  T expr() {
    T v = term();
    for (;;) {
      if (eat('+')) {
        v = v + term();
      } else if (eat('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  T term() {
    T v = unary();
    for (;;) {
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        if (!ctx_.divide) fail("division not supported");
        v = ctx_.divide(v, unary());
      } else {
        return v;
      }
    }
  }

  T unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  T power() {
    T base = primary();
    if (eat('^')) {
      skip_ws();
      bool neg = false;
      if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
        neg = s_[pos_] == '-';
        ++pos_;
      }
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      long e = std::stol(std::string(s_.substr(start, pos_ - start)));
      if (neg) e = -e;
      if (!ctx_.power) fail("exponentiation not supported");
      return ctx_.power(base, e);
    }
    return base;
  }

  T primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      T v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return ctx_.number(Integer(std::string(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '(' && ctx_.call) {
        ++pos_;
        std::vector<std::string> args;
        std::string cur;
        int depth = 0;
        for (;;) {
          if (pos_ >= s_.size()) fail("unterminated argument list");
          char d = s_[pos_++];
          if (d == '(') ++depth;
          if (d == ')') {
            if (depth == 0) break;
            --depth;
          }
          if (d == ',' && depth == 0) {
            args.push_back(trim(cur));
            cur.clear();
          } else {
            cur.push_back(d);
          }
        }
        args.push_back(trim(cur));
        auto v = ctx_.call(name, args);
        if (!v) fail("unknown function '" + std::string(name) + "'");
        return *v;
      }
      auto v = ctx_.symbol ? ctx_.symbol(name) : std::nullopt;
      if (!v) fail("unknown symbol '" + std::string(name) + "'");
      return *v;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  static std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
  }

  std::string_view s_;
  const ExprContext<T>& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <typename T>
T parse_expression(std::string_view text, const ExprContext<T>& ctx) {
  return detail::ExprParser<T>(text, ctx).parse_all();
}

}  // namespace quartic
