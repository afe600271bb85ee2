#ifndef LFD_POLY_IO_HPP
#define LFD_POLY_IO_HPP

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lfd/error.hpp"
#include "lfd/mpoly.hpp"

namespace lfd {

namespace detail {

// Recursive-descent parser for  + - * / ^ ( )  over rational literals and
// the declared variables. Division is only accepted by nonzero constants.
class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& vars)
      : text_(text), vars_(vars) {}

  MPoly parse() {
    MPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::Syntax, "exactalg",
                "syntax error at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MPoly expr() {
    MPoly acc(vars_.size());
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    MPoly first = term();
    acc = negate ? -first : first;
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MPoly term() {
    MPoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        MPoly d = unary();
        if (d.is_zero() || d.degree() != 0) {
          pos_ = at;
          fail("division only by nonzero constants");
        }
        acc *= Rational(1) / d.terms().begin()->second;
      } else {
        return acc;
      }
    }
  }

  MPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MPoly power() {
    MPoly base = primary();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected nonnegative integer exponent");
      const unsigned long k = std::stoul(std::string(text_.substr(start, pos_ - start)));
      return base.pow(static_cast<unsigned>(k));
    }
    return base;
  }

  MPoly primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Rational value(std::string(text_.substr(start, pos_ - start)), 10);
      return MPoly::constant(vars_.size(), value);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) return MPoly::variable(vars_.size(), i);
      }
      throw Error(ErrorCode::UnknownVariable, "exactalg",
                  "unknown variable '" + name + "' at position " + std::to_string(start));
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline MPoly parse_poly(std::string_view text, const std::vector<std::string>& vars) {
  return detail::PolyParser(text, vars).parse();
}

inline std::string monomial_to_string(const Exponents& e, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.at(i);
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

/// Inverse of parse_poly: terms in graded-lex order, e.g. "x^2 + 2*x*y - 3/4*y".
inline std::string to_string(const MPoly& p, const std::vector<std::string>& vars) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = monomial_to_string(e, vars);
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + '*' + mono;
    }
  }
  return out;
}

inline std::vector<std::string> default_variable_names(std::size_t n, const std::string& stem = "x") {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(stem + std::to_string(i + 1));
  return names;
}

}  // namespace lfd

#endif  // LFD_POLY_IO_HPP
