#pragma once

// Polynomial text. Grammar (whitespace ignored):
//
//   expr  := term (('+' | '-') term)*
//   term  := unary ('*' unary)*
//   unary := '-' unary | power
//   power := atom ('^' integer)?
//   atom  := integer | identifier | '(' expr ')'
//
// Juxtaposition is rejected; exponents are nonnegative integer literals.
// print_poly emits text that parses back to the same polynomial.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cubicforge/errors.hpp"
#include "cubicforge/kernel/multipoly.hpp"

namespace cubicforge {

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view src, std::vector<std::string> vars, bool infer)
      : src_(src), vars_(std::move(vars)), infer_(infer) {}

  MultiPoly parse() {
    if (infer_) collect_identifiers();
    skip_ws();
    if (pos_ == src_.size()) throw ParseError(pos_ + 1, "expected an expression, found end of input");
    MultiPoly p = expr();
    skip_ws();
    if (pos_ != src_.size()) {
      throw ParseError(pos_ + 1, "expected an operator or end of input, found '" + std::string(1, src_[pos_]) + "'");
    }
    return p.with_variables(vars_);
  }

 private:
  void collect_identifiers() {
    for (std::size_t i = 0; i < src_.size();) {
      if (std::isalpha(static_cast<unsigned char>(src_[i])) || src_[i] == '_') {
        std::size_t j = i;
        while (j < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_')) ++j;
        std::string id(src_.substr(i, j - i));
        if (std::find(vars_.begin(), vars_.end(), id) == vars_.end()) vars_.push_back(id);
        i = j;
      } else if (std::isdigit(static_cast<unsigned char>(src_[i]))) {
        while (i < src_.size() && std::isalnum(static_cast<unsigned char>(src_[i]))) ++i;
      } else {
        ++i;
      }
    }
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    while (accept('*')) acc *= unary();
    return acc;
  }

  MultiPoly unary() {
    if (accept('-')) return -unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        throw ParseError(pos_ + 1, "expected a nonnegative integer exponent");
      }
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      const std::string digits(src_.substr(start, pos_ - start));
      if (digits.size() > 6) throw ParseError(start + 1, "exponent too large");
      return base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  MultiPoly atom() {
    skip_ws();
    if (pos_ >= src_.size()) throw ParseError(pos_ + 1, "expected an operand, found end of input");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) {
        skip_ws();
        throw ParseError(pos_ + 1, "expected ')'");
      }
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (pos_ < src_.size() && (std::isalpha(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        throw ParseError(pos_ + 1, "expected an operator; juxtaposition is not allowed, use '*'");
      }
      return MultiPoly::constant(vars_, Integer(std::string(src_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
      const std::string id(src_.substr(start, pos_ - start));
      if (std::find(vars_.begin(), vars_.end(), id) == vars_.end()) {
        throw ParseError(start + 1, "unknown symbol '" + id + "'");
      }
      return MultiPoly::variable(vars_, id);
    }
    throw ParseError(pos_ + 1, "expected an operand, found '" + std::string(1, c) + "'");
  }

  std::string_view src_;
  std::vector<std::string> vars_;
  bool infer_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `src` over exactly the variables `vars`.
inline MultiPoly parse_poly(std::string_view src, std::vector<std::string> vars) {
  return detail::PolyParser(src, std::move(vars), false).parse();
}

/// Parses `src`, taking variables in order of first appearance.
inline MultiPoly parse_poly(std::string_view src) { return detail::PolyParser(src, {}, true).parse(); }

inline std::string print_poly(const MultiPoly& p) { return p.to_string(); }

}  // namespace cubicforge
