#pragma once

// Recursive-descent parser for polynomial expressions, shared by the
// commutative and Weyl parsers. Products keep their written order, so the
// same grammar serves noncommutative rings.

#include <cctype>
#include <functional>
#include <string>
#include <string_view>

#include "toric_dmod/error.hpp"
#include "toric_dmod/polynomial.hpp"

namespace toric::detail {

template <class Ring>
class ExpressionParser {
 public:
  using Constant = std::function<Ring(const Rational&)>;
  using Variable = std::function<Ring(std::string_view)>;  // throws ParseError if unknown

  ExpressionParser(std::string_view text, Constant constant, Variable variable)
      : text_(text), constant_(std::move(constant)), variable_(std::move(variable)) {}

  Ring parse() {
    skip_ws();
    if (pos_ >= text_.size()) fail("empty expression");
    Ring r = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse '" + std::string(text_) + "' at offset " + std::to_string(pos_) +
                     ": " + why);
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

  Ring expr() {
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    Ring acc = term();
    if (negate) acc = constant_(Rational(-1)) * acc;
    while (true) {
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        break;
    }
    return acc;
  }

  Ring term() {
    Ring acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Ring factor() {
    Ring base = primary();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      unsigned long k = std::stoul(std::string(text_.substr(start, pos_ - start)));
      Ring r = constant_(Rational(1));
      for (unsigned long i = 0; i < k; ++i) r = r * base;
      return r;
    }
    return base;
  }

  Ring primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Ring r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string num(text_.substr(start, pos_ - start));
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::size_t dstart = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (dstart == pos_) fail("expected denominator");
        std::string den(text_.substr(dstart, pos_ - dstart));
        mpz_class dn(den);
        if (dn == 0) fail("zero denominator");
        Rational q{mpz_class(num), dn};
        q.canonicalize();
        return constant_(q);
      }
      return constant_(Rational(mpz_class(num)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return variable_(text_.substr(start, pos_ - start));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Constant constant_;
  Variable variable_;
};

}  // namespace toric::detail
