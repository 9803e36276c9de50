#include <cctype>
#include <string>

#include "gca/error.hpp"
#include "gca/mpoly.hpp"

namespace gca {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  MPoly parse() {
    MPoly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError,
                msg + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MPoly expr() {
    MPoly acc = product();
    for (;;) {
      if (accept('+')) {
        acc += product();
      } else if (accept('-')) {
        acc -= product();
      } else {
        return acc;
      }
    }
  }

  MPoly product() {
    MPoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        MPoly d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc *= Rational(1) / d.constant_term();
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
    MPoly base = atom();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > Monomial::kMaxExponent) fail("exponent too large");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  MPoly atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return MPoly(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      if (name == "T") return MPoly::variable(Var::T);
      if (name == "x") return MPoly::variable(Var::X);
      if (name == "lambda") return MPoly::variable(Var::Lambda);
      if (name == "mu") return MPoly::variable(Var::Mu);
      pos_ = start;
      fail("unknown variable '" + std::string(name) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly parse_mpoly(std::string_view text) { return Parser(text).parse(); }

}  // namespace gca
