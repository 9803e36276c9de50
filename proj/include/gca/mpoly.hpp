#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gca/rational.hpp"

namespace gca {

/// The fixed variable set of every structure polynomial.
enum class Var : std::uint8_t { T = 0, X = 1, Lambda = 2, Mu = 3 };
inline constexpr std::size_t kNumVars = 4;

std::string_view var_name(Var v);

/// Exponent vector over (T, x, lambda, mu) packed into one word so that integer
/// comparison is graded-lex order (total degree first, then T, x, lambda, mu)
/// and monomial multiplication is integer addition.
class Monomial {
 public:
  static constexpr unsigned kMaxExponent = 4095;

  constexpr Monomial() = default;
  static Monomial from_exponents(const std::array<unsigned, kNumVars>& exps);
  static Monomial power(Var v, unsigned e);

  unsigned exponent(Var v) const {
    return static_cast<unsigned>((key_ >> shift(v)) & 0xFFFu);
  }
  unsigned total_degree() const { return static_cast<unsigned>(key_ >> 48); }
  std::uint64_t key() const { return key_; }
  bool is_one() const { return key_ == 0; }

  /// Removes the v-exponent.
  Monomial without(Var v) const;

  Monomial operator*(Monomial other) const { return Monomial(key_ + other.key_); }
  auto operator<=>(const Monomial&) const = default;

 private:
  explicit constexpr Monomial(std::uint64_t key) : key_(key) {}
  static constexpr unsigned shift(Var v) { return 36 - 12 * static_cast<unsigned>(v); }

  std::uint64_t key_ = 0;
};

/// Multivariate polynomial over Q in T, x, lambda, mu. Terms are kept sorted in
/// ascending graded-lex order with no zero coefficients, so equality is structural.
class MPoly {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
    bool operator==(const Term&) const = default;
  };

  MPoly() = default;
  MPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MPoly(long c);             // NOLINT(google-explicit-constructor)

  static MPoly variable(Var v);
  static MPoly term(const Rational& c, Monomial m);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  std::size_t num_terms() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  unsigned degree(Var v) const;
  unsigned total_degree() const;
  bool depends_on(Var v) const { return degree(v) > 0; }
  Rational constant_term() const;
  /// Coefficient of v^k, as a polynomial in the remaining variables.
  MPoly coefficient(Var v, unsigned k) const;

  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const MPoly& other);
  MPoly& operator*=(const Rational& c);
  MPoly operator-() const;

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  friend MPoly operator*(MPoly a, long c) { return a *= Rational(c); }
  friend MPoly operator*(long c, MPoly a) { return a *= Rational(c); }
  bool operator==(const MPoly& other) const = default;

  MPoly pow(unsigned e) const;

  std::string str() const;

 private:
  friend class MPolyBuilder;
  std::vector<Term> terms_;
};

/// Collects unsorted terms and canonicalizes once at the end.
class MPolyBuilder {
 public:
  void add(Monomial m, const Rational& c);
  void add_product(const MPoly& p, Monomial shift, const Rational& scale);
  void add_product(const MPoly& p, const MPoly& q, Monomial shift, const Rational& scale);
  MPoly finish();

 private:
  std::vector<MPoly::Term> pending_;
};

/// Simultaneous substitution; unbound variables map to themselves.
class Substitution {
 public:
  Substitution& bind(Var v, MPoly image);
  const std::optional<MPoly>& image(Var v) const { return images_[static_cast<std::size_t>(v)]; }

 private:
  std::array<std::optional<MPoly>, kNumVars> images_;
};

MPoly substitute(const MPoly& p, const Substitution& s);

/// Evaluates at a rational point (indexed by Var).
Rational evaluate(const MPoly& p, const std::array<Rational, kNumVars>& point);

/// Grammar: rationals `a/b`, variables `T x lambda mu`, `+ - * / ^`, parentheses.
/// Division is only by nonzero constants.
MPoly parse_mpoly(std::string_view text);

}  // namespace gca
