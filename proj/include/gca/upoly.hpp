#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gca/mpoly.hpp"
#include "gca/rational.hpp"

namespace gca {

/// Dense univariate polynomial over Q, coefficients from degree 0 upwards.
class UPoly {
 public:
  UPoly() = default;
  UPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  UPoly(long c) : UPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<Rational> coeffs);

  static UPoly monomial(const Rational& c, unsigned degree);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(unsigned k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  UPoly monic() const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly operator-() const;
  bool operator==(const UPoly&) const = default;

  Rational evaluate(const Rational& t) const;

  MPoly to_mpoly(Var v = Var::T) const;
  /// Throws InvalidArgument if p involves any variable other than v.
  static UPoly from_mpoly(const MPoly& p, Var v = Var::T);

  std::string str() const { return to_mpoly().str(); }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division: a = q*b + r with deg r < deg b. b must be nonzero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);

}  // namespace gca
