#include "gca/upoly.hpp"

#include "gca/error.hpp"

namespace gca {

UPoly::UPoly(const Rational& c) {
  if (!gca::is_zero(c)) coeffs_.push_back(c);
}

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(const Rational& c, unsigned degree) {
  if (gca::is_zero(c)) return UPoly();
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!coeffs_.empty() && gca::is_zero(coeffs_.back())) coeffs_.pop_back();
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  UPoly r = *this;
  Rational inv = Rational(1) / leading();
  for (auto& c : r.coeffs_) c *= inv;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UPoly(std::move(out));
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Rational UPoly::evaluate(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

MPoly UPoly::to_mpoly(Var v) const {
  MPolyBuilder b;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    b.add(Monomial::power(v, static_cast<unsigned>(k)), coeffs_[k]);
  return b.finish();
}

UPoly UPoly::from_mpoly(const MPoly& p, Var v) {
  std::vector<Rational> coeffs(p.degree(v) + 1, Rational(0));
  for (const auto& t : p.terms()) {
    unsigned e = t.mono.exponent(v);
    if (!t.mono.without(v).is_one())
      throw Error(ErrorKind::InvalidArgument,
                  "polynomial " + p.str() + " is not univariate in " + std::string(var_name(v)));
    coeffs[e] = t.coeff;
  }
  return UPoly(std::move(coeffs));
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero polynomial");
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quot(a.degree() - b.degree() + 1, Rational(0));
  Rational lead_inv = Rational(1) / b.leading();
  const auto& bc = b.coeffs();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    Rational q = rem[k + b.degree()] * lead_inv;
    if (gca::is_zero(q)) continue;
    quot[k] = q;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[k + j] -= q * bc[j];
  }
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

}  // namespace gca
