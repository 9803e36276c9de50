#include "gca/rational.hpp"

#include <cctype>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "gca/error.hpp"

namespace gca {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

namespace {

using Wide = __int128;
using UWide = unsigned __int128;

constexpr Wide kMax = INT64_MAX;

bool fits(Wide v) { return v >= -kMax && v <= kMax; }

Integer to_integer(Wide v) {
  bool neg = v < 0;
  UWide m = neg ? static_cast<UWide>(-v) : static_cast<UWide>(v);
  Integer z = static_cast<unsigned long>(m >> 64);
  z <<= 64;
  z += static_cast<unsigned long>(m & 0xffffffffffffffffULL);
  return neg ? Integer(-z) : z;
}

std::uint64_t uabs(std::int64_t v) { return v < 0 ? static_cast<std::uint64_t>(-v) : static_cast<std::uint64_t>(v); }

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (num == INT64_MIN || den == INT64_MIN) {
    set_big(mpq_class(Integer(std::to_string(num)), Integer(std::to_string(den))));
    return;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  auto g = static_cast<std::int64_t>(std::gcd(uabs(num), static_cast<std::uint64_t>(den)));
  num_ = num / g;
  den_ = den / g;
}

Rational::Rational(const Integer& n) { set_big(mpq_class(n)); }

Rational::Rational(const Integer& n, const Integer& d) {
  if (d == 0) throw std::domain_error("zero denominator");
  set_big(mpq_class(n, d));
}

Rational::Rational(const mpq_class& q) { set_big(q); }

void Rational::set_big(mpq_class q) {
  q.canonicalize();
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != INT64_MIN) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
  } else {
    big_ = std::make_unique<mpq_class>(std::move(q));
  }
}

Rational Rational::from_wide(Wide n, Wide d) {
  Rational r;
  if (fits(n) && fits(d)) {
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
  } else {
    r.big_ = std::make_unique<mpq_class>(to_integer(n), to_integer(d));
  }
  return r;
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(Integer(static_cast<long>(num_)), Integer(static_cast<long>(den_)));
}

Integer Rational::numerator() const { return big_ ? Integer(big_->get_num()) : Integer(static_cast<long>(num_)); }

Integer Rational::denominator() const { return big_ ? Integer(big_->get_den()) : Integer(static_cast<long>(den_)); }

std::string Rational::get_str() const {
  if (big_) return big_->get_str();
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (big_) return Rational(mpq_class(-*big_));
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
  if (a.den_ == 1 && b.den_ == 1) return Rational::from_wide(Wide(a.num_) + b.num_, 1);
  auto g = static_cast<std::int64_t>(std::gcd(static_cast<std::uint64_t>(a.den_), static_cast<std::uint64_t>(b.den_)));
  if (g == 1)
    return Rational::from_wide(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
  Wide t = Wide(a.num_) * (b.den_ / g) + Wide(b.num_) * (a.den_ / g);
  if (t == 0) return Rational();
  Wide r = t % g;
  auto g2 = static_cast<std::int64_t>(std::gcd(static_cast<std::uint64_t>(r < 0 ? -r : r), static_cast<std::uint64_t>(g)));
  return Rational::from_wide(t / g2, Wide(a.den_ / g) * (b.den_ / g2));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
  if (a.num_ == 0 || b.num_ == 0) return Rational();
  auto g1 = static_cast<std::int64_t>(std::gcd(uabs(a.num_), static_cast<std::uint64_t>(b.den_)));
  auto g2 = static_cast<std::int64_t>(std::gcd(uabs(b.num_), static_cast<std::uint64_t>(a.den_)));
  return Rational::from_wide(Wide(a.num_ / g1) * (b.num_ / g2), Wide(a.den_ / g2) * (b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (sgn(b) == 0) throw std::domain_error("division by zero");
  if (b.big_) return Rational(mpq_class(a.to_mpq() / *b.big_));
  Rational inv;
  inv.num_ = b.num_ < 0 ? -b.den_ : b.den_;
  inv.den_ = b.num_ < 0 ? -b.num_ : b.num_;
  return a * inv;
}

bool operator==(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return a.big_ && b.big_ && *a.big_ == *b.big_;
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  return Wide(a.num_) * b.den_ <=> Wide(b.num_) * a.den_;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  std::string_view num = trim(s.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
    throw Error(ErrorKind::ParseError, "not a rational literal: '" + std::string(text) + "'");
  std::string n(num[0] == '+' ? num.substr(1) : num);
  Integer d{std::string(den)};
  if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(Integer(n), d);
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace gca
