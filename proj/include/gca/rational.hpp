#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <type_traits>

namespace gca {

using Integer = mpz_class;

/// Exact rational, always canonical (reduced, positive denominator).
/// Values whose numerator and denominator fit in int64 are stored inline;
/// anything larger falls back to GMP.
class Rational {
 public:
  Rational() noexcept = default;
  template <std::integral I>
  Rational(I v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<I>) {
      if (static_cast<long long>(v) != INT64_MIN) {
        num_ = static_cast<std::int64_t>(v);
        return;
      }
    } else {
      if (static_cast<unsigned long long>(v) <= static_cast<unsigned long long>(INT64_MAX)) {
        num_ = static_cast<std::int64_t>(v);
        return;
      }
    }
    set_big(mpq_class(Integer(std::to_string(v))));
  }
  /// Throws std::domain_error on a zero denominator.
  Rational(std::int64_t num, std::int64_t den);
  Rational(const Integer& n);  // NOLINT(google-explicit-constructor)
  Rational(const Integer& n, const Integer& d);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
  }
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      num_ = o.num_;
      den_ = o.den_;
      big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;

  bool is_small() const { return !big_; }
  mpq_class to_mpq() const;
  Integer numerator() const;
  Integer denominator() const;
  std::string get_str() const;
  /// Values are always canonical; kept for call sites that normalise explicitly.
  void canonicalize() {}

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);
  friend int sgn(const Rational& q) {
    if (q.big_) return ::sgn(*q.big_);
    return (q.num_ > 0) - (q.num_ < 0);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& q);

 private:
  void set_big(mpq_class q);
  static Rational from_wide(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

/// Accepts "a", "-a", "a/b"; throws ParseError otherwise.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace gca
