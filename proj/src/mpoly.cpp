#include "gca/mpoly.hpp"

#include <algorithm>
#include <sstream>

#include "gca/error.hpp"

namespace gca {

std::string_view var_name(Var v) {
  switch (v) {
    case Var::T: return "T";
    case Var::X: return "x";
    case Var::Lambda: return "lambda";
    case Var::Mu: return "mu";
  }
  return "?";
}

Monomial Monomial::from_exponents(const std::array<unsigned, kNumVars>& exps) {
  std::uint64_t key = 0;
  unsigned total = 0;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (exps[i] > kMaxExponent) throw Error(ErrorKind::InvalidArgument, "exponent too large");
    key |= static_cast<std::uint64_t>(exps[i]) << shift(static_cast<Var>(i));
    total += exps[i];
  }
  return Monomial(key | (static_cast<std::uint64_t>(total) << 48));
}

Monomial Monomial::power(Var v, unsigned e) {
  std::array<unsigned, kNumVars> exps{};
  exps[static_cast<std::size_t>(v)] = e;
  return from_exponents(exps);
}

Monomial Monomial::without(Var v) const {
  std::uint64_t e = exponent(v);
  return Monomial(key_ - (e << shift(v)) - (e << 48));
}

// ---------------------------------------------------------------------------

MPoly::MPoly(const Rational& c) {
  if (!gca::is_zero(c)) terms_.push_back({Monomial(), c});
}

MPoly::MPoly(long c) : MPoly(Rational(c)) {}

MPoly MPoly::variable(Var v) { return term(Rational(1), Monomial::power(v, 1)); }

MPoly MPoly::term(const Rational& c, Monomial m) {
  MPoly p;
  if (!gca::is_zero(c)) p.terms_.push_back({m, c});
  return p;
}

unsigned MPoly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(v));
  return d;
}

unsigned MPoly::total_degree() const { return terms_.empty() ? 0 : terms_.back().mono.total_degree(); }

Rational MPoly::constant_term() const {
  if (!terms_.empty() && terms_.front().mono.is_one()) return terms_.front().coeff;
  return Rational(0);
}

MPoly MPoly::coefficient(Var v, unsigned k) const {
  MPolyBuilder b;
  for (const auto& t : terms_)
    if (t.mono.exponent(v) == k) b.add(t.mono.without(v), t.coeff);
  return b.finish();
}

namespace {

template <bool Subtract>
std::vector<MPoly::Term> merge(const std::vector<MPoly::Term>& a, const std::vector<MPoly::Term>& b) {
  std::vector<MPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono < b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono < a[i].mono) {
      out.push_back(b[j++]);
      if constexpr (Subtract) out.back().coeff = -out.back().coeff;
    } else {
      Rational c = Subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (!gca::is_zero(c)) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MPoly& MPoly::operator+=(const MPoly& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge<false>(terms_, other.terms_);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge<true>(terms_, other.terms_);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& other) {
  *this = *this * other;
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (gca::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly();
  if (a.terms_.size() == 1 && a.terms_[0].mono.is_one()) return b * a.terms_[0].coeff;
  if (b.terms_.size() == 1 && b.terms_[0].mono.is_one()) return a * b.terms_[0].coeff;
  MPolyBuilder builder;
  builder.add_product(a, b, Monomial(), Rational(1));
  return builder.finish();
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result(1L);
  MPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->coeff;
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool has_vars = !it->mono.is_one();
    bool unit = c == 1;
    if (!unit || !has_vars) {
      os << c.get_str();
      if (has_vars) os << "*";
    }
    bool first_var = true;
    for (std::size_t v = 0; v < kNumVars; ++v) {
      unsigned e = it->mono.exponent(static_cast<Var>(v));
      if (e == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << var_name(static_cast<Var>(v));
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------

void MPolyBuilder::add(Monomial m, const Rational& c) {
  if (!gca::is_zero(c)) pending_.push_back({m, c});
}

void MPolyBuilder::add_product(const MPoly& p, Monomial shift, const Rational& scale) {
  if (gca::is_zero(scale)) return;
  for (const auto& t : p.terms_) pending_.push_back({t.mono * shift, t.coeff * scale});
}

void MPolyBuilder::add_product(const MPoly& p, const MPoly& q, Monomial shift, const Rational& scale) {
  if (gca::is_zero(scale)) return;
  pending_.reserve(pending_.size() + p.terms_.size() * q.terms_.size());
  for (const auto& s : p.terms_) {
    Rational sc = s.coeff * scale;
    for (const auto& t : q.terms_) {
      pending_.push_back({s.mono * t.mono * shift, sc * t.coeff});
    }
  }
}

MPoly MPolyBuilder::finish() {
  std::sort(pending_.begin(), pending_.end(),
            [](const MPoly::Term& a, const MPoly::Term& b) { return a.mono < b.mono; });
  MPoly out;
  auto& terms = out.terms_;
  for (auto& t : pending_) {
    if (!terms.empty() && terms.back().mono == t.mono) {
      terms.back().coeff += t.coeff;
    } else {
      if (!terms.empty() && gca::is_zero(terms.back().coeff)) terms.pop_back();
      terms.push_back(std::move(t));
    }
  }
  if (!terms.empty() && gca::is_zero(terms.back().coeff)) terms.pop_back();
  pending_.clear();
  return out;
}

// ---------------------------------------------------------------------------

Substitution& Substitution::bind(Var v, MPoly image) {
  images_[static_cast<std::size_t>(v)] = std::move(image);
  return *this;
}

MPoly substitute(const MPoly& p, const Substitution& s) {
  if (p.is_zero()) return p;
  // Powers of each bound image, computed once up to the degree needed.
  std::array<std::vector<MPoly>, kNumVars> powers;
  std::vector<Var> bound;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    Var v = static_cast<Var>(i);
    if (!s.image(v)) continue;
    bound.push_back(v);
    unsigned d = p.degree(v);
    auto& pw = powers[i];
    pw.reserve(d + 1);
    pw.emplace_back(1L);
    for (unsigned e = 1; e <= d; ++e) pw.push_back(pw.back() * *s.image(v));
  }
  if (bound.empty()) return p;

  MPolyBuilder builder;
  for (const auto& t : p.terms()) {
    Monomial rest = t.mono;
    for (Var v : bound) rest = rest.without(v);
    // Product of the bound-variable power images; at most two factors are
    // multiplied out fully, the last one is folded into the builder.
    const MPoly* last = nullptr;
    MPoly acc;
    bool have_acc = false;
    for (Var v : bound) {
      unsigned e = t.mono.exponent(v);
      if (e == 0) continue;
      const MPoly& f = powers[static_cast<std::size_t>(v)][e];
      if (last == nullptr) {
        last = &f;
      } else if (!have_acc) {
        acc = *last * f;
        have_acc = true;
      } else {
        acc = acc * f;
      }
    }
    if (last == nullptr) {
      builder.add(rest, t.coeff);
    } else if (!have_acc) {
      builder.add_product(*last, rest, t.coeff);
    } else {
      builder.add_product(acc, rest, t.coeff);
    }
  }
  return builder.finish();
}

Rational evaluate(const MPoly& p, const std::array<Rational, kNumVars>& point) {
  Rational sum(0);
  for (const auto& t : p.terms()) {
    Rational value = t.coeff;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      unsigned e = t.mono.exponent(static_cast<Var>(i));
      for (unsigned k = 0; k < e; ++k) value *= point[i];
    }
    sum += value;
  }
  return sum;
}

}  // namespace gca
