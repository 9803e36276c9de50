#include "gca/linalg.hpp"

#include <sstream>

#include "gca/error.hpp"

namespace gca {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows, std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorKind::InvalidArgument, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QVector QMatrix::row(std::size_t i) const {
  return QVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                 data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

bool QMatrix::is_zero() const { return is_zero_vector(data_); }

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::InvalidArgument, "matrix shape mismatch in product");
  QMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (gca::is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!gca::is_zero(b(k, j))) c(i, j) += aik * b(k, j);
    }
  return c;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::InvalidArgument, "matrix shape mismatch");
  QMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::InvalidArgument, "matrix shape mismatch");
  QMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

QMatrix operator*(const Rational& s, const QMatrix& a) {
  QMatrix c = a;
  for (auto& x : c.data_) x *= s;
  return c;
}

QVector QMatrix::operator*(const QVector& v) const {
  if (v.size() != cols_) throw Error(ErrorKind::InvalidArgument, "matrix-vector shape mismatch");
  QVector out(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!gca::is_zero(v[j])) out[i] += (*this)(i, j) * v[j];
  return out;
}

std::string QMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

RowEchelon rref(const QMatrix& input) {
  QMatrix m = input;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && gca::is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = Rational(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || gca::is_zero(m(i, c))) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!gca::is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  QMatrix reduced(r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) reduced(i, j) = m(i, j);
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const QMatrix& m) { return rref(m).rank(); }

std::vector<QVector> nullspace(const QMatrix& m) {
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVector> solve(const QMatrix& a, const QVector& b) {
  if (b.size() != a.rows()) throw Error(ErrorKind::InvalidArgument, "solve: shape mismatch");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  RowEchelon e = rref(aug);
  QVector x(a.cols(), Rational(0));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == a.cols()) return std::nullopt;
    x[e.pivots[i]] = e.reduced(i, a.cols());
  }
  return x;
}

QMatrix inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::SingularMatrix, "non-square matrix");
  std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RowEchelon e = rref(aug);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) throw Error(ErrorKind::SingularMatrix, "matrix is singular");
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

Rational determinant(const QMatrix& input) {
  if (input.rows() != input.cols()) throw Error(ErrorKind::InvalidArgument, "determinant of non-square matrix");
  QMatrix m = input;
  std::size_t n = m.rows();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && gca::is_zero(m(p, c))) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (gca::is_zero(m(i, c))) continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

std::vector<QVector> span_basis(const std::vector<QVector>& vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  RowEchelon e = rref(QMatrix::from_rows(vectors, dim));
  std::vector<QVector> out;
  for (std::size_t i = 0; i < e.rank(); ++i) out.push_back(e.reduced.row(i));
  return out;
}

bool in_span(const std::vector<QVector>& basis, const QVector& v) {
  if (is_zero_vector(v)) return true;
  if (basis.empty()) return false;
  return coordinates_in(basis, v).has_value();
}

std::optional<QVector> coordinates_in(const std::vector<QVector>& vectors, const QVector& v) {
  // Solve sum c_i vectors[i] = v, i.e. M^T c = v.
  QMatrix mt(v.size(), vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) mt(j, i) = vectors[i][j];
  return solve(mt, v);
}

bool is_zero_vector(const QVector& v) {
  for (const auto& x : v)
    if (!gca::is_zero(x)) return false;
  return true;
}

QVector add(const QVector& a, const QVector& b) {
  QVector c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

QVector scale(const Rational& s, const QVector& v) {
  QVector c = v;
  for (auto& x : c) x *= s;
  return c;
}

namespace {

std::vector<Integer> positive_divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rational> rational_roots(const QVector& poly_in) {
  QVector poly = poly_in;
  while (!poly.empty() && gca::is_zero(poly.back())) poly.pop_back();
  std::vector<Rational> roots;
  if (poly.size() <= 1) return roots;
  // Factor out t^k.
  std::size_t low = 0;
  while (gca::is_zero(poly[low])) ++low;
  if (low > 0) roots.push_back(Rational(0));
  QVector q(poly.begin() + static_cast<std::ptrdiff_t>(low), poly.end());
  if (q.size() <= 1) return roots;
  // Clear denominators.
  Integer lcm_den = 1;
  for (const auto& c : q) {
    Integer den = c.denominator();
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<Integer> ic;
  for (const auto& c : q) ic.push_back((c * Rational(lcm_den)).numerator());
  auto eval = [&](const Rational& t) {
    Rational acc(0);
    for (auto it = ic.rbegin(); it != ic.rend(); ++it) acc = acc * t + Rational(*it);
    return acc;
  };
  for (const auto& p : positive_divisors(ic.front())) {
    for (const auto& d : positive_divisors(ic.back())) {
      for (int s : {1, -1}) {
        Rational cand(Integer(p * s), d);
        if (gca::is_zero(eval(cand))) {
          bool seen = false;
          for (const auto& r : roots) seen = seen || r == cand;
          if (!seen) roots.push_back(cand);
        }
      }
    }
  }
  return roots;
}

}  // namespace gca
