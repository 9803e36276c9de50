#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gca/rational.hpp"

namespace gca {

using QVector = std::vector<Rational>;

/// Dense matrix over Q, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}
  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  QVector row(std::size_t i) const;
  /// Row-major entries as one vector (used to compare matrices as vectors).
  const QVector& flat() const { return data_; }

  bool is_zero() const;
  QMatrix transpose() const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const Rational& c, const QMatrix& a);
  QVector operator*(const QVector& v) const;
  bool operator==(const QMatrix&) const = default;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  QVector data_;
};

struct RowEchelon {
  QMatrix reduced;                   ///< reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   ///< pivot column of each row
  std::size_t rank() const { return pivots.size(); }
};

RowEchelon rref(const QMatrix& m);
std::size_t rank(const QMatrix& m);
/// Basis of {v : m v = 0}.
std::vector<QVector> nullspace(const QMatrix& m);
/// Some solution of a x = b, if one exists.
std::optional<QVector> solve(const QMatrix& a, const QVector& b);
/// Throws SingularMatrix.
QMatrix inverse(const QMatrix& m);
Rational determinant(const QMatrix& m);

/// Canonical basis (RREF rows) of the span of the given vectors of length dim.
std::vector<QVector> span_basis(const std::vector<QVector>& vectors, std::size_t dim);
bool in_span(const std::vector<QVector>& basis, const QVector& v);
/// Coordinates of v in terms of the given (independent) vectors, if v lies in their span.
std::optional<QVector> coordinates_in(const std::vector<QVector>& vectors, const QVector& v);

bool is_zero_vector(const QVector& v);
QVector add(const QVector& a, const QVector& b);
QVector scale(const Rational& c, const QVector& v);

/// Lowest-degree monic relation among a sequence of vectors v_0, v_1, ...
/// produced on demand: returns coefficients c_0..c_k (c_k = 1) with
/// sum c_i v_i = 0, or nullopt if no relation appears among max_terms vectors.
template <typename Next>
std::optional<QVector> first_linear_relation(Next next, std::size_t max_terms);

/// Distinct rational roots of the polynomial with the given coefficients (low to high).
std::vector<Rational> rational_roots(const QVector& poly);

}  // namespace gca

#include "gca/linalg_impl.hpp"
