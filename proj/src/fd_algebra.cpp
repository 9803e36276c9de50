#include "gca/fd_algebra.hpp"

#include <algorithm>

#include "gca/error.hpp"

namespace gca {

GradedAlgebraFD::GradedAlgebraFD(std::vector<Elem> degrees, std::vector<Rational> mult)
    : degrees_(std::move(degrees)), mult_(std::move(mult)) {
  const std::size_t d = degrees_.size();
  if (mult_.size() != d * d * d) throw Error(ErrorKind::InvalidArgument, "structure constant array has wrong size");
}

GradedAlgebraFD GradedAlgebraFD::matrix_algebra(std::size_t n, Elem e) {
  const std::size_t d = n * n;
  std::vector<Rational> m(d * d * d, Rational(0));
  // E_ab E_cf = δ_bc E_af
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t f = 0; f < n; ++f) m[((a * n + b) * d + (b * n + f)) * d + (a * n + f)] = 1;
  return GradedAlgebraFD(std::vector<Elem>(d, e), std::move(m));
}

GradedAlgebraFD GradedAlgebraFD::group_algebra(const FiniteGroup& g, const ElementSet& sub,
                                               const std::optional<PairTable>& theta) {
  if (!g.is_subgroup(sub)) throw Error(ErrorKind::NotASubgroup, "group algebra needs a subgroup");
  std::vector<Elem> elems(sub.begin(), sub.end());
  const std::size_t d = elems.size();
  auto pos = [&](Elem x) { return static_cast<std::size_t>(std::find(elems.begin(), elems.end(), x) - elems.begin()); };
  std::vector<Rational> m(d * d * d, Rational(0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      m[(i * d + j) * d + pos(g.mul(elems[i], elems[j]))] = theta ? (*theta)(elems[i], elems[j]) : Rational(1);
  return GradedAlgebraFD(elems, std::move(m));
}

GradedAlgebraFD GradedAlgebraFD::direct_sum(const GradedAlgebraFD& a, const GradedAlgebraFD& b) {
  const std::size_t da = a.dim(), d = a.dim() + b.dim();
  std::vector<Elem> degs = a.degrees_;
  degs.insert(degs.end(), b.degrees_.begin(), b.degrees_.end());
  std::vector<Rational> m(d * d * d, Rational(0));
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < da; ++k) m[(i * d + j) * d + k] = a.c(i, j, k);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k) m[((da + i) * d + da + j) * d + da + k] = b.c(i, j, k);
  return GradedAlgebraFD(std::move(degs), std::move(m));
}

GradedAlgebraFD GradedAlgebraFD::from_matrices(const std::vector<QMatrix>& basis, std::vector<Elem> degrees) {
  const std::size_t d = basis.size();
  if (degrees.size() != d) throw Error(ErrorKind::InvalidArgument, "one degree per basis matrix expected");
  std::vector<QVector> flat;
  for (const auto& m : basis) flat.push_back(m.flat());
  if (d > 0 && span_basis(flat, flat[0].size()).size() != d)
    throw Error(ErrorKind::InvalidArgument, "basis matrices are linearly dependent");
  std::vector<Rational> mult(d * d * d, Rational(0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto coords = coordinates_in(flat, (basis[i] * basis[j]).flat());
      if (!coords)
        throw Error(ErrorKind::InvalidArgument,
                    "span is not closed: product of basis " + std::to_string(i) + " and " + std::to_string(j));
      for (std::size_t k = 0; k < d; ++k) mult[(i * d + j) * d + k] = (*coords)[k];
    }
  return GradedAlgebraFD(std::move(degrees), std::move(mult));
}

QVector GradedAlgebraFD::product(const QVector& a, const QVector& b) const {
  const std::size_t d = dim();
  QVector out(d, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (gca::is_zero(a[i])) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (gca::is_zero(b[j])) continue;
      Rational s = a[i] * b[j];
      for (std::size_t k = 0; k < d; ++k)
        if (!gca::is_zero(c(i, j, k))) out[k] += s * c(i, j, k);
    }
  }
  return out;
}

QVector GradedAlgebraFD::basis_vector(std::size_t i) const {
  QVector v(dim(), Rational(0));
  v[i] = 1;
  return v;
}

QMatrix GradedAlgebraFD::left_mult(const QVector& a) const {
  QMatrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    QVector col = product(a, basis_vector(j));
    for (std::size_t k = 0; k < dim(); ++k) m(k, j) = col[k];
  }
  return m;
}

QMatrix GradedAlgebraFD::right_mult(const QVector& a) const {
  QMatrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    QVector col = product(basis_vector(j), a);
    for (std::size_t k = 0; k < dim(); ++k) m(k, j) = col[k];
  }
  return m;
}

std::optional<std::array<std::size_t, 3>> GradedAlgebraFD::associativity_violation() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) {
      QVector ij = product(basis_vector(i), basis_vector(j));
      for (std::size_t k = 0; k < dim(); ++k) {
        QVector jk = product(basis_vector(j), basis_vector(k));
        if (product(ij, basis_vector(k)) != product(basis_vector(i), jk)) return std::array<std::size_t, 3>{i, j, k};
      }
    }
  return std::nullopt;
}

std::optional<std::array<std::size_t, 3>> GradedAlgebraFD::grading_violation(const FiniteGroup& g) const {
  for (Elem x : degrees_)
    if (x < 0 || x >= g.order()) throw Error(ErrorKind::InvalidArgument, "basis degree out of range");
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      for (std::size_t k = 0; k < dim(); ++k)
        if (!gca::is_zero(c(i, j, k)) && degrees_[k] != g.mul(degrees_[i], degrees_[j]))
          return std::array<std::size_t, 3>{i, j, k};
  return std::nullopt;
}

bool GradedAlgebraFD::products_vanish() const { return is_zero_vector(mult_); }

std::vector<std::size_t> GradedAlgebraFD::indices_of_degree(Elem g) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(); ++i)
    if (degrees_[i] == g) out.push_back(i);
  return out;
}

std::vector<QVector> radical_fd(const GradedAlgebraFD& a) {
  const std::size_t d = a.dim();
  // Gram matrix of the trace form Tr(L_{e_i} L_{e_j}).
  QMatrix gram(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Rational t(0);
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q)
          if (!gca::is_zero(a.c(i, q, p))) t += a.c(i, q, p) * a.c(j, p, q);
      gram(i, j) = gram(j, i) = t;
    }
  return nullspace(gram);
}

std::vector<QVector> center_fd(const GradedAlgebraFD& a) {
  const std::size_t d = a.dim();
  QMatrix m(d * d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < d; ++j) m(i * d + k, j) = a.c(j, i, k) - a.c(i, j, k);
  return nullspace(m);
}

std::optional<QVector> unit_fd(const GradedAlgebraFD& a) {
  const std::size_t d = a.dim();
  QMatrix m(2 * d * d, d);
  QVector rhs(2 * d * d, Rational(0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t j = 0; j < d; ++j) {
        m(i * d + k, j) = a.c(j, i, k);
        m(d * d + i * d + k, j) = a.c(i, j, k);
      }
      if (i == k) rhs[i * d + k] = rhs[d * d + i * d + k] = 1;
    }
  return solve(m, rhs);
}

namespace {

// p(z) in the subalgebra with unit f; coefficients low to high.
QVector eval_poly(const GradedAlgebraFD& a, const QVector& coeffs, const QVector& z, const QVector& f) {
  QVector acc(a.dim(), Rational(0));
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = add(a.product(acc, z), scale(*it, f));
  return acc;
}

// Divides by (t - r), dropping the (zero) remainder.
QVector deflate(const QVector& p, const Rational& r) {
  QVector q(p.size() - 1, Rational(0));
  Rational carry(0);
  for (std::size_t k = p.size() - 1; k-- > 0;) {
    carry = p[k + 1] + carry * r;
    q[k] = carry;
  }
  return q;
}

Rational eval_scalar(const QVector& p, const Rational& t) {
  Rational acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

// Splits idempotent f of the commutative semisimple algebra spanned by `zbasis`.
// Returns nullopt if f is primitive; throws SplitFieldRequired if f only splits over an extension.
std::optional<std::vector<QVector>> split_once(const GradedAlgebraFD& a, const std::vector<QVector>& zbasis,
                                               const QVector& f) {
  std::vector<QVector> fz;
  for (const auto& z : zbasis) fz.push_back(a.product(f, z));
  fz = span_basis(fz, a.dim());
  if (fz.size() <= 1) return std::nullopt;
  for (const auto& z : fz) {
    if (in_span({f}, z)) continue;
    QVector power = f;
    auto minpoly = first_linear_relation(
        [&] {
          QVector v = power;
          power = a.product(power, z);
          return v;
        },
        fz.size() + 1);
    if (!minpoly) throw Error(ErrorKind::InternalInconsistency, "no minimal polynomial found");
    auto roots = rational_roots(*minpoly);
    if (roots.empty()) continue;
    std::vector<QVector> parts;
    QVector rest = f;
    for (const auto& r : roots) {
      QVector q = deflate(*minpoly, r);
      QVector e = scale(Rational(1) / eval_scalar(q, r), eval_poly(a, q, z, f));
      parts.push_back(e);
      for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= e[i];
    }
    if (!is_zero_vector(rest)) parts.push_back(rest);
    if (parts.size() > 1) return parts;
  }
  throw Error(ErrorKind::SplitFieldRequired, "degree-e center has a block that does not split over Q");
}

}  // namespace

std::vector<GradedBlock> decompose_semisimple_graded(const GradedAlgebraFD& a, Elem e) {
  if (a.dim() == 0) return {};
  if (!radical_fd(a).empty()) throw Error(ErrorKind::NotSemisimple, "algebra has a nonzero radical");
  auto unit = unit_fd(a);
  if (!unit) throw Error(ErrorKind::InternalInconsistency, "semisimple algebra without unit");

  // degree-e part of the center
  std::vector<QVector> ze;
  auto degree_e = a.indices_of_degree(e);
  for (auto z : center_fd(a)) {
    // the center is graded, so its degree-e component is again central
    QVector comp(a.dim(), Rational(0));
    for (auto i : degree_e) comp[i] = z[i];
    ze.push_back(comp);
  }
  ze = span_basis(ze, a.dim());

  std::vector<QVector> pending{*unit}, primitive;
  while (!pending.empty()) {
    QVector f = pending.back();
    pending.pop_back();
    if (auto parts = split_once(a, ze, f))
      pending.insert(pending.end(), parts->begin(), parts->end());
    else
      primitive.push_back(f);
  }
  std::sort(primitive.begin(), primitive.end(), [&](const QVector& x, const QVector& y) {
    auto first = [](const QVector& v) {
      std::size_t i = 0;
      while (i < v.size() && gca::is_zero(v[i])) ++i;
      return i;
    };
    return first(x) < first(y);
  });

  std::vector<GradedBlock> blocks;
  for (const auto& idem : primitive) {
    GradedBlock b;
    b.idempotent = idem;
    std::vector<Elem> degs;
    std::vector<Elem> seen;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      Elem g = a.degree(i);
      if (std::find(seen.begin(), seen.end(), g) != seen.end()) continue;
      seen.push_back(g);
      std::vector<QVector> part;
      for (auto j : a.indices_of_degree(g)) part.push_back(a.product(idem, a.basis_vector(j)));
      for (auto& v : span_basis(part, a.dim())) {
        b.basis.push_back(v);
        degs.push_back(g);
      }
    }
    const std::size_t d = b.basis.size();
    std::vector<Rational> mult(d * d * d, Rational(0));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        auto coords = coordinates_in(b.basis, a.product(b.basis[i], b.basis[j]));
        if (!coords) throw Error(ErrorKind::InternalInconsistency, "block is not closed under products");
        for (std::size_t k = 0; k < d; ++k) mult[(i * d + j) * d + k] = (*coords)[k];
      }
    b.algebra = GradedAlgebraFD(std::move(degs), std::move(mult));
    blocks.push_back(std::move(b));
  }
  return blocks;
}

bool is_graded_simple(const GradedAlgebraFD& a, Elem e) {
  if (a.dim() == 0 || a.products_vanish()) return false;
  if (!radical_fd(a).empty()) return false;
  return decompose_semisimple_graded(a, e).size() == 1;
}

}  // namespace gca
