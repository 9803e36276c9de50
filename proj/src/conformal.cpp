#include "gca/conformal.hpp"

#include <cmath>

#include "gca/error.hpp"

namespace gca {

namespace {

const MPoly kT = MPoly::variable(Var::T);
const MPoly kLambda = MPoly::variable(Var::Lambda);
const MPoly kMu = MPoly::variable(Var::Mu);

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
}

std::string pair(std::size_t i, std::size_t j) { return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"; }

std::string show(const ConformalElement& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v[k].str();
  return s + "]";
}

}  // namespace

GradedConformalAlgebra::GradedConformalAlgebra(GradingContext ctx, std::vector<Elem> degrees,
                                               std::vector<std::vector<MPoly>> structure)
    : ctx_(std::move(ctx)), degrees_(std::move(degrees)), structure_(std::move(structure)) {
  const std::size_t n = degrees_.size();
  for (Elem d : degrees_)
    if (d < 0 || d >= ctx_.group.order()) throw Error(ErrorKind::InvalidArgument, "basis degree out of range");
  if (structure_.size() != n * n) throw Error(ErrorKind::InvalidArgument, "structure needs one entry per basis pair");
  for (std::size_t p = 0; p < structure_.size(); ++p) {
    if (structure_[p].size() != n)
      throw Error(ErrorKind::InvalidArgument, "structure entry " + pair(p / n, p % n) + " has wrong length");
    for (const auto& c : structure_[p])
      if (c.depends_on(Var::X) || c.depends_on(Var::Mu))
        throw Error(ErrorKind::InvalidArgument,
                    "structure constant " + pair(p / n, p % n) + " may only involve lambda and T: " + c.str());
  }
}

ConformalElement GradedConformalAlgebra::basis_element(std::size_t i, const MPoly& coeff) const {
  ConformalElement v(rank());
  v[i] = coeff;
  return v;
}

std::optional<Elem> element_degree(const GradedConformalAlgebra& c, const ConformalElement& a) {
  if (a.size() != c.rank()) throw Error(ErrorKind::InvalidArgument, "element has wrong length");
  std::optional<Elem> deg;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    if (deg && *deg != c.degree(i)) throw Error(ErrorKind::NotHomogeneous, "element mixes degrees: " + show(a));
    deg = c.degree(i);
  }
  return deg;
}

ConformalElement lambda_product(const GradedConformalAlgebra& c, const ConformalElement& a, const ConformalElement& b,
                                const MPoly& ell) {
  const auto& ctx = c.ctx();
  auto da = element_degree(c, a), db = element_degree(c, b);
  ConformalElement out = c.zero();
  if (!da || !db) return out;
  const Elem alpha = *da, beta = *db, ab = ctx.mul(alpha, beta);
  const Elem ainv = ctx.inv(alpha);

  Substitution left;
  left.bind(Var::T, -ctx.sig(alpha) * (ell + ctx.phi(alpha, ainv)));
  Substitution right;
  right.bind(Var::T, kT + ctx.sig(ab) * ell + ctx.phi(ainv, ab));
  const bool plain = ell == kLambda;
  Substitution at;
  at.bind(Var::Lambda, ell);

  std::vector<std::optional<MPoly>> g(b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    MPoly h = substitute(a[i], left);
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      if (!g[j]) g[j] = substitute(b[j], right);
      MPoly hg = h * *g[j];
      const auto& row = c.structure(i, j);
      for (std::size_t k = 0; k < row.size(); ++k) {
        if (row[k].is_zero()) continue;
        out[k] += hg * (plain ? row[k] : substitute(row[k], at));
      }
    }
  }
  return out;
}

ConformalElement t_times(const ConformalElement& a) {
  ConformalElement out = a;
  for (auto& x : out) x *= kT;
  return out;
}

AxiomReport check_axioms(const GradedConformalAlgebra& c) {
  AxiomReport r;
  const auto& ctx = c.ctx();
  const std::size_t n = c.rank();

  for (std::size_t i = 0; i < n && r.grading; ++i)
    for (std::size_t j = 0; j < n && r.grading; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        ++r.identities_checked;
        if (!c.structure(i, j)[k].is_zero() && c.degree(k) != ctx.mul(c.degree(i), c.degree(j))) {
          r.grading = false;
          r.first_violation = {i, j, k};
          r.failures.push_back("grading violated at " + triple(i, j, k) + ": coefficient " +
                               c.structure(i, j)[k].str() + " lands in degree " + ctx.group.label(c.degree(k)) +
                               ", expected " + ctx.group.label(ctx.mul(c.degree(i), c.degree(j))));
          break;
        }
      }

  if (!c.closure_defects.empty()) {
    r.closure = false;
    r.failures.push_back("closure violated: " + c.closure_defects.front());
  }

  if (!r.grading) {
    r.failures.push_back("associativity and sesquilinearity not checked: grading violated");
    return r;
  }

  for (std::size_t i = 0; i < n && r.sesquilinearity; ++i)
    for (std::size_t j = 0; j < n && r.sesquilinearity; ++j) {
      const Elem alpha = c.degree(i), ab = ctx.mul(alpha, c.degree(j)), ainv = ctx.inv(alpha);
      ConformalElement p = lambda_product(c, c.basis_element(i), c.basis_element(j));
      MPoly left_factor = -ctx.sig(alpha) * (kLambda + ctx.phi(alpha, ainv));
      MPoly right_factor = kT + ctx.sig(ab) * kLambda + ctx.phi(ainv, ab);
      ConformalElement want_left = p, want_right = p;
      for (auto& x : want_left) x *= left_factor;
      for (auto& x : want_right) x *= right_factor;
      r.identities_checked += 2;
      if (lambda_product(c, c.basis_element(i, kT), c.basis_element(j)) != want_left) {
        r.sesquilinearity = false;
        r.first_violation = {i, j, 0};
        r.failures.push_back("left sesquilinearity fails at " + pair(i, j));
      } else if (lambda_product(c, c.basis_element(i), c.basis_element(j, kT)) != want_right) {
        r.sesquilinearity = false;
        r.first_violation = {i, j, 0};
        r.failures.push_back("right sesquilinearity fails at " + pair(i, j));
      }
    }

  static const char* const kVariant[] = {"", " with T on the first factor", " with T on the second factor",
                                         " with T on the third factor"};
  for (std::size_t i = 0; i < n && r.associativity; ++i)
    for (std::size_t j = 0; j < n && r.associativity; ++j) {
      const Elem alpha = c.degree(i), beta = c.degree(j);
      MPoly nu = ctx.sig(alpha) * (kMu - kLambda - ctx.phi(ctx.inv(beta), ctx.inv(alpha)));
      for (std::size_t k = 0; k < n && r.associativity; ++k)
        for (int v = 0; v < 4; ++v) {
          ConformalElement a = c.basis_element(i, v == 1 ? kT : MPoly(1));
          ConformalElement b = c.basis_element(j, v == 2 ? kT : MPoly(1));
          ConformalElement d = c.basis_element(k, v == 3 ? kT : MPoly(1));
          ++r.identities_checked;
          ConformalElement lhs = lambda_product(c, lambda_product(c, a, b), d, kMu);
          ConformalElement rhs = lambda_product(c, a, lambda_product(c, b, d, nu));
          if (lhs != rhs) {
            r.associativity = false;
            if (!r.first_violation) r.first_violation = {i, j, k};
            r.failures.push_back("associativity fails at " + triple(i, j, k) + kVariant[v] + ": " + show(lhs) +
                                 " vs " + show(rhs));
            break;
          }
        }
    }
  return r;
}

GradedConformalAlgebra cur(const GradedAlgebraFD& a, const GradingContext& ctx, bool allow_nonassociative) {
  if (auto v = a.grading_violation(ctx.group))
    throw Error(ErrorKind::InvalidArgument, "algebra is not graded: product " + triple((*v)[0], (*v)[1], (*v)[2]));
  if (!allow_nonassociative)
    if (auto v = a.associativity_violation())
      throw Error(ErrorKind::NotAssociative, "at basis triple " + triple((*v)[0], (*v)[1], (*v)[2]));
  const std::size_t n = a.dim();
  std::vector<std::vector<MPoly>> s(n * n, std::vector<MPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) s[i * n + j][k] = MPoly(a.c(i, j, k));
  GradedConformalAlgebra c(ctx, a.degrees(), std::move(s));
  c.current_of = a;
  return c;
}

GradedConformalAlgebra regrade_by_tau(const GradedConformalAlgebra& c, const OneCochain& tau, const PairTable& phi_new) {
  const auto& ctx = c.ctx();
  PairTable expected = coboundary_of(tau, ctx);
  for (Elem a = 0; a < ctx.group.order(); ++a)
    for (Elem b = 0; b < ctx.group.order(); ++b) {
      expected(a, b) += ctx.phi(a, b);
      if (expected(a, b) != phi_new(a, b))
        throw Error(ErrorKind::CocyclesNotCohomologous, "target cocycle differs from phi + delta(tau) at (" +
                                                            ctx.group.label(a) + "," + ctx.group.label(b) + ")");
    }
  GradingContext next = ctx;
  next.phi = phi_new;
  const std::size_t n = c.rank();
  std::vector<std::vector<MPoly>> s(n * n, std::vector<MPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const Rational& shift = tau[static_cast<std::size_t>(ctx.inv(c.degree(i)))];
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Substitution sub;
        sub.bind(Var::Lambda, kLambda + shift).bind(Var::T, kT + tau[static_cast<std::size_t>(c.degree(k))]);
        s[i * n + j][k] = substitute(c.structure(i, j)[k], sub);
      }
  }
  GradedConformalAlgebra out(std::move(next), c.degrees(), std::move(s));
  out.closure_defects = c.closure_defects;
  return out;
}

ConformalElement regrade_element(const GradedConformalAlgebra& c, const OneCochain& tau, const ConformalElement& a) {
  ConformalElement out = a;
  for (std::size_t k = 0; k < out.size(); ++k) {
    Substitution sub;
    sub.bind(Var::T, kT + tau[static_cast<std::size_t>(c.degree(k))]);
    out[k] = substitute(out[k], sub);
  }
  return out;
}

GradedConformalAlgebra transvect(const GradedConformalAlgebra& c, std::size_t i, std::size_t j, const MPoly& p) {
  const std::size_t n = c.rank();
  if (i >= n || j >= n || i == j) throw Error(ErrorKind::InvalidArgument, "transvection needs two distinct basis indices");
  if (c.degree(i) != c.degree(j)) throw Error(ErrorKind::NotHomogeneous, "transvection must preserve degrees");
  if (p.depends_on(Var::X) || p.depends_on(Var::Lambda) || p.depends_on(Var::Mu))
    throw Error(ErrorKind::InvalidArgument, "transvection coefficient must lie in Q[T]");
  auto f = [&](std::size_t m) {
    ConformalElement v = c.basis_element(m);
    if (m == i) v[j] = p;
    return v;
  };
  std::vector<std::vector<MPoly>> s(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      ConformalElement w = lambda_product(c, f(a), f(b));
      w[j] -= p * w[i];
      s[a * n + b] = std::move(w);
    }
  GradedConformalAlgebra out(c.ctx(), c.degrees(), std::move(s));
  out.closure_defects = c.closure_defects;
  return out;
}

bool conjugation_automorphism(const GradedConformalAlgebra& c, const QMatrix& q) {
  const std::size_t dim = c.rank();
  const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(dim))));
  if (!c.current_of || n * n != dim || q.rows() != n || q.cols() != n ||
      !(*c.current_of == GradedAlgebraFD::matrix_algebra(n, c.degree(0))))
    throw Error(ErrorKind::InvalidArgument, "conjugation check needs Cur of a full matrix algebra of matching size");
  QMatrix qinv = inverse(q);
  std::vector<ConformalElement> image;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      QMatrix e(n, n);
      e(a, b) = 1;
      QMatrix t = qinv * e * q;
      ConformalElement v(dim);
      for (std::size_t k = 0; k < dim; ++k) v[k] = MPoly(t.flat()[k]);
      image.push_back(std::move(v));
    }
  auto apply = [&](const ConformalElement& x) {
    ConformalElement out(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      if (x[k].is_zero()) continue;
      for (std::size_t m = 0; m < dim; ++m)
        if (!image[k][m].is_zero()) out[m] += x[k] * image[k][m];
    }
    return out;
  };
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (lambda_product(c, image[i], image[j]) != apply(lambda_product(c, c.basis_element(i), c.basis_element(j))))
        return false;
  return true;
}

}  // namespace gca
