#include "gca/cend.hpp"

#include "gca/error.hpp"

namespace gca {

namespace {
const MPoly kT = MPoly::variable(Var::T);
const MPoly kX = MPoly::variable(Var::X);
const MPoly kLambda = MPoly::variable(Var::Lambda);
const MPoly kMu = MPoly::variable(Var::Mu);

std::vector<MPoly> monomials_up_to(unsigned degree) {
  std::vector<MPoly> out;
  for (unsigned total = 0; total <= degree; ++total)
    for (unsigned a = 0; a <= total; ++a) out.push_back(kT.pow(a) * kX.pow(total - a));
  return out;
}
}  // namespace

PolyMatrix PolyMatrix::identity(std::size_t size) {
  PolyMatrix m(size);
  for (std::size_t i = 0; i < size; ++i) m.at(i, i) = MPoly(1);
  return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.n != b.n) throw Error(ErrorKind::InvalidArgument, "polynomial matrix size mismatch");
  PolyMatrix c(a.n);
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t k = 0; k < a.n; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < a.n; ++j)
        if (!b.at(k, j).is_zero()) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

namespace {
PolyMatrix minor_of(const PolyMatrix& m, std::size_t r, std::size_t c) {
  PolyMatrix out(m.n - 1);
  for (std::size_t i = 0, oi = 0; i < m.n; ++i) {
    if (i == r) continue;
    for (std::size_t j = 0, oj = 0; j < m.n; ++j) {
      if (j == c) continue;
      out.at(oi, oj++) = m.at(i, j);
    }
    ++oi;
  }
  return out;
}
}  // namespace

MPoly determinant(const PolyMatrix& m) {
  if (m.n == 0) return MPoly(1);
  if (m.n == 1) return m.at(0, 0);
  MPoly det;
  for (std::size_t j = 0; j < m.n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    MPoly term = m.at(0, j) * determinant(minor_of(m, 0, j));
    if (j % 2) det -= term;
    else det += term;
  }
  return det;
}

PolyMatrix adjugate(const PolyMatrix& m) {
  PolyMatrix adj(m.n);
  if (m.n == 1) {
    adj.at(0, 0) = MPoly(1);
    return adj;
  }
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j) {
      MPoly c = determinant(minor_of(m, i, j));
      adj.at(j, i) = (i + j) % 2 ? -c : c;
    }
  return adj;
}

PolyMatrix substitute(const PolyMatrix& m, const Substitution& s) {
  PolyMatrix out(m.n);
  for (std::size_t k = 0; k < m.entries.size(); ++k) out.entries[k] = substitute(m.entries[k], s);
  return out;
}

CendMatrix CendMatrix::zero(std::vector<Elem> degrees) {
  CendMatrix m;
  m.entries.resize(degrees.size() * degrees.size());
  m.degrees = std::move(degrees);
  return m;
}

CendMatrix CendMatrix::unit(std::vector<Elem> degrees, std::size_t i, std::size_t j, const MPoly& f) {
  CendMatrix m = zero(std::move(degrees));
  m.at(i, j) = f;
  return m;
}

bool CendMatrix::is_zero() const {
  for (const auto& e : entries)
    if (!e.is_zero()) return false;
  return true;
}

std::string CendMatrix::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < size(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < size(); ++j) s += (j ? ", " : "") + at(i, j).str();
    s += "]";
  }
  return s + "]";
}

std::optional<Elem> cend_degree(const GradingContext& ctx, const CendMatrix& a) {
  std::optional<Elem> deg;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      Elem g = ctx.mul(a.degrees[i], ctx.inv(a.degrees[j]));
      if (deg && *deg != g) throw Error(ErrorKind::NotHomogeneous, "matrix mixes degrees: " + a.str());
      deg = g;
    }
  return deg;
}

CendFormula CendFormula::mutated(std::size_t which) {
  CendFormula f;
  f.sign.at(which) = -1;
  return f;
}

namespace {

struct EntrySubstitutions {
  Substitution left, right;
};

// The two substitutions of (fE_ij)_ℓ(gE_jk).
EntrySubstitutions entry_substitutions(const GradingContext& ctx, Elem ai, Elem aj, Elem ak, const MPoly& ell,
                                       const CendFormula& formula) {
  const auto& s = formula.sign;
  const Elem alpha = ctx.mul(ai, ctx.inv(aj));
  const Elem ab = ctx.mul(alpha, ctx.mul(aj, ctx.inv(ak)));
  const Elem ainv = ctx.inv(alpha);
  EntrySubstitutions out;
  out.left.bind(Var::T, Rational(-s[0]) * ctx.sig(alpha) * (ell + Rational(s[1] * ctx.phi(alpha, ainv))));
  out.right.bind(Var::T, kT + Rational(s[2]) * ctx.sig(ab) * ell + Rational(s[3] * ctx.phi(ainv, ab)))
      .bind(Var::X, kX + Rational(s[4]) * ctx.sig(ai) * ell + Rational(s[5] * ctx.phi(ainv, ai)));
  return out;
}

std::vector<MPoly> substitute_all(const std::vector<MPoly>& ps, const Substitution& s) {
  std::vector<MPoly> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(substitute(p, s));
  return out;
}

}  // namespace

MPoly cend_entry_product(const GradingContext& ctx, Elem ai, Elem aj, Elem ak, const MPoly& f, const MPoly& g,
                         const MPoly& ell, const CendFormula& formula) {
  if (f.is_zero() || g.is_zero()) return MPoly();
  auto subs = entry_substitutions(ctx, ai, aj, ak, ell, formula);
  return substitute(f, subs.left) * substitute(g, subs.right);
}

CendMatrix cend_product(const GradingContext& ctx, const CendMatrix& a, const CendMatrix& b, const MPoly& ell,
                        const CendFormula& formula) {
  if (a.degrees != b.degrees) throw Error(ErrorKind::InvalidArgument, "matrices have different degree labels");
  cend_degree(ctx, a);
  cend_degree(ctx, b);
  const std::size_t n = a.size();
  CendMatrix out = CendMatrix::zero(a.degrees);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k)
        out.at(i, k) += cend_entry_product(ctx, a.degrees[i], a.degrees[j], a.degrees[k], a.at(i, j), b.at(j, k), ell,
                                           formula);
    }
  return out;
}

CendAssociativityReport check_cend_associativity(const GradingContext& ctx, const std::vector<Elem>& deg,
                                                 unsigned degree, const CendFormula& formula) {
  CendAssociativityReport r;
  const auto mons = monomials_up_to(degree);
  const std::size_t n = deg.size(), m = mons.size();
  // Only (fE_ij, gE_jl, hE_lq) give nonzero products on either side. Both sides are
  // products of two substituted factors; every factor that does not depend on the
  // innermost loop is computed once.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Elem alpha = ctx.mul(deg[i], ctx.inv(deg[j]));
      for (std::size_t l = 0; l < n; ++l) {
        const Elem beta = ctx.mul(deg[j], ctx.inv(deg[l]));
        MPoly nu = ctx.sig(alpha) * (kMu - kLambda - ctx.phi(ctx.inv(beta), ctx.inv(alpha)));
        auto inner_left = entry_substitutions(ctx, deg[i], deg[j], deg[l], kLambda, formula);
        auto f_left = substitute_all(mons, inner_left.left);
        auto g_right = substitute_all(mons, inner_left.right);
        for (std::size_t q = 0; q < n; ++q) {
          auto outer_left = entry_substitutions(ctx, deg[i], deg[l], deg[q], kMu, formula);
          auto inner_right = entry_substitutions(ctx, deg[j], deg[l], deg[q], nu, formula);
          auto outer_right = entry_substitutions(ctx, deg[i], deg[j], deg[q], kLambda, formula);
          // lhs = L[a*m+b] * H[c], rhs = F[a] * R[b*m+c]
          std::vector<MPoly> lhs_left(m * m), rhs_right(m * m);
          for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b)
              lhs_left[a * m + b] = substitute(f_left[a] * g_right[b], outer_left.left);
          auto h_outer = substitute_all(mons, outer_left.right);
          auto g_inner = substitute_all(mons, inner_right.left);
          auto h_inner = substitute_all(mons, inner_right.right);
          for (std::size_t b = 0; b < m; ++b)
            for (std::size_t c = 0; c < m; ++c)
              rhs_right[b * m + c] = substitute(g_inner[b] * h_inner[c], outer_right.right);
          auto f_outer = substitute_all(mons, outer_right.left);
          for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b)
              for (std::size_t c = 0; c < m; ++c) {
                ++r.identities_checked;
                MPoly lhs = lhs_left[a * m + b] * h_outer[c];
                MPoly rhs = f_outer[a] * rhs_right[b * m + c];
                if (lhs != rhs) {
                  r.passed = false;
                  r.failure = "(" + mons[a].str() + ")E_" + std::to_string(i + 1) + std::to_string(j + 1) + ", (" +
                              mons[b].str() + ")E_" + std::to_string(j + 1) + std::to_string(l + 1) + ", (" +
                              mons[c].str() + ")E_" + std::to_string(l + 1) + std::to_string(q + 1) + ": " +
                              lhs.str() + " vs " + rhs.str();
                  return r;
                }
              }
        }
      }
    }
  return r;
}

GradedConformalAlgebra cend_truncated(const GradingContext& ctx, const std::vector<Elem>& deg, unsigned degree) {
  const std::size_t n = deg.size(), d1 = degree + 1, rank = n * n * d1;
  auto index = [&](std::size_t i, std::size_t j, unsigned a) { return (i * n + j) * d1 + a; };
  std::vector<Elem> degrees(rank);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (unsigned a = 0; a <= degree; ++a) degrees[index(i, j, a)] = ctx.mul(deg[i], ctx.inv(deg[j]));
  std::vector<std::vector<MPoly>> s(rank * rank, std::vector<MPoly>(rank));
  std::vector<std::string> defects;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (unsigned a = 0; a <= degree; ++a)
          for (unsigned b = 0; b <= degree; ++b) {
            MPoly p = cend_entry_product(ctx, deg[i], deg[j], deg[k], kX.pow(a), kX.pow(b), kLambda);
            auto& row = s[index(i, j, a) * rank + index(j, k, b)];
            for (unsigned c = 0; c <= p.degree(Var::X); ++c) {
              MPoly coeff = p.coefficient(Var::X, c);
              if (coeff.is_zero()) continue;
              if (c > degree) {
                defects.push_back("x^" + std::to_string(a) + "E_" + std::to_string(i + 1) + std::to_string(j + 1) +
                                  " times x^" + std::to_string(b) + "E_" + std::to_string(j + 1) +
                                  std::to_string(k + 1) + " has x-degree " + std::to_string(c));
                continue;
              }
              row[index(i, k, c)] = coeff;
            }
          }
  GradedConformalAlgebra out(ctx, std::move(degrees), std::move(s));
  out.closure_defects = std::move(defects);
  return out;
}

CendMatrix change_basis(const GradingContext& ctx, const CendMatrix& a, const std::map<Elem, PolyMatrix>& q_blocks) {
  if (!ctx.phi_is_zero())
    throw Error(ErrorKind::NonzeroCocycle, "change of basis is only an isomorphism for phi = 0; trivialize first");
  const std::size_t n = a.size();
  PolyMatrix q = PolyMatrix::identity(n), qg = PolyMatrix::identity(n);
  for (const auto& [gamma, block] : q_blocks) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (a.degrees[i] == gamma) idx.push_back(i);
    if (block.n != idx.size())
      throw Error(ErrorKind::InvalidArgument, "block for degree " + ctx.group.label(gamma) + " has wrong size");
    for (const auto& e : block.entries)
      if (e.depends_on(Var::X) || e.depends_on(Var::Lambda) || e.depends_on(Var::Mu))
        throw Error(ErrorKind::InvalidArgument, "basis change entries must lie in Q[T]");
    MPoly det = determinant(block);
    if (!det.is_constant() || det.is_zero())
      throw Error(ErrorKind::NotInvertibleOverPolyRing,
                  "block for degree " + ctx.group.label(gamma) + " has determinant " + det.str());
    Substitution shift;
    shift.bind(Var::T, kX - ctx.sig(gamma) * kT);
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c) {
        q.at(idx[r], idx[c]) = block.at(r, c);
        qg.at(idx[r], idx[c]) = substitute(block.at(r, c), shift);
      }
  }
  MPoly det = determinant(q);
  PolyMatrix qinv = adjugate(q);
  Rational inv_det = Rational(1) / det.constant_term();
  for (auto& e : qinv.entries) e *= inv_det;
  Substitution to_x;
  to_x.bind(Var::T, kX);
  qinv = substitute(qinv, to_x);
  PolyMatrix am(n);
  am.entries = a.entries;
  PolyMatrix r = qinv * am * qg;
  CendMatrix out = a;
  out.entries = r.entries;
  return out;
}

CendMatrix pi_gamma(const GradingContext& ctx, const CendMatrix& a, Elem gamma) {
  auto d = cend_degree(ctx, a);
  if (d && *d != ctx.e()) throw Error(ErrorKind::NotDegreeE, "projection needs a degree-e element");
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.degrees[i] == gamma) idx.push_back(i);
  CendMatrix out = CendMatrix::zero(std::vector<Elem>(idx.size(), 0));
  Substitution s;
  s.bind(Var::X, ctx.sig(gamma) * kX);
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) out.at(r, c) = substitute(a.at(idx[r], idx[c]), s);
  return out;
}

}  // namespace gca
