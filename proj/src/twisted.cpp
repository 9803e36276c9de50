#include "gca/twisted.hpp"

#include <algorithm>
#include <random>

#include "gca/error.hpp"

namespace gca {

std::string_view to_string(Irreducibility r) {
  switch (r) {
    case Irreducibility::Irreducible: return "irreducible";
    case Irreducibility::Reducible: return "reducible";
    case Irreducibility::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

using Indices = std::vector<std::size_t>;

QMatrix block(const QMatrix& m, const Indices& rows, const Indices& cols) {
  QMatrix b(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) b(i, j) = m(rows[i], cols[j]);
  return b;
}

void place(QMatrix& m, const Indices& rows, const Indices& cols, const QMatrix& b, const Rational& s) {
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m(rows[i], cols[j]) += s * b(i, j);
}

QMatrix unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
  QMatrix u(rows, cols);
  u(i, j) = 1;
  return u;
}

std::vector<QVector> flat_all(const std::vector<QMatrix>& ms) {
  std::vector<QVector> out;
  for (const auto& m : ms) out.push_back(m.flat());
  return out;
}

QVector apply(const QMatrix& m, const QVector& v) { return m * v; }

QVector basis_vec(std::size_t n, std::size_t i) {
  QVector v(n, Rational(0));
  v[i] = 1;
  return v;
}

/// Smallest subspace containing the seeds and stable under every matrix.
std::vector<QVector> invariant_closure(const std::vector<QMatrix>& ops, std::vector<QVector> seeds, std::size_t n) {
  auto span = span_basis(seeds, n);
  while (true) {
    auto next = span;
    for (const auto& v : span)
      for (const auto& a : ops) next.push_back(apply(a, v));
    next = span_basis(next, n);
    if (next.size() == span.size()) return span;
    span = std::move(next);
  }
}

std::vector<QVector> column_space(const QMatrix& m) {
  QMatrix t = m.transpose();
  std::vector<QVector> cols;
  for (std::size_t c = 0; c < t.rows(); ++c) cols.push_back(t.row(c));
  return span_basis(cols, m.rows());
}

/// Minimal polynomial of a square matrix, low to high.
QVector min_poly(const QMatrix& x) {
  QMatrix power = QMatrix::identity(x.rows());
  auto rel = first_linear_relation(
      [&] {
        QVector v = power.flat();
        power = power * x;
        return v;
      },
      x.rows() * x.rows() + 1);
  return *rel;
}

bool is_homogeneous(const QMatrix& m, Elem alpha, const FiniteGroup& g, const std::vector<Elem>& vdeg) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!gca::is_zero(m(r, c)) && vdeg[r] != g.mul(alpha, vdeg[c])) return false;
  return true;
}

void check_degrees(const FiniteGroup& g, const std::vector<Elem>& vdeg) {
  for (Elem d : vdeg)
    if (d < 0 || d >= g.order()) throw Error(ErrorKind::InvalidArgument, "V degree out of range");
}

}  // namespace

std::vector<std::size_t> indices_of(const std::vector<Elem>& v_degrees, Elem gamma) {
  Indices out;
  for (std::size_t i = 0; i < v_degrees.size(); ++i)
    if (v_degrees[i] == gamma) out.push_back(i);
  return out;
}

std::size_t TwistedMatrixAlgebra::n() const {
  std::size_t s = 0;
  for (auto k : sizes) s += k;
  return s;
}

std::size_t TwistedMatrixAlgebra::flat(int k, std::size_t j) const {
  std::size_t off = 0;
  for (int q = 0; q < k; ++q) off += sizes[static_cast<std::size_t>(q)];
  return off + j;
}

std::pair<int, std::size_t> TwistedMatrixAlgebra::pair_of(std::size_t r) const {
  int k = 0;
  while (r >= sizes[static_cast<std::size_t>(k)]) r -= sizes[static_cast<std::size_t>(k++)];
  return {k, r};
}

std::size_t TwistedMatrixAlgebra::index(std::size_t r, std::size_t c, Elem gamma) const {
  auto pos = static_cast<std::size_t>(std::find(gamma1.begin(), gamma1.end(), gamma) - gamma1.begin());
  return (r * n() + c) * gamma1.size() + pos;
}

TwistedMatrixAlgebra build_twisted_matrix_algebra(const FiniteGroup& g, const FineSubgroupData& fine,
                                                  const std::vector<std::size_t>& sizes, const PairTable& theta) {
  if (sizes.size() != static_cast<std::size_t>(fine.p()))
    throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(fine.p()) + " block sizes, got " +
                                                std::to_string(sizes.size()));
  const Elem e = g.identity();
  if (theta(e, e) != 1) throw Error(ErrorKind::NotACocycle, "theta(e,e) must be 1");
  for (Elem a : fine.gamma1)
    for (Elem b : fine.gamma1)
      if (gca::is_zero(theta(a, b)))
        throw Error(ErrorKind::NotACocycle, "theta vanishes at (" + g.label(a) + "," + g.label(b) + ")");
  if (!check_group_cocycle(g, fine.gamma1, theta))
    throw Error(ErrorKind::NotACocycle, "theta is not a 2-cocycle on the subgroup");

  TwistedMatrixAlgebra t;
  t.fine = fine;
  t.sizes = sizes;
  t.theta = theta;
  t.gamma1.assign(fine.gamma1.begin(), fine.gamma1.end());
  const std::size_t n = t.n(), h = t.gamma1.size(), d = n * n * h;
  std::vector<Elem> degrees(d);
  std::vector<Rational> mult(d * d * d, Rational(0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      for (Elem gm : t.gamma1) {
        Elem rep_m = fine.reps[static_cast<std::size_t>(t.pair_of(r).first)];
        Elem rep_k = fine.reps[static_cast<std::size_t>(t.pair_of(c).first)];
        degrees[t.index(r, c, gm)] = g.mul(g.mul(rep_m, gm), g.inv(rep_k));
      }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t s = 0; s < n; ++s)
        for (Elem a : t.gamma1)
          for (Elem b : t.gamma1)
            mult[(t.index(r, c, a) * d + t.index(c, s, b)) * d + t.index(r, s, g.mul(a, b))] = theta(a, b);
  t.algebra = GradedAlgebraFD(std::move(degrees), std::move(mult));
  if (auto v = t.algebra.associativity_violation())
    throw Error(ErrorKind::InternalInconsistency, "twisted matrix algebra is not associative");
  return t;
}

std::vector<QMatrix> structure_span(const FiniteGroup& g, const FineStructure& s, const std::vector<Elem>& vdeg,
                                    Elem alpha) {
  const auto& fine = s.fine();
  const std::size_t dim = vdeg.size();
  std::vector<QMatrix> out;
  for (int k = 0; k < fine.p(); ++k) {
    Elem gk = fine.reps[static_cast<std::size_t>(k)];
    Elem agk = g.mul(alpha, gk);
    if (!fine.in_support(agk)) continue;
    const auto src = indices_of(vdeg, gk), dst = indices_of(vdeg, agk);
    QMatrix inv_agk = inverse(s.iota[static_cast<std::size_t>(agk)]);
    for (std::size_t i = 0; i < dst.size(); ++i)
      for (std::size_t j = 0; j < src.size(); ++j) {
        QMatrix ak = unit(dst.size(), src.size(), i, j);
        QMatrix m(dim, dim);
        for (Elem gamma : fine.coset(k)) {
          const Rational& c = s.chi.chi(alpha, gamma);
          if (gca::is_zero(c)) continue;
          Elem ag = g.mul(alpha, gamma);
          QMatrix b = s.iota[static_cast<std::size_t>(ag)] * inv_agk * ak *
                      inverse(s.iota[static_cast<std::size_t>(gamma)]);
          place(m, indices_of(vdeg, ag), indices_of(vdeg, gamma), b, c);
        }
        out.push_back(std::move(m));
      }
  }
  return out;
}

bool reproduces(const FiniteGroup& g, const FineStructure& s, const std::vector<Elem>& vdeg,
                const std::vector<QMatrix>& basis, const std::vector<Elem>& degrees) {
  const std::size_t n2 = vdeg.size() * vdeg.size();
  for (Elem alpha = 0; alpha < g.order(); ++alpha) {
    std::vector<QMatrix> given;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (degrees[i] == alpha) given.push_back(basis[i]);
    if (span_basis(flat_all(given), n2) != span_basis(flat_all(structure_span(g, s, vdeg, alpha)), n2)) return false;
  }
  return true;
}

std::vector<QMatrix> phi_isomorphism(const FiniteGroup& g, const TwistedMatrixAlgebra& t, const FineStructure& target,
                                     const std::vector<Elem>& vdeg, PhiPrefactor prefactor) {
  const auto& fine = target.fine();
  auto fail = [](const std::string& why) { throw Error(ErrorKind::VerificationFailed, why); };
  if (fine.reps != t.fine.reps || fine.gamma1 != t.fine.gamma1) fail("coset data of target and algebra differ");
  check_degrees(g, vdeg);
  for (Elem gm = 0; gm < g.order(); ++gm) {
    std::size_t want = fine.in_support(gm) ? t.sizes[static_cast<std::size_t>(fine.coset_of[static_cast<std::size_t>(gm)])] : 0;
    if (indices_of(vdeg, gm).size() != want) fail("dim V_" + g.label(gm) + " does not match the block sizes");
    if (fine.in_support(gm) && (target.iota[static_cast<std::size_t>(gm)].rows() != want ||
                                target.iota[static_cast<std::size_t>(gm)].cols() != want))
      fail("iota_" + g.label(gm) + " has the wrong shape");
  }

  const std::size_t dim = vdeg.size(), n = t.n();
  std::vector<QMatrix> images(t.algebra.dim());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      for (Elem gm : t.gamma1) {
        auto [m, i] = t.pair_of(r);
        auto [k, j] = t.pair_of(c);
        Elem rep_m = fine.reps[static_cast<std::size_t>(m)], rep_k = fine.reps[static_cast<std::size_t>(k)];
        Elem deg = g.mul(g.mul(rep_m, gm), g.inv(rep_k));
        Rational pre = prefactor == PhiPrefactor::Correct    ? target.chi.chi(rep_m, gm)
                       : prefactor == PhiPrefactor::Omitted ? Rational(1)
                                                             : target.chi.chi(gm, rep_m);
        QMatrix eij = unit(t.sizes[static_cast<std::size_t>(m)], t.sizes[static_cast<std::size_t>(k)], i, j);
        QMatrix img(dim, dim);
        for (Elem beta : fine.coset(k)) {
          Elem db = g.mul(deg, beta);
          QMatrix b = target.iota[static_cast<std::size_t>(db)] * eij * inverse(target.iota[static_cast<std::size_t>(beta)]);
          place(img, indices_of(vdeg, db), indices_of(vdeg, beta), b, pre * target.chi.chi(deg, beta));
        }
        images[t.index(r, c, gm)] = std::move(img);
      }

  for (std::size_t a = 0; a < images.size(); ++a)
    if (!is_homogeneous(images[a], t.algebra.degree(a), g, vdeg))
      fail("image of basis element " + std::to_string(a + 1) + " is not homogeneous of its degree");
  if (rank(QMatrix::from_rows(flat_all(images), dim * dim)) != images.size()) fail("the map is not injective");
  for (std::size_t a = 0; a < images.size(); ++a)
    for (std::size_t b = 0; b < images.size(); ++b) {
      QVector prod = t.algebra.product(t.algebra.basis_vector(a), t.algebra.basis_vector(b));
      QMatrix want(dim, dim);
      for (std::size_t k = 0; k < prod.size(); ++k)
        if (!gca::is_zero(prod[k])) want = want + prod[k] * images[k];
      if (images[a] * images[b] != want)
        fail("Phi(ab) != Phi(a)Phi(b) for basis elements " + std::to_string(a + 1) + ", " + std::to_string(b + 1));
    }
  return images;
}

namespace {

std::optional<std::vector<QVector>> search_invariant_subspace(const FiniteGroup& g, const std::vector<QMatrix>& basis,
                                                               const std::vector<Elem>& vdeg, std::uint64_t seed,
                                                               std::size_t trials) {
  const std::size_t n = vdeg.size();
  auto proper = [&](const std::vector<QVector>& w) { return !w.empty() && w.size() < n; };
  for (std::size_t i = 0; i < n; ++i) {
    auto w = invariant_closure(basis, {basis_vec(n, i)}, n);
    if (proper(w)) return w;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (std::size_t t = 0; t < trials; ++t) {
    Elem d = vdeg[rng() % n];
    QVector v(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
      if (vdeg[i] == d) v[i] = coeff(rng);
    if (is_zero_vector(v)) continue;
    auto w = invariant_closure(basis, {v}, n);
    if (proper(w)) return w;
  }
  (void)g;
  return std::nullopt;
}

}  // namespace

IrreducibilityResult graded_irreducible(const FiniteGroup& g, const std::vector<QMatrix>& basis,
                                        const std::vector<Elem>& degrees, const std::vector<Elem>& vdeg,
                                        std::uint64_t seed, std::size_t random_trials) {
  check_degrees(g, vdeg);
  const std::size_t n = vdeg.size();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "V is zero");
  if (degrees.size() != basis.size()) throw Error(ErrorKind::InvalidArgument, "one degree per basis matrix required");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].rows() != n || basis[i].cols() != n)
      throw Error(ErrorKind::InvalidArgument, "basis matrix " + std::to_string(i + 1) + " is not " + std::to_string(n) +
                                                  "x" + std::to_string(n));
    if (!is_homogeneous(basis[i], degrees[i], g, vdeg))
      throw Error(ErrorKind::InvalidArgument, "basis matrix " + std::to_string(i + 1) + " is not homogeneous of degree " +
                                                  g.label(degrees[i]));
  }
  GradedAlgebraFD a = GradedAlgebraFD::from_matrices(basis, degrees);
  IrreducibilityResult res;
  auto reducible = [&](std::vector<QVector> w, std::string note) {
    res.verdict = Irreducibility::Reducible;
    res.certificate = std::move(w);
    res.notes.push_back(std::move(note));
    return res;
  };

  auto rad = radical_fd(a);
  if (!rad.empty()) {
    res.notes.push_back("radical of A is nonzero; outside the exactly decided regime");
    // rad(A)·V is graded, invariant, nonzero (faithful action) and proper (nilpotent).
    std::vector<QVector> image;
    for (const auto& r : rad)
      for (Elem d = 0; d < g.order(); ++d) {
        QMatrix m(n, n);
        bool any = false;
        for (std::size_t i = 0; i < r.size(); ++i)
          if (a.degree(i) == d && !gca::is_zero(r[i])) {
            m = m + r[i] * basis[i];
            any = true;
          }
        if (!any) continue;
        for (std::size_t i = 0; i < n; ++i) image.push_back(m * basis_vec(n, i));
      }
    image = span_basis(image, n);
    if (!image.empty() && image.size() < n) return reducible(std::move(image), "certificate is rad(A)V");
    if (auto w = search_invariant_subspace(g, basis, vdeg, seed, random_trials))
      return reducible(std::move(*w), "certificate found by submodule search");
    return res;
  }

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<QVector> av;
    for (const auto& m : basis) av.push_back(m * basis_vec(n, i));
    av = span_basis(av, n);
    if (av.size() == n) continue;
    if (!av.empty()) return reducible(std::move(av), "A v_" + std::to_string(i + 1) + " is a proper subspace");
    if (n > 1) return reducible({basis_vec(n, i)}, "A annihilates v_" + std::to_string(i + 1));
    res.verdict = Irreducibility::Reducible;
    res.notes.push_back("A acts by zero");
    return res;
  }

  // Degree-e commutant: block-diagonal ξ with ξa = aξ for every basis matrix.
  std::vector<std::pair<std::size_t, std::size_t>> vars;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (vdeg[r] == vdeg[c]) vars.emplace_back(r, c);
  std::vector<QVector> eqs;
  for (const auto& m : basis)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        QVector row(vars.size(), Rational(0));
        for (std::size_t v = 0; v < vars.size(); ++v) {
          auto [p, q] = vars[v];
          if (p == r) row[v] += m(q, c);
          if (q == c) row[v] -= m(r, p);
        }
        if (!is_zero_vector(row)) eqs.push_back(std::move(row));
      }
  std::vector<QMatrix> comm;
  for (const auto& sol : eqs.empty() ? std::vector<QVector>{} : nullspace(QMatrix::from_rows(eqs, vars.size()))) {
    QMatrix x(n, n);
    for (std::size_t v = 0; v < vars.size(); ++v) x(vars[v].first, vars[v].second) = sol[v];
    comm.push_back(std::move(x));
  }
  if (eqs.empty())
    for (std::size_t v = 0; v < vars.size(); ++v) comm.push_back(unit(n, n, vars[v].first, vars[v].second));
  if (comm.size() == 1) {
    res.verdict = Irreducibility::Irreducible;
    res.notes.push_back("degree-e commutant is Q");
    return res;
  }

  // A rational eigenvalue of a non-scalar commuting ξ gives a proper invariant image.
  std::vector<QMatrix> probes = comm;
  for (std::size_t i = 0; i < comm.size(); ++i)
    for (std::size_t j = i + 1; j < comm.size(); ++j) probes.push_back(comm[i] + comm[j]);
  bool commutative = true;
  for (const auto& x : comm)
    for (const auto& y : comm) commutative = commutative && x * y == y * x;
  bool field_generator = false;
  for (const auto& x : probes) {
    QVector mp = min_poly(x);
    auto roots = rational_roots(mp);
    if (mp.size() > 2 && !roots.empty()) {
      QMatrix xi = x - roots.front() * QMatrix::identity(n);
      return reducible(column_space(xi), "commutant element has a rational eigenvalue");
    }
    if (commutative && mp.size() == comm.size() + 1 && comm.size() <= 3 && roots.empty()) field_generator = true;
  }
  if (field_generator) {
    res.verdict = Irreducibility::Irreducible;
    res.notes.push_back("degree-e commutant is a field");
    return res;
  }
  res.notes.push_back("degree-e commutant of dimension " + std::to_string(comm.size()) +
                      " has no rational zero divisor among probes; division property undecided");
  if (auto w = search_invariant_subspace(g, basis, vdeg, seed, random_trials))
    return reducible(std::move(*w), "certificate found by submodule search");
  return res;
}

FineStructure recover_fine_structure(const FiniteGroup& g, const std::vector<QMatrix>& basis,
                                     const std::vector<Elem>& degrees, const std::vector<Elem>& vdeg) {
  auto irr = graded_irreducible(g, basis, degrees, vdeg);
  if (irr.verdict != Irreducibility::Irreducible) {
    std::string why = irr.verdict == Irreducibility::Reducible ? "V has a proper graded invariant subspace"
                                                               : "irreducibility could not be established";
    throw Error(ErrorKind::NotIrreducible, why);
  }
  const Elem e = g.identity();
  const std::size_t dim = vdeg.size();
  if (indices_of(vdeg, e).empty()) throw Error(ErrorKind::InvalidArgument, "V_e is zero; shift the grading of V");
  auto fail = [](const std::string& why) { throw Error(ErrorKind::VerificationFailed, why); };

  // (1) Wedderburn blocks of A_e.
  std::vector<QMatrix> ae;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (degrees[i] == e) ae.push_back(basis[i]);
  auto ae_alg = GradedAlgebraFD::from_matrices(ae, std::vector<Elem>(ae.size(), e));
  auto blocks = decompose_semisimple_graded(ae_alg, e);

  // (2) Supports Γ_k.
  ElementSet gamma0;
  for (Elem gm = 0; gm < g.order(); ++gm)
    if (indices_of(vdeg, gm).empty()) gamma0.insert(gm);
  std::vector<ElementSet> supports;
  for (const auto& b : blocks) {
    QMatrix ek(dim, dim);
    for (std::size_t i = 0; i < ae.size(); ++i) ek = ek + b.idempotent[i] * ae[i];
    ElementSet s;
    for (Elem gm = 0; gm < g.order(); ++gm) {
      auto idx = indices_of(vdeg, gm);
      if (idx.empty() || block(ek, idx, idx).is_zero()) continue;
      if (b.basis.size() != idx.size() * idx.size())
        throw Error(ErrorKind::SplitFieldRequired, "a Wedderburn block of A_e is not a full matrix algebra over Q");
      s.insert(gm);
    }
    supports.push_back(std::move(s));
  }

  // (3) Γ₁ is the support containing e; the supports must be its cosets.
  auto first = std::find_if(supports.begin(), supports.end(), [&](const ElementSet& s) { return s.count(e) > 0; });
  if (first == supports.end()) fail("no block of A_e acts on V_e");
  FineSubgroupData fine;
  try {
    fine = coset_decomposition(g, *first, gamma0);
  } catch (const Error& err) {
    fail(std::string("block supports are not cosets: ") + err.what());
  }
  if (supports.size() != static_cast<std::size_t>(fine.p())) fail("number of blocks differs from number of cosets");
  for (const auto& s : supports) {
    int k = fine.coset_of[static_cast<std::size_t>(*s.begin())];
    auto c = fine.coset(k);
    if (ElementSet(c.begin(), c.end()) != s) fail("a block support is not a coset of the fine subgroup");
  }

  // (4) Intertwiners ι_γ with ι b|V_{γ_k} = b|V_γ ι for all b in A_e.
  FineStructure out;
  out.iota.assign(static_cast<std::size_t>(g.order()), QMatrix());
  for (int k = 0; k < fine.p(); ++k) {
    Elem gk = fine.reps[static_cast<std::size_t>(k)];
    auto src = indices_of(vdeg, gk);
    const std::size_t nk = src.size();
    for (Elem gm : fine.coset(k)) {
      if (gm == gk) {
        out.iota[static_cast<std::size_t>(gm)] = QMatrix::identity(nk);
        continue;
      }
      auto dst = indices_of(vdeg, gm);
      std::vector<QVector> eqs;
      for (const auto& b : ae) {
        QMatrix b1 = block(b, src, src), b2 = block(b, dst, dst);
        for (std::size_t r = 0; r < nk; ++r)
          for (std::size_t c = 0; c < nk; ++c) {
            QVector row(nk * nk, Rational(0));
            for (std::size_t q = 0; q < nk; ++q) row[r * nk + q] += b1(q, c);
            for (std::size_t p = 0; p < nk; ++p) row[p * nk + c] -= b2(r, p);
            eqs.push_back(std::move(row));
          }
      }
      auto sols = nullspace(QMatrix::from_rows(eqs, nk * nk));
      if (sols.size() != 1) fail("intertwiner for " + g.label(gm) + " is not unique up to scalar");
      QMatrix x(nk, nk);
      for (std::size_t v = 0; v < nk * nk; ++v) x(v / nk, v % nk) = sols[0][v];
      if (gca::is_zero(determinant(x))) fail("intertwiner for " + g.label(gm) + " is singular");
      out.iota[static_cast<std::size_t>(gm)] = std::move(x);
    }
  }

  // (5) χ(α,γ) from ι_{αγ_k} ι_{αγ}⁻¹ a_γ ι_γ = χ(α,γ) a_k.
  PairTable chi(g.order(), Rational(0));
  for (Elem alpha = 0; alpha < g.order(); ++alpha)
    for (Elem gm = 0; gm < g.order(); ++gm) {
      Elem ag = g.mul(alpha, gm);
      if (!fine.in_support(gm) || !fine.in_support(ag)) continue;
      Elem gk = fine.reps[static_cast<std::size_t>(fine.coset_of[static_cast<std::size_t>(gm)])];
      Elem agk = g.mul(alpha, gk);
      auto i_gk = indices_of(vdeg, gk), i_agk = indices_of(vdeg, agk), i_g = indices_of(vdeg, gm),
           i_ag = indices_of(vdeg, ag);
      QMatrix left = out.iota[static_cast<std::size_t>(agk)] * inverse(out.iota[static_cast<std::size_t>(ag)]);
      std::optional<Rational> value;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (degrees[i] != alpha) continue;
        QMatrix ak = block(basis[i], i_agk, i_gk);
        QMatrix l = left * block(basis[i], i_ag, i_g) * out.iota[static_cast<std::size_t>(gm)];
        if (!value)
          for (std::size_t p = 0; p < ak.flat().size() && !value; ++p)
            if (!gca::is_zero(ak.flat()[p])) value = l.flat()[p] / ak.flat()[p];
        if (value ? l != *value * ak : !l.is_zero())
          fail("component map at (" + g.label(alpha) + "," + g.label(gm) + ") is not a scalar multiple");
      }
      if (!value) fail("A_" + g.label(alpha) + " has no component from V_" + g.label(gk));
      chi(alpha, gm) = *value;
    }
  out.chi = MultCocycleZ{chi, fine};

  // (6) Cocycle condition and reproduction of A.
  if (auto v = find_mult_cocycle_violation(g, out.chi)) fail("recovered chi violates the cocycle condition: " + *v);
  if (!reproduces(g, out, vdeg, basis, degrees)) fail("recovered data does not reproduce A");
  return out;
}

}  // namespace gca
