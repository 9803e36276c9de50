#include "gca/ideal.hpp"

#include <algorithm>

#include "gca/error.hpp"

namespace gca {

std::string_view to_string(Side s) {
  switch (s) {
    case Side::Left: return "left";
    case Side::Right: return "right";
    case Side::Two: return "two";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Simple: return "simple";
    case Verdict::NotSimple: return "not-simple";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

PolyVector to_poly_vector(const ConformalElement& a) {
  PolyVector v;
  v.reserve(a.size());
  for (const auto& p : a) v.push_back(UPoly::from_mpoly(p, Var::T));
  return v;
}

ConformalElement to_element(const PolyVector& v) {
  ConformalElement a;
  a.reserve(v.size());
  for (const auto& p : v) a.push_back(p.to_mpoly(Var::T));
  return a;
}

namespace {

/// Nonzero homogeneous components of a module element.
std::vector<ConformalElement> homogeneous_parts(const GradedConformalAlgebra& c, const PolyVector& v) {
  std::vector<ConformalElement> out;
  for (Elem g = 0; g < c.ctx().group.order(); ++g) {
    ConformalElement part = c.zero();
    bool any = false;
    for (std::size_t i = 0; i < c.rank(); ++i)
      if (c.degree(i) == g && !v[i].is_zero()) {
        part[i] = v[i].to_mpoly(Var::T);
        any = true;
      }
    if (any) out.push_back(std::move(part));
  }
  return out;
}

void add_lambda_coefficients(const ConformalElement& prod, std::vector<PolyVector>& out) {
  unsigned top = 0;
  for (const auto& p : prod) top = std::max(top, p.degree(Var::Lambda));
  for (unsigned k = 0; k <= top; ++k) {
    PolyVector v;
    bool any = false;
    for (const auto& p : prod) {
      v.push_back(UPoly::from_mpoly(p.coefficient(Var::Lambda, k), Var::T));
      any = any || !v.back().is_zero();
    }
    if (any) out.push_back(std::move(v));
  }
}

}  // namespace

ClosureResult ideal_closure(const GradedConformalAlgebra& c, const std::vector<ConformalElement>& seeds, Side side,
                            std::size_t max_rounds) {
  std::vector<PolyVector> rows;
  for (const auto& s : seeds) {
    element_degree(c, s);
    rows.push_back(to_poly_vector(s));
  }
  ClosureResult r;
  r.module = hermite_nf(rows, c.rank());
  std::vector<ConformalElement> basis;
  for (std::size_t i = 0; i < c.rank(); ++i) basis.push_back(c.basis_element(i));

  while (true) {
    if (r.rounds == max_rounds) {
      r.overflow = true;
      return r;
    }
    ++r.rounds;
    std::vector<PolyVector> fresh;
    for (const auto& g : r.module.generators())
      for (const auto& h : homogeneous_parts(c, g))
        for (const auto& e : basis) {
          if (side != Side::Right) add_lambda_coefficients(lambda_product(c, e, h), fresh);
          if (side != Side::Left) add_lambda_coefficients(lambda_product(c, h, e), fresh);
        }
    PolySubmodule next = hermite_nf(r.module, fresh);
    std::pair<std::size_t, int> measure{next.rank(), next.pivot_degree_sum()};
    r.progress.push_back(measure);
    if (next == r.module) return r;
    // A strictly larger module has larger rank or, at equal rank, smaller pivot degree.
    bool grew = next.rank() > r.module.rank() ||
                (next.rank() == r.module.rank() && next.pivot_degree_sum() < r.module.pivot_degree_sum());
    if (!grew)
      throw Error(ErrorKind::InternalInconsistency, "ideal closure round " + std::to_string(r.rounds) +
                                                        " changed the module without growing it");
    r.module = std::move(next);
  }
}

namespace {

ConformalElement from_fd(const GradedConformalAlgebra& c, const QVector& v) {
  ConformalElement a = c.zero();
  for (std::size_t i = 0; i < v.size(); ++i) a[i] = MPoly(v[i]);
  return a;
}

/// Homogeneous components of v in the algebra's grading.
std::vector<QVector> fd_parts(const GradedAlgebraFD& a, const QVector& v) {
  std::vector<QVector> out;
  std::vector<Elem> seen;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (gca::is_zero(v[i]) || std::find(seen.begin(), seen.end(), a.degree(i)) != seen.end()) continue;
    seen.push_back(a.degree(i));
    QVector part(a.dim(), Rational(0));
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (a.degree(j) == a.degree(i)) part[j] = v[j];
    out.push_back(std::move(part));
  }
  return out;
}

/// Seeds generating a proper ideal of Cur A when A is not graded simple.
std::vector<QVector> current_certificate_seeds(const GradedAlgebraFD& a, Elem e) {
  std::vector<QVector> seeds;
  for (const auto& r : radical_fd(a))
    for (auto& p : fd_parts(a, r)) seeds.push_back(std::move(p));
  if (!seeds.empty()) return seeds;
  auto blocks = decompose_semisimple_graded(a, e);
  if (blocks.size() > 1) return fd_parts(a, blocks.front().idempotent);
  return {};
}

}  // namespace

SimplicityReport conformal_simplicity_suite(const GradedConformalAlgebra& c, const std::vector<MPoly>& multiples) {
  SimplicityReport rep;
  rep.notes.push_back(
      "basis-seed closures are a necessary-condition screen; only a Cur presentation gives an authoritative verdict");
  for (const auto& s : c.structure())
    for (const auto& p : s) rep.nonzero_product = rep.nonzero_product || !p.is_zero();
  if (!rep.nonzero_product) {
    rep.verdict = Verdict::NotSimple;
    rep.notes.push_back("all λ-products vanish");
    return rep;
  }
  if (c.rank() == 0) {
    rep.verdict = Verdict::NotSimple;
    return rep;
  }

  for (std::size_t i = 0; i < c.rank() && !rep.ideal; ++i)
    for (const auto& m : multiples) {
      auto seed = c.basis_element(i, m);
      auto closure = ideal_closure(c, {seed}, Side::Two);
      ++rep.seeds_checked;
      if (closure.overflow) {
        rep.notes.push_back("closure of e" + std::to_string(i + 1) + " did not stabilise");
        continue;
      }
      if (!closure.module.is_full()) {
        rep.ideal = closure.module;
        rep.ideal_seed = seed;
        break;
      }
    }

  if (c.current_of) {
    const auto& a = *c.current_of;
    try {
      rep.current_verdict = is_graded_simple(a, c.ctx().e());
      if (!*rep.current_verdict && !rep.ideal) {
        for (const auto& s : current_certificate_seeds(a, c.ctx().e())) {
          auto seed = from_fd(c, s);
          auto closure = ideal_closure(c, {seed}, Side::Two);
          if (!closure.overflow && !closure.module.is_full()) {
            rep.ideal = closure.module;
            rep.ideal_seed = seed;
            break;
          }
        }
      }
    } catch (const Error& err) {
      rep.notes.push_back(std::string("finite-dimensional check failed: ") + err.what());
    }
  }

  if (rep.ideal) {
    rep.verdict = Verdict::NotSimple;
    if (rep.current_verdict && *rep.current_verdict)
      rep.notes.push_back("closure found a proper ideal although the underlying algebra is graded simple");
  } else if (rep.current_verdict) {
    rep.verdict = *rep.current_verdict ? Verdict::Simple : Verdict::NotSimple;
  } else {
    rep.verdict = Verdict::Inconclusive;
  }
  return rep;
}

}  // namespace gca
