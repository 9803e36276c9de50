#include "gca/cohomology.hpp"

#include "gca/error.hpp"
#include "gca/linalg.hpp"

namespace gca {

std::string CocycleViolation::describe(const FiniteGroup& g) const {
  return "(" + g.label(a) + "," + g.label(b) + "," + g.label(c) + "): " + to_string(lhs) + " != " + to_string(rhs);
}

std::optional<CocycleViolation> find_cocycle_violation(const GradingContext& ctx) {
  const auto& g = ctx.group;
  const Elem e = g.identity();
  if (!is_zero(ctx.phi(e, e))) return CocycleViolation{e, e, e, ctx.phi(e, e), Rational(0)};
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      for (Elem c = 0; c < g.order(); ++c) {
        Rational lhs = ctx.phi(g.mul(a, b), c) + ctx.sig(c) * ctx.phi(a, b);
        Rational rhs = ctx.phi(a, g.mul(b, c)) + ctx.phi(b, c);
        if (lhs != rhs) return CocycleViolation{a, b, c, lhs, rhs};
      }
  return std::nullopt;
}

bool check_additive_cocycle(const GradingContext& ctx) { return !find_cocycle_violation(ctx); }

bool cocycle_consequences(const GradingContext& ctx) {
  const auto& g = ctx.group;
  const Elem e = g.identity();
  for (Elem a = 0; a < g.order(); ++a) {
    if (!is_zero(ctx.phi(a, e)) || !is_zero(ctx.phi(e, a)))
      throw Error(ErrorKind::InternalInconsistency, "phi(" + g.label(a) + ", e) or phi(e, " + g.label(a) + ") nonzero");
    if (ctx.phi(g.inv(a), a) != ctx.sig(a) * ctx.phi(a, g.inv(a)))
      throw Error(ErrorKind::InternalInconsistency, "inverse relation fails at " + g.label(a));
  }
  return true;
}

PairTable coboundary_of(const OneCochain& tau, const GradingContext& ctx) {
  const auto& g = ctx.group;
  if (static_cast<int>(tau.size()) != g.order()) throw Error(ErrorKind::InvalidArgument, "cochain has wrong length");
  if (!is_zero(tau[static_cast<std::size_t>(g.identity())]))
    throw Error(ErrorKind::InvalidArgument, "cochain must vanish at the identity");
  PairTable d(g.order());
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      d(a, b) = ctx.sig(b) * tau[static_cast<std::size_t>(a)] + tau[static_cast<std::size_t>(b)] -
                tau[static_cast<std::size_t>(g.mul(a, b))];
  return d;
}

namespace {

/// Rows (a,b) of the linear map τ ↦ δτ, and the target as right-hand side.
std::pair<QMatrix, QVector> coboundary_system(const GradingContext& ctx, const PairTable& target) {
  const auto& g = ctx.group;
  const int n = g.order();
  QMatrix m(static_cast<std::size_t>(n * n), static_cast<std::size_t>(n));
  QVector rhs(static_cast<std::size_t>(n * n));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      auto row = static_cast<std::size_t>(a * n + b);
      m(row, static_cast<std::size_t>(a)) += ctx.sig(b);
      m(row, static_cast<std::size_t>(b)) += 1;
      m(row, static_cast<std::size_t>(g.mul(a, b))) -= 1;
      rhs[row] = target(a, b);
    }
  return {m, rhs};
}

}  // namespace

std::optional<OneCochain> solve_coboundary(const GradingContext& ctx, const PairTable& target) {
  auto [m, rhs] = coboundary_system(ctx, target);
  return solve(m, rhs);
}

std::optional<PairTable> coboundary_obstruction(const GradingContext& ctx, const PairTable& target) {
  auto [m, rhs] = coboundary_system(ctx, target);
  const int n = ctx.group.order();
  for (const auto& y : nullspace(m.transpose())) {
    Rational pairing(0);
    for (std::size_t r = 0; r < y.size(); ++r) pairing += y[r] * rhs[r];
    if (is_zero(pairing)) continue;
    PairTable w(n, Rational(0));
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) w(a, b) = y[static_cast<std::size_t>(a * n + b)];
    return w;
  }
  return std::nullopt;
}

OneCochain find_trivializing_cochain(const GradingContext& ctx) {
  auto tau = solve_coboundary(ctx, ctx.phi);
  if (!tau) throw Error(ErrorKind::NoSolution, "phi is not a coboundary");
  return *tau;
}

bool check_group_cocycle(const FiniteGroup& g, const ElementSet& sub, const PairTable& theta) {
  const Elem e = g.identity();
  if (theta(e, e) != 1) return false;
  for (Elem a : sub)
    for (Elem b : sub) {
      if (is_zero(theta(a, b))) return false;
      for (Elem c : sub)
        if (theta(g.mul(a, b), c) * theta(a, b) != theta(a, g.mul(b, c)) * theta(b, c)) return false;
    }
  return true;
}

std::optional<std::string> find_mult_cocycle_violation(const FiniteGroup& g, const MultCocycleZ& z) {
  const auto& f = z.fine;
  const auto& chi = z.chi;
  auto lbl = [&](Elem a, Elem b) { return "(" + g.label(a) + "," + g.label(b) + ")"; };
  for (Elem c = 0; c < g.order(); ++c)
    for (Elem b = 0; b < g.order(); ++b) {
      bool off = !f.in_support(b) || !f.in_support(g.mul(c, b));
      if (off) {
        if (!is_zero(chi(c, b))) return "chi" + lbl(c, b) + " must vanish off the support";
        continue;
      }
      int k = f.coset_of[static_cast<std::size_t>(b)];
      bool normalized = b == f.reps[static_cast<std::size_t>(k)] || c == g.identity();
      if (normalized && chi(c, b) != 1) return "chi" + lbl(c, b) + " must be 1";
      if (is_zero(chi(c, b))) return "chi" + lbl(c, b) + " must be nonzero";
    }
  for (Elem c = 0; c < g.order(); ++c)
    for (Elem a = 0; a < g.order(); ++a)
      for (Elem b = 0; b < g.order(); ++b) {
        if (!f.in_support(b)) continue;
        Elem rep = f.reps[static_cast<std::size_t>(f.coset_of[static_cast<std::size_t>(b)])];
        Rational lhs = chi(c, g.mul(a, rep)) * chi(g.mul(c, a), b);
        Rational rhs = chi(c, g.mul(a, b)) * chi(a, b);
        if (lhs != rhs)
          return "cocycle condition fails at gamma=" + g.label(c) + ", alpha=" + g.label(a) + ", beta=" + g.label(b);
      }
  return std::nullopt;
}

bool check_mult_cocycle_Z(const FiniteGroup& g, const MultCocycleZ& z) { return !find_mult_cocycle_violation(g, z); }

MultCocycleZ chi_from_theta(const FiniteGroup& g, const PairTable& theta, const FineSubgroupData& fine) {
  if (!check_group_cocycle(g, fine.gamma1, theta))
    throw Error(ErrorKind::NotACocycle, "theta is not a normalized 2-cocycle on Gamma_1");
  MultCocycleZ z{PairTable(g.order()), fine};
  for (Elem c = 0; c < g.order(); ++c)
    for (Elem b = 0; b < g.order(); ++b) {
      Elem cb = g.mul(c, b);
      if (!fine.in_support(b) || !fine.in_support(cb)) continue;
      Elem gk = fine.reps[static_cast<std::size_t>(fine.coset_of[static_cast<std::size_t>(b)])];
      Elem gq = fine.reps[static_cast<std::size_t>(fine.coset_of[static_cast<std::size_t>(cb)])];
      z.chi(c, b) = theta(g.mul(g.mul(g.inv(gq), c), gk), g.mul(g.inv(gk), b));
    }
  return z;
}

}  // namespace gca
