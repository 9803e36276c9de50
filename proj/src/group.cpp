#include "gca/group.hpp"

#include <algorithm>
#include <array>

#include "gca/error.hpp"

namespace gca {

FiniteGroup FiniteGroup::from_table(std::vector<std::string> labels, std::vector<std::vector<Elem>> table) {
  const int n = static_cast<int>(labels.size());
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "group has no elements");
  if (static_cast<int>(table.size()) != n) throw Error(ErrorKind::InvalidArgument, "table must have one row per element");
  {
    std::set<std::string> seen(labels.begin(), labels.end());
    if (static_cast<int>(seen.size()) != n) throw Error(ErrorKind::InvalidArgument, "duplicate element labels");
  }
  FiniteGroup g;
  g.labels_ = std::move(labels);
  g.table_.reserve(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) {
    const auto& row = table[static_cast<std::size_t>(i)];
    if (static_cast<int>(row.size()) != n)
      throw Error(ErrorKind::InvalidArgument, "table row " + std::to_string(i) + " has wrong length");
    for (int j = 0; j < n; ++j) {
      Elem v = row[static_cast<std::size_t>(j)];
      if (v < 0 || v >= n)
        throw Error(ErrorKind::InvalidArgument,
                    "table entry (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
      g.table_.push_back(v);
    }
  }
  for (int i = 0; i < n; ++i) {
    std::vector<bool> row_seen(static_cast<std::size_t>(n)), col_seen(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      Elem r = g.mul(i, j), c = g.mul(j, i);
      if (row_seen[static_cast<std::size_t>(r)])
        throw Error(ErrorKind::NotLatinSquare, "row " + std::to_string(i) + " repeats entry " + std::to_string(r));
      if (col_seen[static_cast<std::size_t>(c)])
        throw Error(ErrorKind::NotLatinSquare, "column " + std::to_string(i) + " repeats entry " + std::to_string(c));
      row_seen[static_cast<std::size_t>(r)] = col_seen[static_cast<std::size_t>(c)] = true;
    }
  }
  std::optional<Elem> id;
  for (int e = 0; e < n && !id; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = g.mul(e, a) == a && g.mul(a, e) == a;
    if (ok) id = e;
  }
  if (!id) throw Error(ErrorKind::NoIdentity, "no two-sided identity in table");
  g.identity_ = *id;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw Error(ErrorKind::NotAssociative, "(" + g.labels_[static_cast<std::size_t>(a)] + "," +
                                                     g.labels_[static_cast<std::size_t>(b)] + "," +
                                                     g.labels_[static_cast<std::size_t>(c)] + ")");
  g.inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == g.identity_ && g.mul(b, a) == g.identity_) g.inverse_[static_cast<std::size_t>(a)] = b;
    if (g.inverse_[static_cast<std::size_t>(a)] < 0)
      throw Error(ErrorKind::NoInverse, "element " + g.labels_[static_cast<std::size_t>(a)] + " has no inverse");
  }
  return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "cyclic group order must be positive");
  std::vector<std::string> labels;
  std::vector<std::vector<Elem>> table(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    for (int j = 0; j < n; ++j) table[static_cast<std::size_t>(i)].push_back((i + j) % n);
  }
  return from_table(std::move(labels), std::move(table));
}

FiniteGroup FiniteGroup::symmetric3() {
  using Perm = std::array<int, 3>;
  const std::vector<Perm> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::string> labels = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
  std::vector<std::vector<Elem>> table(6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      Perm c;
      for (std::size_t k = 0; k < 3; ++k) c[k] = perms[i][static_cast<std::size_t>(perms[j][k])];
      auto it = std::find(perms.begin(), perms.end(), c);
      table[i].push_back(static_cast<Elem>(it - perms.begin()));
    }
  return from_table(std::move(labels), std::move(table));
}

std::optional<Elem> FiniteGroup::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<Elem>(i);
  return std::nullopt;
}

Elem FiniteGroup::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw Error(ErrorKind::InvalidArgument, "unknown group element '" + std::string(label) + "'");
}

int FiniteGroup::element_order(Elem a) const {
  int k = 1;
  for (Elem x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

std::vector<Elem> FiniteGroup::elements() const {
  std::vector<Elem> v(labels_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<Elem>(i);
  return v;
}

ElementSet FiniteGroup::generated(const ElementSet& gens) const {
  ElementSet s{identity_};
  std::vector<Elem> frontier{identity_};
  while (!frontier.empty()) {
    Elem x = frontier.back();
    frontier.pop_back();
    for (Elem g : gens) {
      Elem y = mul(x, g);
      if (s.insert(y).second) frontier.push_back(y);
    }
  }
  return s;
}

bool FiniteGroup::is_subgroup(const ElementSet& s) const {
  if (!s.count(identity_)) return false;
  for (Elem a : s) {
    if (a < 0 || a >= order()) return false;
    for (Elem b : s)
      if (!s.count(mul(a, b))) return false;
  }
  return true;
}

std::vector<Elem> FineSubgroupData::coset(int k) const {
  std::vector<Elem> out;
  for (std::size_t g = 0; g < coset_of.size(); ++g)
    if (coset_of[g] == k) out.push_back(static_cast<Elem>(g));
  return out;
}

FineSubgroupData coset_decomposition(const FiniteGroup& g, const ElementSet& gamma1, const ElementSet& gamma0) {
  if (!g.is_subgroup(gamma1)) throw Error(ErrorKind::NotASubgroup, "Gamma_1 is not a subgroup");
  for (Elem x : gamma0)
    if (x < 0 || x >= g.order()) throw Error(ErrorKind::InvalidArgument, "Gamma_0 element out of range");
  if (gamma0.count(g.identity()))
    throw Error(ErrorKind::NotAUnionOfCosets, "identity lies in Gamma_0, so Gamma_1 meets Gamma_0");

  FineSubgroupData d;
  d.gamma1 = gamma1;
  d.gamma0 = gamma0;
  d.coset_of.assign(static_cast<std::size_t>(g.order()), -1);
  std::vector<Elem> order{g.identity()};
  for (Elem x : g.elements())
    if (x != g.identity()) order.push_back(x);
  for (Elem r : order) {
    if (gamma0.count(r) || d.coset_of[static_cast<std::size_t>(r)] >= 0) continue;
    int k = d.p();
    d.reps.push_back(r);
    for (Elem h : gamma1) {
      Elem y = g.mul(r, h);
      if (gamma0.count(y))
        throw Error(ErrorKind::NotAUnionOfCosets, "coset of " + g.label(r) + " meets Gamma_0 at " + g.label(y));
      d.coset_of[static_cast<std::size_t>(y)] = k;
    }
  }
  return d;
}

GradingContext GradingContext::trivial() { return untwisted(FiniteGroup::cyclic(1)); }

GradingContext GradingContext::untwisted(FiniteGroup g) {
  GradingContext ctx;
  int n = g.order();
  ctx.group = std::move(g);
  ctx.sigma.assign(static_cast<std::size_t>(n), Rational(1));
  ctx.phi = PairTable(n);
  return ctx;
}

bool GradingContext::phi_is_zero() const {
  for (Elem a = 0; a < group.order(); ++a)
    for (Elem b = 0; b < group.order(); ++b)
      if (!is_zero(phi(a, b))) return false;
  return true;
}

bool check_sigma(const GradingContext& ctx) {
  const int n = ctx.group.order();
  if (static_cast<int>(ctx.sigma.size()) != n) return false;
  for (Elem a = 0; a < n; ++a) {
    if (is_zero(ctx.sig(a))) return false;
    for (Elem b = 0; b < n; ++b)
      if (ctx.sig(ctx.mul(a, b)) != ctx.sig(a) * ctx.sig(b)) return false;
  }
  return true;
}

std::vector<Rational> index_two_character(const FiniteGroup& g, const ElementSet& kernel) {
  if (!g.is_subgroup(kernel) || 2 * static_cast<int>(kernel.size()) != g.order())
    throw Error(ErrorKind::InvalidArgument, "kernel is not an index-two subgroup");
  std::vector<Rational> s;
  for (Elem x : g.elements()) s.emplace_back(kernel.count(x) ? 1 : -1);
  return s;
}

}  // namespace gca
