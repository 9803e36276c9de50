#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gca/rational.hpp"

namespace gca {

/// Group elements are indices into the multiplication table.
using Elem = int;
using ElementSet = std::set<Elem>;

/// Finite group given extensionally by its multiplication table.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  /// Validates the table; throws NotLatinSquare, NoIdentity, NoInverse, NotAssociative
  /// or InvalidArgument (shape / range).
  static FiniteGroup from_table(std::vector<std::string> labels, std::vector<std::vector<Elem>> table);
  /// Elements labelled "0".."n-1", product is addition mod n.
  static FiniteGroup cyclic(int n);
  /// Permutations of {1,2,3} with (pq)(i) = p(q(i)); labels e,(12),(13),(23),(123),(132).
  static FiniteGroup symmetric3();

  int order() const { return static_cast<int>(labels_.size()); }
  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a * order() + b)]; }
  Elem inv(Elem a) const { return inverse_[static_cast<std::size_t>(a)]; }
  Elem identity() const { return identity_; }
  const std::string& label(Elem a) const { return labels_[static_cast<std::size_t>(a)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Elem> find(std::string_view label) const;
  /// Throws InvalidArgument for unknown labels.
  Elem index_of(std::string_view label) const;
  int element_order(Elem a) const;
  std::vector<Elem> elements() const;

  /// Smallest subgroup containing gens.
  ElementSet generated(const ElementSet& gens) const;
  bool is_subgroup(const ElementSet& s) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  Elem identity_ = 0;
};

/// Rational-valued function on Γ×Γ.
class PairTable {
 public:
  PairTable() = default;
  explicit PairTable(int n, const Rational& fill = Rational(0))
      : n_(n), data_(static_cast<std::size_t>(n * n), fill) {}
  int size() const { return n_; }
  Rational& operator()(Elem a, Elem b) { return data_[static_cast<std::size_t>(a * n_ + b)]; }
  const Rational& operator()(Elem a, Elem b) const { return data_[static_cast<std::size_t>(a * n_ + b)]; }
  bool operator==(const PairTable&) const = default;

 private:
  int n_ = 0;
  std::vector<Rational> data_;
};

/// Left cosets γ_kΓ₁ partitioning Γ∖Γ₀, with γ_1 = e.
struct FineSubgroupData {
  ElementSet gamma1;
  ElementSet gamma0;
  std::vector<Elem> reps;
  /// Coset index of each element, -1 on Γ₀.
  std::vector<int> coset_of;

  int p() const { return static_cast<int>(reps.size()); }
  bool in_support(Elem g) const { return coset_of[static_cast<std::size_t>(g)] >= 0; }
  /// Elements of the k-th coset in index order.
  std::vector<Elem> coset(int k) const;
};

/// Throws NotASubgroup or NotAUnionOfCosets.
FineSubgroupData coset_decomposition(const FiniteGroup& g, const ElementSet& gamma1, const ElementSet& gamma0);

/// (Γ, σ, φ) over the additive line, plus the set Γ₀.
struct GradingContext {
  FiniteGroup group;
  std::vector<Rational> sigma;
  PairTable phi;
  ElementSet gamma0;

  /// Trivial group, σ = 1, φ = 0.
  static GradingContext trivial();
  /// σ ≡ 1, φ ≡ 0 on the given group.
  static GradingContext untwisted(FiniteGroup g);

  const Rational& sig(Elem a) const { return sigma[static_cast<std::size_t>(a)]; }
  Elem e() const { return group.identity(); }
  Elem mul(Elem a, Elem b) const { return group.mul(a, b); }
  Elem inv(Elem a) const { return group.inv(a); }
  bool phi_is_zero() const;
};

/// σ(αβ) = σ(α)σ(β) and σ nonzero everywhere.
bool check_sigma(const GradingContext& ctx);

/// The character that is 1 on an index-two subgroup and -1 off it. Throws InvalidArgument.
std::vector<Rational> index_two_character(const FiniteGroup& g, const ElementSet& kernel);

}  // namespace gca
