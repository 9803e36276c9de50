#pragma once

#include <string>
#include <vector>

#include "gca/upoly.hpp"

namespace gca {

using PolyVector = std::vector<UPoly>;

/// Q[T]-submodule of Q[T]^N stored as its row Hermite normal form: pivot columns
/// strictly increase, pivots are monic, and entries above a pivot have lower degree.
class PolySubmodule {
 public:
  PolySubmodule() = default;
  explicit PolySubmodule(std::size_t ambient_rank) : ambient_(ambient_rank) {}

  static PolySubmodule full(std::size_t ambient_rank);

  std::size_t ambient_rank() const { return ambient_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<PolyVector>& generators() const { return rows_; }
  std::size_t pivot(std::size_t r) const { return pivots_[r]; }
  bool is_zero() const { return rows_.empty(); }
  bool is_full() const;
  /// Σ deg(pivot); the Q-dimension of Q[T]^r / (pivot-column projection).
  int pivot_degree_sum() const;

  bool operator==(const PolySubmodule&) const = default;
  std::string str() const;

 private:
  friend PolySubmodule hermite_nf(const std::vector<PolyVector>& rows, std::size_t ambient_rank);
  std::size_t ambient_ = 0;
  std::vector<PolyVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Throws InvalidArgument if a row has the wrong length.
PolySubmodule hermite_nf(const std::vector<PolyVector>& rows, std::size_t ambient_rank);
PolySubmodule hermite_nf(const PolySubmodule& m, const std::vector<PolyVector>& extra);

/// Throws InvalidArgument on a dimension mismatch.
bool submodule_contains(const PolySubmodule& m, const PolyVector& v);
bool submodule_contains(const PolySubmodule& m, const PolySubmodule& sub);

}  // namespace gca
