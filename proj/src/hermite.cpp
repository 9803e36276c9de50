#include "gca/hermite.hpp"

#include <iterator>
#include <sstream>

#include "gca/error.hpp"

namespace gca {

namespace {

void axpy(PolyVector& row, const UPoly& q, const PolyVector& pivot_row) {
  if (q.is_zero()) return;
  for (std::size_t c = 0; c < row.size(); ++c)
    if (!pivot_row[c].is_zero()) row[c] -= q * pivot_row[c];
}

bool is_zero_row(const PolyVector& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}

}  // namespace

PolySubmodule PolySubmodule::full(std::size_t ambient_rank) {
  std::vector<PolyVector> rows;
  for (std::size_t i = 0; i < ambient_rank; ++i) {
    PolyVector v(ambient_rank);
    v[i] = UPoly(1);
    rows.push_back(std::move(v));
  }
  return hermite_nf(rows, ambient_rank);
}

bool PolySubmodule::is_full() const {
  if (rank() != ambient_) return false;
  for (std::size_t r = 0; r < rank(); ++r)
    if (rows_[r][pivots_[r]].degree() != 0) return false;
  return true;
}

int PolySubmodule::pivot_degree_sum() const {
  int s = 0;
  for (std::size_t r = 0; r < rank(); ++r) s += rows_[r][pivots_[r]].degree();
  return s;
}

std::string PolySubmodule::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    os << (r ? ", " : "") << "(";
    for (std::size_t c = 0; c < ambient_; ++c) os << (c ? ", " : "") << rows_[r][c].str();
    os << ")";
  }
  os << "]";
  return os.str();
}

PolySubmodule hermite_nf(const std::vector<PolyVector>& rows_in, std::size_t ambient_rank) {
  std::vector<PolyVector> work;
  for (const auto& r : rows_in) {
    if (r.size() != ambient_rank)
      throw Error(ErrorKind::InvalidArgument, "row of length " + std::to_string(r.size()) + " in rank " +
                                                  std::to_string(ambient_rank) + " module");
    if (!is_zero_row(r)) work.push_back(r);
  }
  PolySubmodule out(ambient_rank);
  std::size_t top = 0;
  for (std::size_t c = 0; c < ambient_rank && top < work.size(); ++c) {
    // Euclid on column c among rows top..end.
    while (true) {
      std::size_t best = work.size();
      for (std::size_t r = top; r < work.size(); ++r)
        if (!work[r][c].is_zero() && (best == work.size() || work[r][c].degree() < work[best][c].degree())) best = r;
      if (best == work.size()) break;
      std::swap(work[top], work[best]);
      bool others = false;
      for (std::size_t r = top + 1; r < work.size(); ++r) {
        if (work[r][c].is_zero()) continue;
        axpy(work[r], divmod(work[r][c], work[top][c]).first, work[top]);
        others = others || !work[r][c].is_zero();
      }
      if (!others) break;
    }
    if (top >= work.size() || work[top][c].is_zero()) continue;
    Rational lead = work[top][c].leading();
    if (lead != 1) {
      UPoly inv(Rational(1) / lead);
      for (auto& p : work[top]) p = p * inv;
    }
    for (std::size_t r = 0; r < top; ++r) axpy(work[r], divmod(work[r][c], work[top][c]).first, work[top]);
    out.pivots_.push_back(c);
    ++top;
    // Drop rows that became zero.
    std::vector<PolyVector> kept(std::make_move_iterator(work.begin()),
                                 std::make_move_iterator(work.begin() + static_cast<std::ptrdiff_t>(top)));
    for (std::size_t r = top; r < work.size(); ++r)
      if (!is_zero_row(work[r])) kept.push_back(std::move(work[r]));
    work = std::move(kept);
  }
  work.resize(top);
  out.rows_ = std::move(work);
  return out;
}

PolySubmodule hermite_nf(const PolySubmodule& m, const std::vector<PolyVector>& extra) {
  std::vector<PolyVector> rows = m.generators();
  rows.insert(rows.end(), extra.begin(), extra.end());
  return hermite_nf(rows, m.ambient_rank());
}

bool submodule_contains(const PolySubmodule& m, const PolyVector& v_in) {
  if (v_in.size() != m.ambient_rank())
    throw Error(ErrorKind::InvalidArgument, "vector of length " + std::to_string(v_in.size()) + " in rank " +
                                                std::to_string(m.ambient_rank()) + " module");
  PolyVector v = v_in;
  for (std::size_t r = 0; r < m.rank(); ++r) {
    std::size_t c = m.pivot(r);
    for (std::size_t k = r == 0 ? 0 : m.pivot(r - 1) + 1; k < c; ++k)
      if (!v[k].is_zero()) return false;
    auto [q, rem] = divmod(v[c], m.generators()[r][c]);
    if (!rem.is_zero()) return false;
    axpy(v, q, m.generators()[r]);
  }
  return is_zero_row(v);
}

bool submodule_contains(const PolySubmodule& m, const PolySubmodule& sub) {
  for (const auto& g : sub.generators())
    if (!submodule_contains(m, g)) return false;
  return true;
}

}  // namespace gca
