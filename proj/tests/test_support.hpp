#pragma once

#include <random>

#include "gca/mpoly.hpp"

namespace gca::testing {

inline Rational random_coeff(std::mt19937_64& rng, int bound = 10) {
  std::uniform_int_distribution<int> d(-bound, bound);
  return Rational(d(rng));
}

/// Random polynomial in the given number of leading variables, total degree <= max_deg.
inline MPoly random_mpoly(std::mt19937_64& rng, unsigned max_deg = 4, std::size_t nvars = kNumVars,
                          int terms = 5) {
  std::uniform_int_distribution<unsigned> ed(0, max_deg);
  std::uniform_int_distribution<std::size_t> vd(0, nvars - 1);
  MPolyBuilder b;
  for (int t = 0; t < terms; ++t) {
    std::array<unsigned, kNumVars> e{};
    unsigned deg = ed(rng);
    for (unsigned k = 0; k < deg; ++k) ++e[vd(rng)];
    b.add(Monomial::from_exponents(e), random_coeff(rng));
  }
  return b.finish();
}

inline std::array<Rational, kNumVars> random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-7, 7), q(1, 5);
  std::array<Rational, kNumVars> p;
  for (auto& x : p) {
    x = Rational(d(rng), q(rng));
    x.canonicalize();
  }
  return p;
}

}  // namespace gca::testing
