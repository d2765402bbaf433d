#pragma once

// Seeded generators for property tests. Every test constructs its own Gen
// with a fixed seed so failures reproduce exactly.

#include <random>
#include <vector>

#include "toroidal/core/laurent_poly.hpp"
#include "toroidal/core/scalar.hpp"
#include "toroidal/lie/toroidal.hpp"

namespace testgen {

using toroidal::LaurentPoly;
using toroidal::Scalar;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Scalar rational(int span = 9, int max_den = 5) { return Scalar(integer(-span, span), integer(1, max_den)); }
  Scalar nonzero_rational(int span = 9, int max_den = 5) {
    Scalar s;
    while (s.is_zero()) s = rational(span, max_den);
    return s;
  }

  /// Laurent polynomial with up to `terms` terms and exponents in [lo, hi].
  LaurentPoly laurent(int lo, int hi, int terms = 4) {
    LaurentPoly p;
    const int n = integer(1, terms);
    for (int t = 0; t < n; ++t) p += LaurentPoly::monomial(integer(lo, hi), nonzero_rational());
    return p;
  }
  LaurentPoly nonzero_poly(int max_degree) {
    LaurentPoly p;
    while (p.is_zero()) p = laurent(0, max_degree);
    return p;
  }

  toroidal::MultiIndex multi_index(int rank, int lo, int hi) {
    std::vector<int> n(static_cast<std::size_t>(rank));
    for (auto& x : n) x = integer(lo, hi);
    return toroidal::MultiIndex(n);
  }

  toroidal::GeneratorKey key(const toroidal::ToroidalAlgebra& g, int lo, int hi) {
    const int kind = integer(0, 9);
    if (kind < 8 || g.rank() == 0) {
      return toroidal::LoopKey{integer(0, g.lie().dimension() - 1), integer(lo, hi), multi_index(g.rank(), lo, hi)};
    }
    if (kind == 8) return toroidal::K0Key{multi_index(g.rank(), lo, hi)};
    return toroidal::KiKey{integer(1, g.rank())};
  }

  toroidal::ToroidalElement element(const toroidal::ToroidalAlgebra& g, int lo, int hi, int terms = 3) {
    toroidal::ToroidalElement u;
    const int n = integer(1, terms);
    for (int t = 0; t < n; ++t) u.add(key(g, lo, hi), nonzero_rational());
    return u;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace testgen
