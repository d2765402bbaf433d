#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "toroidal/core/scalar.hpp"

namespace toroidal {

/// Sparse univariate Laurent polynomial over Q. Zero coefficients are never
/// stored, so the zero polynomial has empty support.
class LaurentPoly {
 public:
  using Terms = std::map<int, Scalar>;

  LaurentPoly() = default;
  explicit LaurentPoly(Terms terms);

  static LaurentPoly constant(const Scalar& c) { return monomial(0, c); }
  static LaurentPoly monomial(int exponent, const Scalar& c = 1);
  /// x - a
  static LaurentPoly linear(const Scalar& root);
  /// prod_j (x - roots[j])
  static LaurentPoly from_roots(std::span<const Scalar> roots);

  bool is_zero() const { return terms_.empty(); }
  /// True when no negative exponent is present.
  bool is_polynomial() const;
  /// Largest / smallest exponent with a nonzero coefficient. Require !is_zero().
  int degree() const;
  int low_degree() const;

  Scalar coeff(int exponent) const;
  const Terms& terms() const { return terms_; }
  Scalar leading_coeff() const;

  /// Negative exponents require a nonzero point.
  Scalar eval(const Scalar& x) const;
  LaurentPoly derivative() const;
  LaurentPoly shifted(int k) const;  // x^k * p
  LaurentPoly monic() const;
  LaurentPoly pow(unsigned k) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const Scalar& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Scalar& b) { return a *= b; }
  friend LaurentPoly operator*(const Scalar& b, LaurentPoly a) { return a *= b; }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Euclidean division of ordinary polynomials; both arguments must satisfy
  /// is_polynomial() and the divisor must be nonzero.
  static std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b);
  /// Monic gcd of two ordinary polynomials (zero if both are zero).
  static LaurentPoly gcd(LaurentPoly a, LaurentPoly b);

  std::string str() const;

 private:
  void add_term(int exponent, const Scalar& c);

  Terms terms_;
};

/// Dense prefix c_0 + c_1 x + ... + c_w x^w of a power series.
class TruncatedPowerSeries {
 public:
  TruncatedPowerSeries() : coeffs_(1) {}
  explicit TruncatedPowerSeries(std::vector<Scalar> coeffs);

  int window() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Scalar& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  /// (this * p) mod x^{window+1}; p must be an ordinary polynomial.
  TruncatedPowerSeries times_mod(const LaurentPoly& p) const;

  friend bool operator==(const TruncatedPowerSeries&, const TruncatedPowerSeries&) = default;

 private:
  std::vector<Scalar> coeffs_;
};

/// Result of writing p = x^shift * q with q(0) != 0 and q an ordinary polynomial.
struct MonomialSplit {
  int shift = 0;
  LaurentPoly q;
};

/// Power-series expansion of 1/p at x = 0, up to and including x^window.
/// Requires an ordinary polynomial with p(0) != 0.
TruncatedPowerSeries expand_inverse(const LaurentPoly& p, int window);

MonomialSplit strip_monomial_factor(const LaurentPoly& p);

/// True iff every nonzero root of p is simple (gcd(q, q') constant after the
/// monomial factor is stripped).
bool poly_roots_multiplicity_free(const LaurentPoly& p);

/// Monic product of (x - a) over the distinct nonzero roots of p, computed as
/// q / gcd(q, q') for the stripped part q.
LaurentPoly nonzero_root_radical(const LaurentPoly& p);

}  // namespace toroidal
