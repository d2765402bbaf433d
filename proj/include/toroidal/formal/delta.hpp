#pragma once

#include <vector>

#include "toroidal/core/laurent_poly.hpp"
#include "toroidal/formal/window.hpp"
#include "toroidal/report.hpp"

namespace toroidal {

/// Two-variable distribution in normal form
///   Σ c · x1^a x2^b (∂/∂x2)^j [x2^{-1} δ(x1/x2)],
/// where x2^{-1} δ(x1/x2) = Σ_k x1^k x2^{-k-1}. Nothing doubly infinite is
/// stored; coefficients are computed on demand.
class DeltaExpr {
 public:
  struct Term {
    Scalar c;
    int a = 0;
    int b = 0;
    int j = 0;
  };

  DeltaExpr() = default;
  /// (∂/∂x2)^j x2^{-1} δ(x1/x2), without a 1/j! factor.
  static DeltaExpr delta(int j = 0);

  const std::vector<Term>& terms() const { return terms_; }

  /// Coefficient of x1^p x2^q.
  Scalar coeff(int p, int q) const;
  /// For a single term, the only x2 exponent paired with x1^p.
  static int partner_exponent(const Term& t, int p);

  DeltaExpr times_monomial(int a, int b, const Scalar& c = 1) const;
  /// (x1 - x2)^m · this
  DeltaExpr times_difference_power(int m) const;
  DeltaExpr derivative_x2() const;
  DeltaExpr operator*(const Scalar& s) const;
  DeltaExpr operator+(const DeltaExpr& rhs) const;

 private:
  void add(const Term& t);
  std::vector<Term> terms_;
};

/// x(x-1)...(x-j+1)
Scalar falling_factorial(long x, int j);

/// For m > n >= 0: (x1-x2)^m (∂/∂x2)^n x2^{-1}δ(x1/x2) = 0.
/// For 0 <= m <= n: (x1-x2)^m (1/n!)(∂/∂x2)^n x2^{-1}δ(x1/x2)
///                  = (1/(n-m)!)(∂/∂x2)^{n-m} x2^{-1}δ(x1/x2).
/// x1 ranges over window.x0 and x2 over window.x[0] (or window.x0 when x is empty).
Report delta_identity_report(int m, int n, const ExponentWindow& window);
bool delta_identity_check(int m, int n, const ExponentWindow& window);

/// f(x) δ(a/x) = f(a) δ(a/x) on every x exponent in window.x0. Throws ZeroPoint.
Report delta_substitution_report(const LaurentPoly& f, const Scalar& a, const ExponentWindow& window);
bool delta_substitution_check(const LaurentPoly& f, const Scalar& a, const ExponentWindow& window);

}  // namespace toroidal
