#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toroidal/core/laurent_poly.hpp"
#include "toroidal/modules/module.hpp"

namespace toroidal {

/// (p0 · α)(n0, n) = 0 for every n0 > floor.
struct TruncationCertificate {
  LaurentPoly p0;
  int floor = 0;
};

/// A series α(x0, x) w = Σ α(n0, n) x0^{-n0-1} x^{-n-1} of module vectors,
/// known through its coefficient function. `x0_floor` F, when present,
/// certifies α(n0, n) = 0 for n0 > F (the series is restricted); a
/// certificate does the same for p0 · α.
///
/// Series built from a module refer to it by reference; the module must
/// outlive them.
class GeneratingSeries {
 public:
  using Coeff = std::function<ModuleVector(int n0, const MultiIndex& n)>;

  GeneratingSeries(int rank, Coeff coeff, std::optional<int> x0_floor = std::nullopt,
                   std::optional<TruncationCertificate> certificate = std::nullopt);

  /// a(x0, x) acting on w. Restricted modules supply x0_floor; when p0 is
  /// given and the module reports a restricted-part bound F, the certificate
  /// (p0, F - lowdeg p0) is attached.
  static GeneratingSeries of_generator(const Module& W, int a, const ModuleVector& w,
                                       const std::optional<LaurentPoly>& p0 = std::nullopt);
  /// K0(x) acting on w, viewed as an x0-series supported at x0^0 (n0 = -1).
  static GeneratingSeries of_k0(const Module& W, const ModuleVector& w);

  ModuleVector operator()(int n0, const MultiIndex& n) const;
  int rank() const { return rank_; }
  const std::optional<int>& x0_floor() const { return x0_floor_; }
  const std::optional<TruncationCertificate>& certificate() const { return certificate_; }

  /// G with (p0 · α)(n0, ·) = 0 for n0 > G, from x0_floor or from a
  /// certificate whose polynomial divides p0; nullopt if neither applies.
  std::optional<int> truncation_floor(const LaurentPoly& p0) const;

  GeneratingSeries operator+(const GeneratingSeries& rhs) const;
  GeneratingSeries operator-(const GeneratingSeries& rhs) const;
  GeneratingSeries scaled(const Scalar& c) const;
  /// p(x0) · α: coefficient Σ_e c_e α(n0 + e, n).
  GeneratingSeries times_x0_poly(const LaurentPoly& p) const;
  /// p(x_i) · α (1 <= i <= r): coefficient Σ_e c_e α(n0, n + e·ê_i).
  GeneratingSeries times_xi_poly(int i, const LaurentPoly& p) const;
  GeneratingSeries with_certificate(TruncationCertificate c) const;

 private:
  int rank_;
  Coeff coeff_;
  std::optional<int> x0_floor_;
  std::optional<TruncationCertificate> certificate_;
};

/// Coefficients of the finite formula ψ(α)(n0, n) = Σ_{m=0}^{l} β_m α(n0 + m, n).
/// With p0 = x^s q0, q0(0) != 0 and G the truncation floor of p0 · α:
/// L = G + s - n0, (α_i) = expansion of 1/q0 up to x^L, l = L + deg q0 and
/// β_m = Σ_{i + e = m, i <= L} α_i q0_e. L < 0 means ψ(α)(n0, ·) = 0.
struct PsiExpansion {
  int L = -1;
  int l = -1;
  std::vector<Scalar> beta;
};

/// Throws NoTruncationBound when no floor can be certified for p0 · α, and
/// EmptyPolynomial for p0 = 0.
PsiExpansion psi_expansion(const GeneratingSeries& alpha, const LaurentPoly& p0, int n0);
ModuleVector psi_project(const GeneratingSeries& alpha, const LaurentPoly& p0, int n0, const MultiIndex& n);
/// ψ(α) as a restricted series (x0_floor = G + lowdeg p0).
GeneratingSeries psi_series(const GeneratingSeries& alpha, const LaurentPoly& p0);
/// (ψ(α), α - ψ(α)); the second part is annihilated by p0.
std::pair<GeneratingSeries, GeneratingSeries> decompose_series(const GeneratingSeries& alpha, const LaurentPoly& p0);

}  // namespace toroidal
