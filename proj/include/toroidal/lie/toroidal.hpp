#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>

#include "toroidal/core/multi_index.hpp"
#include "toroidal/core/scalar.hpp"
#include "toroidal/lie/simple_lie.hpp"

namespace toroidal {

/// a(n0, n) = a ⊗ t0^n0 t^n for the basis element b_basis of g.
struct LoopKey {
  int basis = 0;
  int n0 = 0;
  MultiIndex n;
  friend bool operator==(const LoopKey&, const LoopKey&) = default;
  friend auto operator<=>(const LoopKey&, const LoopKey&) = default;
};

/// K0(n) = K0 ⊗ t^n.
struct K0Key {
  MultiIndex n;
  friend bool operator==(const K0Key&, const K0Key&) = default;
  friend auto operator<=>(const K0Key&, const K0Key&) = default;
};

/// K_i, 1 <= i <= r.
struct KiKey {
  int i = 1;
  friend bool operator==(const KiKey&, const KiKey&) = default;
  friend auto operator<=>(const KiKey&, const KiKey&) = default;
};

using GeneratorKey = std::variant<LoopKey, K0Key, KiKey>;

inline bool is_central(const GeneratorKey& k) { return !std::holds_alternative<LoopKey>(k); }

/// Finite linear combination of generators; zero coefficients are never stored.
class ToroidalElement {
 public:
  using Terms = std::map<GeneratorKey, Scalar>;

  ToroidalElement() = default;
  explicit ToroidalElement(const GeneratorKey& key, const Scalar& coeff = 1);

  void add(const GeneratorKey& key, const Scalar& coeff);
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const GeneratorKey& key) const;

  ToroidalElement& operator+=(const ToroidalElement& rhs);
  ToroidalElement& operator-=(const ToroidalElement& rhs);
  ToroidalElement& operator*=(const Scalar& s);
  friend ToroidalElement operator+(ToroidalElement a, const ToroidalElement& b) { return a += b; }
  friend ToroidalElement operator-(ToroidalElement a, const ToroidalElement& b) { return a -= b; }
  friend ToroidalElement operator*(const Scalar& s, ToroidalElement a) { return a *= s; }
  friend bool operator==(const ToroidalElement&, const ToroidalElement&) = default;

 private:
  Terms terms_;
};

/// τ = (g ⊗ C[t0^±] ⊕ C K0) ⊗ C[t1^±..tr^±] ⊕ Σ C K_i for a fixed g and rank r.
/// Rank 0 is the affine algebra ĝ.
class ToroidalAlgebra {
 public:
  ToroidalAlgebra(LieDataPtr lie, int rank);

  const SimpleLieData& lie() const { return *lie_; }
  const LieDataPtr& lie_ptr() const { return lie_; }
  int rank() const { return rank_; }

  /// Throws RankMismatch or IndexOutOfRange for keys outside this configuration.
  void validate(const GeneratorKey& key) const;

  ToroidalElement bracket(const GeneratorKey& u, const GeneratorKey& v) const;
  ToroidalElement bracket(const ToroidalElement& u, const ToroidalElement& v) const;
  bool jacobi_check(const ToroidalElement& u, const ToroidalElement& v, const ToroidalElement& w) const;

  /// x ⊗ t0^n0 t^n for an arbitrary element x of g.
  ToroidalElement loop(const LieElement& x, int n0, const MultiIndex& n) const;

  /// Accepts "e(1,(1,2))", "e(1)" (rank 0), "K0((3))", "K0" (rank 0) and "K1".
  GeneratorKey parse_key(std::string_view text) const;
  std::string key_str(const GeneratorKey& key) const;
  std::string element_str(const ToroidalElement& u) const;

 private:
  LieDataPtr lie_;
  int rank_;
};

}  // namespace toroidal
