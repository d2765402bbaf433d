#pragma once

#include <vector>

#include "toroidal/core/laurent_poly.hpp"
#include "toroidal/modules/finite_rep.hpp"
#include "toroidal/modules/module.hpp"

namespace toroidal {

/// (z_0, ..., z_r), all nonzero.
struct EvalPoint {
  explicit EvalPoint(std::vector<Scalar> z);
  std::vector<Scalar> z;
  int rank() const { return static_cast<int>(z.size()) - 1; }
  /// z_0^n0 z_1^n1 ... z_r^nr
  Scalar monomial(int n0, const MultiIndex& n) const;
};

/// (z_1, ..., z_r), all nonzero; used by restricted evaluation modules.
struct RestrictedEvalPoint {
  explicit RestrictedEvalPoint(std::vector<Scalar> z);
  std::vector<Scalar> z;
  int rank() const { return static_cast<int>(z.size()); }
  Scalar monomial(const MultiIndex& n) const;
};

/// U_1(z_1) ⊗ ... ⊗ U_s(z_s):
///   a(n0, n) acts as Σ_j z_0j^n0 ... z_rj^nr (a on slot j), and the centre acts as 0.
class EvaluationModule : public Module {
 public:
  EvaluationModule(std::vector<FiniteRep> reps, std::vector<EvalPoint> points);

  std::size_t dimension() const override { return index_.size(); }
  std::string label(std::size_t i) const override;
  std::string kind() const override { return "eval"; }
  std::optional<Weight> weight_of(std::size_t i) const override;
  std::optional<int> restricted_part_bound(std::size_t) const override { return kVanishingBound; }

  std::size_t factors() const { return reps_.size(); }
  const FiniteRep& rep(std::size_t j) const { return reps_[j]; }
  const EvalPoint& point(std::size_t j) const { return points_[j]; }
  /// The slot-j summand of a(n0, n) e_i (already weighted by the point monomial).
  ModuleVector act_slot(const GeneratorKey& key, std::size_t i, std::size_t j) const;

 protected:
  ModuleVector act_basis(const GeneratorKey& key, std::size_t i) const override;

 private:
  std::vector<FiniteRep> reps_;
  std::vector<EvalPoint> points_;
  TensorIndexer index_;
};

/// p_i(x) = Π_j (x - z_ij) for i = 0..r.
std::vector<LaurentPoly> eval_annihilator(const std::vector<EvalPoint>& points);
/// Same polynomials with repeated roots collapsed: Π over distinct z_ij.
std::vector<LaurentPoly> reduced_eval_annihilator(const std::vector<EvalPoint>& points);

}  // namespace toroidal
