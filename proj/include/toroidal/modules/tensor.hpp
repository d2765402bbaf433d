#pragma once

#include <memory>
#include <vector>

#include "toroidal/modules/evaluation.hpp"
#include "toroidal/modules/module.hpp"

namespace toroidal {

using ModulePtr = std::shared_ptr<const Module>;

/// V_1(z_1) ⊗ ... ⊗ V_M(z_M) for ĝ-modules V_i (rank 0) with restriction
/// bounds:
///   a(n0, n)  acts as Σ_i z_i^n (a(n0) on slot i),
///   K0(n)     acts as Σ_i z_i^n (K0 on slot i),
///   K_i       acts as 0.
class RestrictedEvalModule : public Module {
 public:
  RestrictedEvalModule(std::vector<ModulePtr> factors, std::vector<RestrictedEvalPoint> points);

  std::size_t dimension() const override { return index_.size(); }
  std::string label(std::size_t i) const override;
  std::string kind() const override { return "restricted_eval"; }
  std::optional<Weight> weight_of(std::size_t i) const override;
  std::optional<int> restriction_bound(int a, const MultiIndex& n, std::size_t i) const override;
  std::optional<int> restricted_part_bound(std::size_t i) const override;
  std::vector<int> degree_profile(std::size_t i) const override;
  std::vector<int> depth_profile() const override;

  std::size_t factors() const { return factors_.size(); }
  const Module& factor(std::size_t j) const { return *factors_[j]; }
  const RestrictedEvalPoint& point(std::size_t j) const { return points_[j]; }

 protected:
  ModuleVector act_basis(const GeneratorKey& key, std::size_t i) const override;

 private:
  std::vector<ModulePtr> factors_;
  std::vector<RestrictedEvalPoint> points_;
  TensorIndexer index_;
};

/// Tensor product of τ-modules of the same rank: every generator, central or
/// not, acts through the coproduct x ↦ x ⊗ 1 + 1 ⊗ x.
class TensorModule : public Module {
 public:
  explicit TensorModule(std::vector<ModulePtr> parts);

  std::size_t dimension() const override { return index_.size(); }
  std::string label(std::size_t i) const override;
  std::string kind() const override { return "tensor"; }
  std::optional<Weight> weight_of(std::size_t i) const override;
  std::optional<int> restriction_bound(int a, const MultiIndex& n, std::size_t i) const override;
  std::optional<int> restricted_part_bound(std::size_t i) const override;
  std::vector<int> degree_profile(std::size_t i) const override;
  std::vector<int> depth_profile() const override;

  std::size_t parts() const { return parts_.size(); }
  const Module& part(std::size_t j) const { return *parts_[j]; }
  const ModulePtr& part_ptr(std::size_t j) const { return parts_[j]; }
  std::size_t digit(std::size_t i, std::size_t j) const { return index_.digit(i, j); }
  /// Basis index of e_{k_1} ⊗ ... ⊗ e_{k_M}.
  std::size_t compose(const std::vector<std::size_t>& digits) const;
  /// The summand of the action coming from part j alone.
  ModuleVector act_part(const GeneratorKey& key, std::size_t i, std::size_t j) const;

 protected:
  ModuleVector act_basis(const GeneratorKey& key, std::size_t i) const override;

 private:
  std::vector<ModulePtr> parts_;
  TensorIndexer index_;
};

}  // namespace toroidal
