#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "toroidal/modules/finite_rep.hpp"
#include "toroidal/modules/module.hpp"

namespace toroidal {

/// The generalized Verma module U(ĝ) ⊗ U over ĝ (rank 0), where g ⊗ t0 C[t0]
/// kills U, g acts on U, and K0 acts as `level`. Basis vectors are PBW
/// monomials a_{i1}(-m1) ... a_{ik}(-mk) ⊗ u with (m1, i1) <= ... <= (mk, ik),
/// m_j >= 1 and total degree Σ m_j <= depth, ordered by (degree, factors, u).
class InducedModule : public Module {
 public:
  InducedModule(FiniteRep u, Scalar level, int depth);

  std::size_t dimension() const override { return basis_.size(); }
  std::string label(std::size_t i) const override;
  std::string kind() const override { return "induced"; }
  std::optional<Weight> weight_of(std::size_t i) const override;
  std::optional<int> restriction_bound(int, const MultiIndex&, std::size_t i) const override { return degree(i); }
  std::optional<int> restricted_part_bound(std::size_t i) const override { return degree(i); }
  std::vector<int> degree_profile(std::size_t i) const override { return {degree(i)}; }
  std::vector<int> depth_profile() const override { return {depth_}; }

  int degree(std::size_t i) const { return basis_[i].degree(); }
  int depth() const { return depth_; }
  const Scalar& level() const { return level_; }
  const FiniteRep& top() const { return u_; }

 protected:
  ModuleVector act_basis(const GeneratorKey& key, std::size_t i) const override;

 private:
  struct Monomial {
    std::vector<std::pair<int, int>> factors;  // (m, lie index), sorted ascending
    std::size_t u = 0;
    int degree() const;
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
  };
  using Combination = std::map<Monomial, Scalar>;

  /// Exact action of a(n) on a monomial, without truncation.
  const Combination& act_monomial(int a, int n, const Monomial& w) const;
  void add_action(Combination& out, int a, int n, const Combination& in, const Scalar& scale) const;

  FiniteRep u_;
  Scalar level_;
  int depth_;
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t> index_;

  mutable std::mutex memo_mutex_;
  mutable std::map<std::tuple<int, int, Monomial>, std::unique_ptr<Combination>> memo_;
};

}  // namespace toroidal
