#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "toroidal/core/json.hpp"
#include "toroidal/core/laurent_poly.hpp"
#include "toroidal/formal/generating.hpp"
#include "toroidal/formal/window.hpp"
#include "toroidal/modules/tensor.hpp"
#include "toroidal/report.hpp"

namespace toroidal {

enum class CategoryTag { E_tau, E_tau_prime, R_tilde, C_tau };

std::string tag_name(CategoryTag tag);
/// Throws Error(ParseError) for unknown names.
CategoryTag parse_tag(std::string_view name);

/// Annihilating polynomials p0 (x0) and p1..pr (x1..xr) for a category tag.
/// R_tilde carries no p0; every other tag requires one.
struct CategoryWitness {
  CategoryTag tag = CategoryTag::C_tau;
  std::optional<LaurentPoly> p0;
  std::vector<LaurentPoly> p;

  /// Throws EmptyPolynomial for a zero polynomial and InvalidWitness for a
  /// shape that does not fit the tag or the rank. Multiplicity-freeness is a
  /// property of the module's membership and is checked by check_membership.
  void validate(int rank) const;
  json to_json() const;
  /// {"category": "C_tau", "p0": {"1": "1", "0": "-3"}, "p": [...]}
  static CategoryWitness from_json(const json& j);
};

/// Certifies the category axioms of `witness` for a(x0, x)w with every basis
/// element a, every listed w and every x exponent in the window:
///   E_tau, E_tau_prime: p_i(x_i) a(x0,x) w = 0 for i = 0..r;
///   R_tilde: a(n0, n) w = 0 above the module's x0 bound, and p_i(x_i) kills
///            both a(x0,x) w and K0(x) w for i >= 1;
///   C_tau:   the same with p0(x0) a(x0,x) w in place of a(x0,x) w.
/// The primed tags, R_tilde and C_tau also require multiplicity-free nonzero
/// roots of p1..pr, and every tag checks K_i w = 0. Coefficients whose
/// computation leaves a truncated module's valid window are skipped.
Report check_membership(const Module& W, const CategoryWitness& witness, const ExponentWindow& window,
                        std::span<const ModuleVector> vectors);

/// ψ(α) and α - ψ(α) for the witness's p0 (1 when the witness has none).
std::pair<GeneratingSeries, GeneratingSeries> decompose_series(const GeneratingSeries& alpha,
                                                               const CategoryWitness& witness);

/// One half of the splitting π = π_R + π_E of a module in C_tau, as a module
/// on the same space:
///   R side: a(n0,n) ↦ ψ(a(x0,x))(n0,n), K0(n) ↦ π(K0(n)), K_i ↦ 0;
///   E side: a(n0,n) ↦ π(a(n0,n)) - ψ(a(x0,x))(n0,n), K0(n), K_i ↦ 0.
class SplitModule final : public Module {
 public:
  enum class Side { R, E };

  SplitModule(ModulePtr base, LaurentPoly p0, Side side);

  std::size_t dimension() const override { return base_->dimension(); }
  std::string label(std::size_t i) const override { return base_->label(i); }
  std::string kind() const override { return side_ == Side::R ? "pi_R" : "pi_E"; }
  std::optional<int> restriction_bound(int a, const MultiIndex& n, std::size_t i) const override;
  std::optional<int> restricted_part_bound(std::size_t i) const override;
  std::vector<int> degree_profile(std::size_t i) const override { return base_->degree_profile(i); }
  std::vector<int> depth_profile() const override { return base_->depth_profile(); }

  const Module& base() const { return *base_; }
  const LaurentPoly& p0() const { return p0_; }
  Side side() const { return side_; }
  /// Length l of the finite ψ formula for a(·, ·) at n0 on basis vector i.
  int expansion_length(int a, int n0, std::size_t i) const;

 protected:
  ModuleVector act_basis(const GeneratorKey& key, std::size_t i) const override;

 private:
  ModuleVector restricted_part(int a, int n0, const MultiIndex& n, std::size_t i) const;

  ModulePtr base_;
  LaurentPoly p0_;
  Side side_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<GeneratorKey, std::size_t>, ModuleVector> cache_;
};

struct DecomposedRep {
  ModulePtr original;
  std::shared_ptr<const SplitModule> pi_R;
  std::shared_ptr<const SplitModule> pi_E;
  CategoryWitness witness;
  /// Witnesses the halves are expected to satisfy: R_tilde with p1..pr, and
  /// E_tau_prime with p0 stripped of its monomial factor.
  CategoryWitness witness_R;
  CategoryWitness witness_E;
};

/// Splits π. The witness is first certified for C_tau on a small window
/// (x0 in [-2,2], x in [-1,1]^r) over the low-degree basis vectors; failure
/// throws NotInCategory. Witnesses of the subcategories are accepted.
DecomposedRep decompose_pi(ModulePtr W, const CategoryWitness& witness);

/// π_R(u) π_E(v) w = π_E(v) π_R(u) w for all u, v in keys and w in vectors.
Report commuting_actions_report(const DecomposedRep& d, std::span<const GeneratorKey> keys,
                                std::span<const ModuleVector> vectors);
bool verify_commuting_actions(const DecomposedRep& d, std::span<const GeneratorKey> keys,
                              std::span<const ModuleVector> vectors);

/// Solves s_k = Σ_j z_j^k c_j (k = 0..N-1) exactly for c_1..c_N. Throws
/// ZeroPoint, SingularSystem for repeated points, and InvalidArgument when
/// fewer than N samples are given.
std::vector<ModuleVector> vandermonde_separate(std::span<const ModuleVector> samples, std::span<const Scalar> points);

struct TransportResult {
  int k = 0;    // nilpotency order of a(n0, n) on w in the original module
  int l = 0;    // length of the finite ψ formula at (n0, w)
  int k_R = 0;  // order of the R-side action
  int k_E = 0;  // order of the E-side action
  bool pass = false;
  json to_json() const;
};

/// Nilpotency orders of the split actions of the root vector a at (n0, n)
/// on w. pass is true when k_R <= k(l+1) and k_E <= k(l+2). Throws
/// NilpotencyBoundExceeded when the original action is not nilpotent within
/// max_k.
TransportResult integrability_transport_check(const DecomposedRep& d, int a, int n0, const MultiIndex& n,
                                              const ModuleVector& w, int max_k);

}  // namespace toroidal
