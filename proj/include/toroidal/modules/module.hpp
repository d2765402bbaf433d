#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "toroidal/core/json.hpp"
#include "toroidal/lie/toroidal.hpp"

namespace toroidal {

/// Sparse vector over a module's basis; zero coefficients are never stored.
class ModuleVector {
 public:
  using Terms = std::map<std::size_t, Scalar>;

  ModuleVector() = default;
  static ModuleVector basis(std::size_t i, const Scalar& c = 1);

  void add(std::size_t i, const Scalar& c);
  void add_scaled(const ModuleVector& v, const Scalar& c);
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(std::size_t i) const;

  ModuleVector& operator+=(const ModuleVector& rhs);
  ModuleVector& operator-=(const ModuleVector& rhs);
  ModuleVector& operator*=(const Scalar& s);
  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
  friend ModuleVector operator*(const Scalar& s, ModuleVector a) { return a *= s; }
  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

 private:
  Terms terms_;
};

/// Eigenvalues of the extended Cartan elements on a weight vector: h(0,0) for
/// each Cartan basis element, K0(n) as a function of n, and K_1..K_r.
struct Weight {
  std::vector<Scalar> cartan;
  std::function<Scalar(const MultiIndex&)> k0;
  std::vector<Scalar> k;
};

/// Stands in for "-infinity" as an x0 bound: the series component it bounds is zero.
inline constexpr int kVanishingBound = std::numeric_limits<int>::min() / 4;

/// A τ-module given by the action of generators on a finite basis.
///
/// Truncated modules (induced modules and anything built from them) report a
/// degree for each truncated slot together with the slot depth. A single
/// action returns the exact result projected onto degrees <= depth; since the
/// action is homogeneous the output is either exact or entirely discarded.
class Module {
 public:
  explicit Module(ToroidalAlgebra algebra) : algebra_(std::move(algebra)) {}
  virtual ~Module() = default;
  Module(const Module&) = delete;
  Module& operator=(const Module&) = delete;

  const ToroidalAlgebra& algebra() const { return algebra_; }
  const SimpleLieData& lie() const { return algebra_.lie(); }
  int rank() const { return algebra_.rank(); }

  virtual std::size_t dimension() const = 0;
  virtual std::string label(std::size_t i) const = 0;
  virtual std::string kind() const = 0;
  std::optional<std::size_t> find_label(std::string_view label) const;

  /// Validates the key and basis index, then acts.
  ModuleVector act(const GeneratorKey& key, std::size_t i) const;
  ModuleVector apply(const GeneratorKey& key, const ModuleVector& v) const;
  ModuleVector apply(const ToroidalElement& u, const ModuleVector& v) const;

  virtual std::optional<Weight> weight_of(std::size_t /*i*/) const { return std::nullopt; }

  /// N with a(n0, n) e_i = 0 for all n0 > N, when the module is restricted.
  virtual std::optional<int> restriction_bound(int /*a*/, const MultiIndex& /*n*/, std::size_t /*i*/) const {
    return std::nullopt;
  }
  /// Bound for the restricted constituent of a mixed module: the part of
  /// a(x0, x) e_i not killed by the evaluation constituents' p0 vanishes above
  /// it. kVanishingBound for pure evaluation modules.
  virtual std::optional<int> restricted_part_bound(std::size_t /*i*/) const { return std::nullopt; }

  virtual std::vector<int> degree_profile(std::size_t /*i*/) const { return {}; }
  virtual std::vector<int> depth_profile() const { return {}; }
  bool truncated() const { return !depth_profile().empty(); }

  /// Vector versions: the maximum over the support (kVanishingBound for 0).
  std::optional<int> vector_restriction_bound(int a, const MultiIndex& n, const ModuleVector& v) const;
  std::optional<int> vector_restricted_part_bound(const ModuleVector& v) const;

  json vector_json(const ModuleVector& v) const;
  std::string vector_str(const ModuleVector& v) const;
  /// Accepts a basis label, "#index", or {label: scalar}.
  ModuleVector parse_vector(const json& j) const;

  /// Graded dimensions by total degree (a single entry for untruncated modules).
  std::vector<std::size_t> graded_dimensions() const;

 protected:
  virtual ModuleVector act_basis(const GeneratorKey& key, std::size_t i) const = 0;

 private:
  ToroidalAlgebra algebra_;
};

/// Degree increase caused by one generator: |n0| for negative loop modes.
int lowering(const GeneratorKey& key);
int lowering(const ToroidalElement& u);

/// True when applying steps with the given degree increases, in sequence, to
/// e_i never leaves any truncated slot's depth, so every intermediate result
/// is exact.
bool within_valid_window(const Module& m, std::size_t i, std::span<const int> steps);
bool within_valid_window(const Module& m, const ModuleVector& v, std::span<const int> steps);
/// Throws Error(NotWithinValidWindow).
void require_within_valid_window(const Module& m, const ModuleVector& v, std::span<const int> steps);

/// Mixed-radix indexing for tensor products; slot 0 is the most significant digit.
class TensorIndexer {
 public:
  TensorIndexer() = default;
  explicit TensorIndexer(std::vector<std::size_t> dims);

  std::size_t size() const { return size_; }
  std::size_t slots() const { return dims_.size(); }
  std::size_t digit(std::size_t index, std::size_t slot) const { return index / strides_[slot] % dims_[slot]; }
  std::size_t replace(std::size_t index, std::size_t slot, std::size_t value) const {
    return index - digit(index, slot) * strides_[slot] + value * strides_[slot];
  }

 private:
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

/// Joins slot labels with the tensor sign.
std::string tensor_label(const std::vector<std::string>& parts);

}  // namespace toroidal
