#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toroidal/core/dense.hpp"
#include "toroidal/core/json.hpp"
#include "toroidal/core/scalar.hpp"

namespace toroidal {

/// Element of the finite-dimensional algebra g, in coordinates of its fixed basis.
class LieElement {
 public:
  LieElement() = default;
  explicit LieElement(std::vector<Scalar> coords) : coords_(std::move(coords)) {}
  static LieElement basis(int dimension, int index);

  int dimension() const { return static_cast<int>(coords_.size()); }
  const Scalar& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  Scalar& operator[](int i) { return coords_[static_cast<std::size_t>(i)]; }
  const std::vector<Scalar>& coords() const { return coords_; }
  bool is_zero() const;

  LieElement& operator+=(const LieElement& rhs);
  LieElement& operator-=(const LieElement& rhs);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Scalar& s, LieElement a);
  friend bool operator==(const LieElement&, const LieElement&) = default;

 private:
  std::vector<Scalar> coords_;
};

/// A finite-dimensional simple Lie algebra presented by structure constants
/// [b_i, b_j] = sum_k c_ij^k b_k, together with the normalized invariant form
/// (long roots have squared length 2), designated root vectors and a Cartan
/// basis. Instances are immutable and validated on construction.
class SimpleLieData {
 public:
  struct Term {
    int index;
    Scalar coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  static SimpleLieData sl2();
  static SimpleLieData sl3();

  /// Builds a matrix Lie algebra: brackets are matrix commutators expressed in
  /// the given basis, and the form is the trace form tr(AB).
  static SimpleLieData from_matrices(std::string name, std::vector<std::string> labels,
                                     std::vector<DenseMatrix> matrices, std::vector<int> root_vectors,
                                     std::vector<int> cartan, std::vector<LieElement> nilpotent_basis = {});

  /// Reads {dimension, brackets: [[i,j,k,"c"],...], form: [[...]], root_vectors, cartan}
  /// plus optional name, labels and nilpotent_basis. Throws Error(InvalidLieData)
  /// or Error(InvalidDescriptor).
  static SimpleLieData from_json(const json& j);
  json to_json() const;

  const std::string& name() const { return name_; }
  int dimension() const { return dim_; }
  const std::string& label(int i) const;
  std::optional<int> index_of(std::string_view label) const;

  const std::vector<Term>& bracket_basis(int i, int j) const;
  const Scalar& form(int i, int j) const;
  const std::vector<int>& root_vectors() const { return root_vectors_; }
  const std::vector<int>& cartan() const { return cartan_; }
  bool is_root_vector(int i) const;

  LieElement bracket(const LieElement& a, const LieElement& b) const;
  Scalar invariant_form(const LieElement& a, const LieElement& b) const;
  DenseMatrix ad(const LieElement& a) const;

  /// Matrices of the defining representation, when the algebra was built from matrices.
  const std::vector<DenseMatrix>& defining_matrices() const { return matrices_; }

  /// Eigenvalues of ad(h) on basis element i for each Cartan basis element h,
  /// or nullopt when b_i is not a simultaneous eigenvector.
  std::optional<std::vector<Scalar>> cartan_weight(int i) const;

  /// (alpha, alpha) for the root of each designated root vector, via the
  /// coroot h_alpha in [x_alpha, x_{-alpha}].
  std::vector<Scalar> root_lengths_squared() const;

  /// A basis {a_1..a_l} with <a_i,a_i> = 0 (hence [a_i(n),a_i(m)] = 0 in the
  /// toroidal algebra) and ad(a_i) nilpotent. Re-verified on every call;
  /// throws Error(BasisSearchFailed) when none is stored or verification fails.
  std::vector<LieElement> nilpotent_basis() const;

 private:
  SimpleLieData() = default;
  void validate() const;

  std::string name_;
  int dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::vector<Term>> brackets_;  // index i * dim + j
  std::vector<Scalar> form_;                 // index i * dim + j
  std::vector<int> root_vectors_;
  std::vector<int> cartan_;
  std::vector<LieElement> nilpotent_;
  std::vector<DenseMatrix> matrices_;
};

using LieDataPtr = std::shared_ptr<const SimpleLieData>;

/// "sl2" / "sl3" built-ins.
LieDataPtr builtin_algebra(std::string_view name);

}  // namespace toroidal
