#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toroidal/core/dense.hpp"
#include "toroidal/lie/simple_lie.hpp"

namespace toroidal {

/// Finite-dimensional g-module given by one matrix per basis element of g.
/// Construction checks [ρ(b_i), ρ(b_j)] = ρ([b_i, b_j]) exactly.
class FiniteRep {
 public:
  struct Entry {
    std::size_t row;
    Scalar value;
  };

  FiniteRep(LieDataPtr lie, std::string name, std::vector<DenseMatrix> matrices);

  /// V(m) for sl2 in the basis v_0..v_m: h v_k = (m-2k) v_k, f v_k = v_{k+1},
  /// e v_k = k(m-k+1) v_{k-1}.
  static FiniteRep sl2_irrep(int m);
  static FiniteRep defining(LieDataPtr lie);
  static FiniteRep adjoint(LieDataPtr lie);
  static FiniteRep trivial(LieDataPtr lie);

  const LieDataPtr& lie() const { return lie_; }
  const std::string& name() const { return name_; }
  std::size_t dimension() const { return dim_; }
  const DenseMatrix& matrix(int a) const { return matrices_.at(static_cast<std::size_t>(a)); }
  /// Nonzero entries of column k of ρ(b_a).
  const std::vector<Entry>& column(int a, std::size_t k) const { return columns_[static_cast<std::size_t>(a) * dim_ + k]; }
  /// Cartan eigenvalues of basis vector k, if it is a simultaneous eigenvector.
  const std::optional<std::vector<Scalar>>& weight(std::size_t k) const { return weights_[k]; }
  /// Basis label: "vac" for the trivial one-dimensional module, otherwise v0, v1, ...
  std::string label(std::size_t k) const;

 private:
  LieDataPtr lie_;
  std::string name_;
  std::size_t dim_;
  std::vector<DenseMatrix> matrices_;
  std::vector<std::vector<Entry>> columns_;
  std::vector<std::optional<std::vector<Scalar>>> weights_;
};

}  // namespace toroidal
