#pragma once

#include <optional>
#include <vector>

#include "toroidal/core/scalar.hpp"

namespace toroidal {

/// Row-major dense matrix of exact scalars. Only used for small systems.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  DenseMatrix operator*(const DenseMatrix& rhs) const;
  DenseMatrix operator+(const DenseMatrix& rhs) const;
  DenseMatrix operator-(const DenseMatrix& rhs) const;
  DenseMatrix operator*(const Scalar& s) const;
  bool is_zero() const;
  Scalar trace() const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

std::size_t rank(DenseMatrix m);

/// Gauss-Jordan inverse; nullopt when the matrix is singular.
std::optional<DenseMatrix> inverse(const DenseMatrix& m);

/// Solves A x = b; nullopt when A is singular or not square.
std::optional<std::vector<Scalar>> solve(const DenseMatrix& a, const std::vector<Scalar>& b);

}  // namespace toroidal
