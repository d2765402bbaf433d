#include "toroidal/core/dense.hpp"

#include <utility>

#include "toroidal/error.hpp"

namespace toroidal {

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(Errc::InvalidArgument, "matrix shape mismatch");
  DenseMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        if (!rhs(k, j).is_zero()) out(i, j) += a * rhs(k, j);
      }
    }
  }
  return out;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(Errc::InvalidArgument, "matrix shape mismatch");
  DenseMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& rhs) const { return *this + rhs * Scalar(-1); }

DenseMatrix DenseMatrix::operator*(const Scalar& s) const {
  DenseMatrix out = *this;
  for (auto& v : out.data_) v *= s;
  return out;
}

bool DenseMatrix::is_zero() const {
  for (const auto& v : data_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

Scalar DenseMatrix::trace() const {
  Scalar t = 0;
  for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
  return t;
}

namespace {

// Row-reduces m in place (optionally mirroring row operations on aug) and
// returns the pivot columns.
std::vector<std::size_t> row_reduce(DenseMatrix& m, DenseMatrix* aug) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
      if (aug) {
        for (std::size_t j = 0; j < aug->cols(); ++j) std::swap((*aug)(p, j), (*aug)(row, j));
      }
    }
    const Scalar inv = m(row, col).inverse();
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) *= inv;
    if (aug) {
      for (std::size_t j = 0; j < aug->cols(); ++j) (*aug)(row, j) *= inv;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const Scalar f = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
      if (aug) {
        for (std::size_t j = 0; j < aug->cols(); ++j) (*aug)(i, j) -= f * (*aug)(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(DenseMatrix m) { return row_reduce(m, nullptr).size(); }

std::optional<DenseMatrix> inverse(const DenseMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  DenseMatrix work = m;
  DenseMatrix inv = DenseMatrix::identity(m.rows());
  if (row_reduce(work, &inv).size() != m.rows()) return std::nullopt;
  return inv;
}

std::optional<std::vector<Scalar>> solve(const DenseMatrix& a, const std::vector<Scalar>& b) {
  if (a.rows() != a.cols() || b.size() != a.rows()) return std::nullopt;
  DenseMatrix work = a;
  DenseMatrix rhs(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  if (row_reduce(work, &rhs).size() != a.rows()) return std::nullopt;
  std::vector<Scalar> x(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) x[i] = rhs(i, 0);
  return x;
}

}  // namespace toroidal
