#include "toroidal/modules/finite_rep.hpp"

#include "toroidal/error.hpp"

namespace toroidal {

FiniteRep::FiniteRep(LieDataPtr lie, std::string name, std::vector<DenseMatrix> matrices)
    : lie_(std::move(lie)), name_(std::move(name)), matrices_(std::move(matrices)) {
  const int d = lie_->dimension();
  if (static_cast<int>(matrices_.size()) != d) {
    throw Error(Errc::InvalidArgument, "representation needs one matrix per basis element of " + lie_->name());
  }
  dim_ = matrices_.empty() ? 0 : matrices_[0].rows();
  if (dim_ == 0) throw Error(Errc::InvalidArgument, "representation must be nonzero");
  for (const auto& m : matrices_) {
    if (m.rows() != dim_ || m.cols() != dim_) throw Error(Errc::InvalidArgument, "representation matrices must be square");
  }
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      DenseMatrix rhs(dim_, dim_);
      for (const auto& t : lie_->bracket_basis(i, j)) rhs = rhs + matrices_[static_cast<std::size_t>(t.index)] * t.coeff;
      const auto& a = matrices_[static_cast<std::size_t>(i)];
      const auto& b = matrices_[static_cast<std::size_t>(j)];
      if (!(a * b - b * a == rhs)) {
        throw Error(Errc::InvalidArgument, name_ + " is not a representation: fails on (" + lie_->label(i) + "," +
                                               lie_->label(j) + ")");
      }
    }
  }
  columns_.resize(static_cast<std::size_t>(d) * dim_);
  for (int a = 0; a < d; ++a) {
    for (std::size_t k = 0; k < dim_; ++k) {
      auto& col = columns_[static_cast<std::size_t>(a) * dim_ + k];
      for (std::size_t row = 0; row < dim_; ++row) {
        const Scalar& v = matrices_[static_cast<std::size_t>(a)](row, k);
        if (!v.is_zero()) col.push_back({row, v});
      }
    }
  }
  weights_.resize(dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    std::vector<Scalar> w;
    bool diagonal = true;
    for (int h : lie_->cartan()) {
      const auto& col = column(h, k);
      if (col.empty()) {
        w.emplace_back(0);
      } else if (col.size() == 1 && col[0].row == k) {
        w.push_back(col[0].value);
      } else {
        diagonal = false;
        break;
      }
    }
    if (diagonal) weights_[k] = std::move(w);
  }
}

FiniteRep FiniteRep::sl2_irrep(int m) {
  if (m < 0) throw Error(Errc::InvalidArgument, "highest weight must be non-negative");
  const auto n = static_cast<std::size_t>(m) + 1;
  DenseMatrix e(n, n), f(n, n), h(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const long kk = static_cast<long>(k);
    h(k, k) = Scalar(m - 2 * kk);
    if (k + 1 < n) f(k + 1, k) = 1;
    if (k > 0) e(k - 1, k) = Scalar(kk * (m - kk + 1));
  }
  return FiniteRep(builtin_algebra("sl2"), "V(" + std::to_string(m) + ")", {e, f, h});
}

FiniteRep FiniteRep::defining(LieDataPtr lie) {
  if (lie->defining_matrices().empty()) {
    throw Error(Errc::InvalidArgument, lie->name() + " was not built from matrices; no defining representation");
  }
  auto mats = lie->defining_matrices();
  return FiniteRep(std::move(lie), "defining", std::move(mats));
}

FiniteRep FiniteRep::adjoint(LieDataPtr lie) {
  std::vector<DenseMatrix> mats;
  for (int i = 0; i < lie->dimension(); ++i) mats.push_back(lie->ad(LieElement::basis(lie->dimension(), i)));
  return FiniteRep(std::move(lie), "adjoint", std::move(mats));
}

FiniteRep FiniteRep::trivial(LieDataPtr lie) {
  std::vector<DenseMatrix> mats(static_cast<std::size_t>(lie->dimension()), DenseMatrix(1, 1));
  return FiniteRep(std::move(lie), "trivial", std::move(mats));
}

std::string FiniteRep::label(std::size_t k) const {
  if (dim_ == 1) {
    bool trivial = true;
    for (const auto& m : matrices_) trivial = trivial && m.is_zero();
    if (trivial) return "vac";
  }
  return "v" + std::to_string(k);
}

}  // namespace toroidal
