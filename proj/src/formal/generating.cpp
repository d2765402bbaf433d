#include "toroidal/formal/generating.hpp"

#include <algorithm>

#include "toroidal/error.hpp"

namespace toroidal {

namespace {

int lower_floor(int floor, int drop) { return floor == kVanishingBound ? kVanishingBound : floor - drop; }

}  // namespace

GeneratingSeries::GeneratingSeries(int rank, Coeff coeff, std::optional<int> x0_floor,
                                   std::optional<TruncationCertificate> certificate)
    : rank_(rank), coeff_(std::move(coeff)), x0_floor_(x0_floor), certificate_(std::move(certificate)) {
  if (certificate_ && certificate_->p0.is_zero()) throw Error(Errc::EmptyPolynomial, "certificate polynomial is zero");
}

GeneratingSeries GeneratingSeries::of_generator(const Module& W, int a, const ModuleVector& w,
                                                const std::optional<LaurentPoly>& p0) {
  const int r = W.rank();
  W.algebra().validate(LoopKey{a, 0, MultiIndex::zero(r)});
  const Module* mod = &W;
  Coeff coeff = [mod, a, w](int n0, const MultiIndex& n) { return mod->apply(LoopKey{a, n0, n}, w); };
  const auto floor = W.vector_restriction_bound(a, MultiIndex::zero(r), w);
  std::optional<TruncationCertificate> cert;
  if (p0) {
    if (p0->is_zero()) throw Error(Errc::EmptyPolynomial, "p0 is zero");
    if (auto F = W.vector_restricted_part_bound(w)) cert = TruncationCertificate{*p0, lower_floor(*F, p0->low_degree())};
  }
  return GeneratingSeries(r, std::move(coeff), floor, std::move(cert));
}

GeneratingSeries GeneratingSeries::of_k0(const Module& W, const ModuleVector& w) {
  const Module* mod = &W;
  Coeff coeff = [mod, w](int n0, const MultiIndex& n) {
    return n0 == -1 ? mod->apply(K0Key{n}, w) : ModuleVector();
  };
  return GeneratingSeries(W.rank(), std::move(coeff), -1);
}

ModuleVector GeneratingSeries::operator()(int n0, const MultiIndex& n) const {
  if (n.rank() != rank_) throw Error(Errc::RankMismatch, "series index " + n.str());
  return coeff_(n0, n);
}

std::optional<int> GeneratingSeries::truncation_floor(const LaurentPoly& p0) const {
  if (p0.is_zero()) throw Error(Errc::EmptyPolynomial, "p0 is zero");
  if (x0_floor_) return lower_floor(*x0_floor_, p0.low_degree());
  if (!certificate_) return std::nullopt;
  // p0 = t · g with g a Laurent polynomial: compare after stripping monomials
  const auto sp = strip_monomial_factor(p0);
  const auto st = strip_monomial_factor(certificate_->p0);
  if (!LaurentPoly::divmod(sp.q, st.q).second.is_zero()) return std::nullopt;
  return lower_floor(certificate_->floor, sp.shift - st.shift);
}

GeneratingSeries GeneratingSeries::operator+(const GeneratingSeries& rhs) const {
  if (rhs.rank_ != rank_) throw Error(Errc::RankMismatch, "series ranks differ");
  std::optional<int> floor;
  if (x0_floor_ && rhs.x0_floor_) floor = std::max(*x0_floor_, *rhs.x0_floor_);
  auto a = coeff_;
  auto b = rhs.coeff_;
  return GeneratingSeries(rank_, [a, b](int n0, const MultiIndex& n) { return a(n0, n) + b(n0, n); }, floor);
}

GeneratingSeries GeneratingSeries::operator-(const GeneratingSeries& rhs) const { return *this + rhs.scaled(-1); }

GeneratingSeries GeneratingSeries::scaled(const Scalar& c) const {
  auto a = coeff_;
  auto cert = certificate_;
  return GeneratingSeries(rank_, [a, c](int n0, const MultiIndex& n) { return c * a(n0, n); },
                          c.is_zero() ? std::optional<int>(kVanishingBound) : x0_floor_, cert);
}

GeneratingSeries GeneratingSeries::times_x0_poly(const LaurentPoly& p) const {
  if (p.is_zero()) return GeneratingSeries(rank_, [](int, const MultiIndex&) { return ModuleVector(); }, kVanishingBound);
  auto a = coeff_;
  std::optional<int> floor;
  if (x0_floor_) floor = lower_floor(*x0_floor_, p.low_degree());
  std::optional<TruncationCertificate> cert;
  if (certificate_) cert = TruncationCertificate{certificate_->p0, lower_floor(certificate_->floor, p.low_degree())};
  return GeneratingSeries(rank_, [a, p](int n0, const MultiIndex& n) {
    ModuleVector out;
    for (const auto& [e, c] : p.terms()) out.add_scaled(a(n0 + e, n), c);
    return out;
  }, floor, cert);
}

GeneratingSeries GeneratingSeries::times_xi_poly(int i, const LaurentPoly& p) const {
  if (i < 1 || i > rank_) throw Error(Errc::IndexOutOfRange, "variable x" + std::to_string(i));
  auto a = coeff_;
  return GeneratingSeries(rank_, [a, p, i](int n0, const MultiIndex& n) {
    ModuleVector out;
    for (const auto& [e, c] : p.terms()) {
      MultiIndex m = n;
      m[i - 1] += e;
      out.add_scaled(a(n0, m), c);
    }
    return out;
  }, x0_floor_, certificate_);
}

GeneratingSeries GeneratingSeries::with_certificate(TruncationCertificate c) const {
  return GeneratingSeries(rank_, coeff_, x0_floor_, std::move(c));
}

PsiExpansion psi_expansion(const GeneratingSeries& alpha, const LaurentPoly& p0, int n0) {
  if (p0.is_zero()) throw Error(Errc::EmptyPolynomial, "p0 is zero");
  const auto G = alpha.truncation_floor(p0);
  if (!G) {
    throw Error(Errc::NoTruncationBound, "no x0 bound certifies that p0(x0)·α is lower-truncated for p0 = " + p0.str());
  }
  const auto split = strip_monomial_factor(p0);
  PsiExpansion out;
  if (*G == kVanishingBound) return out;
  out.L = *G + split.shift - n0;
  if (out.L < 0) return out;
  const auto inv = expand_inverse(split.q, out.L);
  out.l = out.L + split.q.degree();
  out.beta.assign(static_cast<std::size_t>(out.l) + 1, Scalar(0));
  for (int i = 0; i <= out.L; ++i) {
    if (inv[i].is_zero()) continue;
    for (const auto& [e, c] : split.q.terms()) out.beta[static_cast<std::size_t>(i + e)] += inv[i] * c;
  }
  return out;
}

ModuleVector psi_project(const GeneratingSeries& alpha, const LaurentPoly& p0, int n0, const MultiIndex& n) {
  const auto ex = psi_expansion(alpha, p0, n0);
  ModuleVector out;
  for (std::size_t m = 0; m < ex.beta.size(); ++m) {
    if (!ex.beta[m].is_zero()) out.add_scaled(alpha(n0 + static_cast<int>(m), n), ex.beta[m]);
  }
  return out;
}

GeneratingSeries psi_series(const GeneratingSeries& alpha, const LaurentPoly& p0) {
  const auto G = alpha.truncation_floor(p0);
  if (!G) {
    throw Error(Errc::NoTruncationBound, "no x0 bound certifies that p0(x0)·α is lower-truncated for p0 = " + p0.str());
  }
  const int floor = lower_floor(*G, -p0.low_degree());
  return GeneratingSeries(alpha.rank(), [alpha, p0](int n0, const MultiIndex& n) { return psi_project(alpha, p0, n0, n); },
                          floor);
}

std::pair<GeneratingSeries, GeneratingSeries> decompose_series(const GeneratingSeries& alpha, const LaurentPoly& p0) {
  auto tilde = psi_series(alpha, p0);
  auto a = alpha;
  auto t = tilde;
  GeneratingSeries check(alpha.rank(), [a, t](int n0, const MultiIndex& n) { return a(n0, n) - t(n0, n); }, std::nullopt,
                         TruncationCertificate{p0, kVanishingBound});
  return {std::move(tilde), std::move(check)};
}

}  // namespace toroidal
