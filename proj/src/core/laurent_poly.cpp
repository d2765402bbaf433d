#include "toroidal/core/laurent_poly.hpp"

#include "toroidal/error.hpp"

namespace toroidal {

namespace {

void require_nonzero(const LaurentPoly& p, const char* what) {
  if (p.is_zero()) throw Error(Errc::EmptyPolynomial, what);
}

}  // namespace

LaurentPoly::LaurentPoly(Terms terms) {
  for (auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(int exponent, const Scalar& c) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

LaurentPoly LaurentPoly::linear(const Scalar& root) { return monomial(1) - constant(root); }

LaurentPoly LaurentPoly::from_roots(std::span<const Scalar> roots) {
  LaurentPoly p = constant(1);
  for (const auto& r : roots) p *= linear(r);
  return p;
}

void LaurentPoly::add_term(int exponent, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool LaurentPoly::is_polynomial() const { return terms_.empty() || terms_.begin()->first >= 0; }

int LaurentPoly::degree() const {
  require_nonzero(*this, "degree of the zero polynomial");
  return terms_.rbegin()->first;
}

int LaurentPoly::low_degree() const {
  require_nonzero(*this, "low degree of the zero polynomial");
  return terms_.begin()->first;
}

Scalar LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar LaurentPoly::leading_coeff() const {
  require_nonzero(*this, "leading coefficient of the zero polynomial");
  return terms_.rbegin()->second;
}

Scalar LaurentPoly::eval(const Scalar& x) const {
  Scalar acc = 0;
  for (const auto& [e, c] : terms_) acc += c * x.pow(e);
  return acc;
}

LaurentPoly LaurentPoly::derivative() const {
  LaurentPoly d;
  for (const auto& [e, c] : terms_) d.add_term(e - 1, c * Scalar(e));
  return d;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

LaurentPoly LaurentPoly::monic() const { return *this * leading_coeff().inverse(); }

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly out = constant(1);
  for (unsigned i = 0; i < k; ++i) out *= *this;
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  LaurentPoly out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : rhs.terms_) out.add_term(e1 + e2, c1 * c2);
  }
  terms_ = std::move(out.terms_);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Scalar& rhs) {
  if (rhs.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= rhs;
  return *this;
}

std::pair<LaurentPoly, LaurentPoly> LaurentPoly::divmod(const LaurentPoly& a, const LaurentPoly& b) {
  require_nonzero(b, "division by the zero polynomial");
  if (!a.is_polynomial() || !b.is_polynomial()) {
    throw Error(Errc::InvalidArgument, "divmod needs ordinary polynomials");
  }
  LaurentPoly quot;
  LaurentPoly rem = a;
  const int db = b.degree();
  const Scalar lb = b.leading_coeff();
  while (!rem.is_zero() && rem.degree() >= db) {
    const int shift = rem.degree() - db;
    const Scalar factor = rem.leading_coeff() / lb;
    quot.add_term(shift, factor);
    rem -= b.shifted(shift) * factor;
  }
  return {quot, rem};
}

LaurentPoly LaurentPoly::gcd(LaurentPoly a, LaurentPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string coeff = c.str();
    if (!s.empty()) {
      if (c.sign() < 0) {
        s += " - ";
        coeff = (-c).str();
      } else {
        s += " + ";
      }
    }
    if (e == 0) {
      s += coeff;
      continue;
    }
    if (coeff == "-1" && s.empty()) s += "-";
    else if (coeff != "1") s += (coeff.find('/') != std::string::npos ? "(" + coeff + ")" : coeff) + "*";
    s += e == 1 ? std::string("x") : "x^" + std::to_string(e);
  }
  return s;
}

TruncatedPowerSeries::TruncatedPowerSeries(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(Errc::InvalidArgument, "power series needs window >= 0");
}

TruncatedPowerSeries TruncatedPowerSeries::times_mod(const LaurentPoly& p) const {
  if (!p.is_polynomial()) throw Error(Errc::InvalidArgument, "times_mod needs an ordinary polynomial");
  std::vector<Scalar> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (const auto& [e, c] : p.terms()) {
      const std::size_t k = i + static_cast<std::size_t>(e);
      if (k < out.size()) out[k] += coeffs_[i] * c;
    }
  }
  return TruncatedPowerSeries(std::move(out));
}

TruncatedPowerSeries expand_inverse(const LaurentPoly& p, int window) {
  if (p.is_zero()) throw Error(Errc::EmptyPolynomial, "expand_inverse of the zero polynomial");
  if (window < 0) throw Error(Errc::InvalidArgument, "expand_inverse window must be >= 0");
  if (!p.is_polynomial()) throw Error(Errc::InvalidArgument, "expand_inverse needs no negative exponents");
  const Scalar c0 = p.coeff(0);
  if (c0.is_zero()) throw Error(Errc::ConstantTermZero, "p(0) = 0 in " + p.str());

  // q_k = -(1/c0) * sum_{e=1..k} c_e q_{k-e}, q_0 = 1/c0
  const Scalar inv = c0.inverse();
  std::vector<Scalar> q(static_cast<std::size_t>(window) + 1);
  q[0] = inv;
  for (int k = 1; k <= window; ++k) {
    Scalar acc = 0;
    for (const auto& [e, c] : p.terms()) {
      if (e == 0) continue;
      if (e > k) break;
      acc += c * q[static_cast<std::size_t>(k - e)];
    }
    q[static_cast<std::size_t>(k)] = -acc * inv;
  }
  return TruncatedPowerSeries(std::move(q));
}

MonomialSplit strip_monomial_factor(const LaurentPoly& p) {
  if (p.is_zero()) throw Error(Errc::EmptyPolynomial, "strip_monomial_factor of the zero polynomial");
  const int shift = p.low_degree();
  return {shift, p.shifted(-shift)};
}

bool poly_roots_multiplicity_free(const LaurentPoly& p) {
  const auto q = strip_monomial_factor(p).q;
  return LaurentPoly::gcd(q, q.derivative()).degree() == 0;
}

LaurentPoly nonzero_root_radical(const LaurentPoly& p) {
  const auto q = strip_monomial_factor(p).q;
  const auto g = LaurentPoly::gcd(q, q.derivative());
  return LaurentPoly::divmod(q, g).first.monic();
}

}  // namespace toroidal
