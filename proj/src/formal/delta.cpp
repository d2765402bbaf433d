#include "toroidal/formal/delta.hpp"

#include "toroidal/error.hpp"

namespace toroidal {

Scalar falling_factorial(long x, int j) {
  Scalar s = 1;
  for (int i = 0; i < j; ++i) s *= Scalar(x - i);
  return s;
}

DeltaExpr DeltaExpr::delta(int j) {
  if (j < 0) throw Error(Errc::InvalidArgument, "derivative order must be non-negative");
  DeltaExpr d;
  d.terms_.push_back({Scalar(1), 0, 0, j});
  return d;
}

void DeltaExpr::add(const Term& t) {
  if (t.c.is_zero()) return;
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (it->a == t.a && it->b == t.b && it->j == t.j) {
      it->c += t.c;
      if (it->c.is_zero()) terms_.erase(it);
      return;
    }
  }
  terms_.push_back(t);
}

int DeltaExpr::partner_exponent(const Term& t, int p) {
  const int k = p - t.a;
  return -k - 1 - t.j + t.b;
}

Scalar DeltaExpr::coeff(int p, int q) const {
  Scalar s = 0;
  for (const auto& t : terms_) {
    if (partner_exponent(t, p) != q) continue;
    const long k = p - t.a;
    // (∂/∂x2)^j x1^k x2^{-k-1} = falling(-k-1, j) x1^k x2^{-k-1-j}
    s += t.c * falling_factorial(-k - 1, t.j);
  }
  return s;
}

DeltaExpr DeltaExpr::times_monomial(int a, int b, const Scalar& c) const {
  DeltaExpr out;
  for (const auto& t : terms_) out.add({t.c * c, t.a + a, t.b + b, t.j});
  return out;
}

DeltaExpr DeltaExpr::times_difference_power(int m) const {
  if (m < 0) throw Error(Errc::InvalidArgument, "power must be non-negative");
  DeltaExpr out;
  for (int i = 0; i <= m; ++i) {
    const Scalar c = binomial(m, i) * Scalar((m - i) % 2 == 0 ? 1 : -1);
    const DeltaExpr shifted = times_monomial(i, m - i, c);
    for (const auto& t : shifted.terms_) out.add(t);
  }
  return out;
}

DeltaExpr DeltaExpr::derivative_x2() const {
  DeltaExpr out;
  for (const auto& t : terms_) {
    out.add({t.c * Scalar(t.b), t.a, t.b - 1, t.j});
    out.add({t.c, t.a, t.b, t.j + 1});
  }
  return out;
}

DeltaExpr DeltaExpr::operator*(const Scalar& s) const { return times_monomial(0, 0, s); }

DeltaExpr DeltaExpr::operator+(const DeltaExpr& rhs) const {
  DeltaExpr out = *this;
  for (const auto& t : rhs.terms_) out.add(t);
  return out;
}

Report delta_identity_report(int m, int n, const ExponentWindow& window) {
  if (m < 0 || n < 0) throw Error(Errc::InvalidArgument, "delta identity needs m, n >= 0");
  Report report(m > n ? "delta-vanishing" : "delta-reduction");
  report.window = window.to_json();
  report.extra = {{"m", m}, {"n", n}};
  const Range x2 = window.x.empty() ? window.x0 : window.x[0];
  const DeltaExpr lhs = DeltaExpr::delta(n).times_difference_power(m) * factorial(static_cast<unsigned>(n)).inverse();
  const DeltaExpr rhs =
      m > n ? DeltaExpr() : DeltaExpr::delta(n - m) * factorial(static_cast<unsigned>(n - m)).inverse();
  for (int p = window.x0.lo; p <= window.x0.hi; ++p) {
    for (int q = x2.lo; q <= x2.hi; ++q) {
      const Scalar l = lhs.coeff(p, q);
      const Scalar r = rhs.coeff(p, q);
      report.record(l == r, [&] { return Counterexample{"delta", "", {p, q}, l.str(), r.str()}; });
    }
  }
  return report;
}

bool delta_identity_check(int m, int n, const ExponentWindow& window) { return delta_identity_report(m, n, window).pass(); }

Report delta_substitution_report(const LaurentPoly& f, const Scalar& a, const ExponentWindow& window) {
  if (a.is_zero()) throw Error(Errc::ZeroPoint, "delta substitution point is zero");
  Report report("delta-substitution");
  report.window = window.to_json();
  report.extra = {{"f", f.str()}, {"a", a.str()}};
  const Scalar fa = f.eval(a);
  for (int k = window.x0.lo; k <= window.x0.hi; ++k) {
    // δ(a/x) = Σ_n a^n x^{-n}; the x^k coefficient of f(x)δ(a/x) is Σ_e f_e a^{e-k}
    Scalar lhs = 0;
    for (const auto& [e, c] : f.terms()) lhs += c * a.pow(e - k);
    const Scalar rhs = fa * a.pow(-k);
    report.record(lhs == rhs, [&] { return Counterexample{"delta", "", {k}, lhs.str(), rhs.str()}; });
  }
  return report;
}

bool delta_substitution_check(const LaurentPoly& f, const Scalar& a, const ExponentWindow& window) {
  return delta_substitution_report(f, a, window).pass();
}

}  // namespace toroidal
