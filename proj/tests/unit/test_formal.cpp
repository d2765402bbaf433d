#include <doctest.h>

#include "generators.hpp"
#include "toroidal/error.hpp"
#include "toroidal/formal/commutator.hpp"
#include "toroidal/formal/delta.hpp"
#include "toroidal/formal/generating.hpp"
#include "toroidal/formal/series.hpp"
#include "toroidal/formal/window.hpp"
#include "toroidal/modules/induced.hpp"

using namespace toroidal;

namespace {

// Coefficient of x1^p x2^q in (∂/∂x2)^j Σ_k x1^k x2^{-k-1}, differentiated by hand.
Scalar delta_oracle(int j, int p, int q) {
  if (q != -p - 1 - j) return Scalar();
  Scalar c(1);
  for (int i = 0; i < j; ++i) c *= Scalar(-p - 1 - i);
  return c;
}

// (x1 - x2)^m applied to the oracle by the binomial theorem.
Scalar shifted_oracle(int m, int j, int p, int q) {
  Scalar out;
  for (int t = 0; t <= m; ++t) {
    Scalar term = binomial(m, t) * ((m - t) % 2 == 0 ? Scalar(1) : Scalar(-1));
    out += term * delta_oracle(j, p - t, q - (m - t));
  }
  return out;
}

ModuleVector scalar_vec(const Scalar& c) { return ModuleVector::basis(0, c); }

// Rank-0 series on a one-dimensional space.
GeneratingSeries evaluation_like(const Scalar& z) {
  return GeneratingSeries(0, [z](int n0, const MultiIndex&) { return scalar_vec(z.pow(n0)); });
}

GeneratingSeries restricted_like(int top) {
  return GeneratingSeries(0, [top](int n0, const MultiIndex&) {
    return n0 <= top ? scalar_vec(Scalar(n0 * n0 + 1)) : ModuleVector();
  }, top);
}

}  // namespace

TEST_CASE("window parsing and mode/exponent conversion") {
  CHECK(parse_range("-4..4") == Range{-4, 4});
  CHECK(parse_range("2..2") == Range{2, 2});
  CHECK_THROWS_AS(parse_range("4..-4"), Error);
  CHECK_THROWS_AS(parse_range("1-2"), Error);
  for (int p = -5; p <= 5; ++p) CHECK(exponent_of_mode(mode_of_exponent(p)) == p);
  const auto w = ExponentWindow::uniform(Range{-1, 1}, 2);
  int count = 0;
  w.for_each([&](int, const std::vector<int>&) { ++count; });
  CHECK(count == 27);
  CHECK(ExponentWindow::from_json(w.to_json()).x == w.x);
}

TEST_CASE("delta kernel coefficients match direct differentiation") {
  for (int j = 0; j <= 3; ++j) {
    const auto d = DeltaExpr::delta(j);
    for (int p = -6; p <= 6; ++p)
      for (int q = -9; q <= 6; ++q) CHECK(d.coeff(p, q) == delta_oracle(j, p, q));
  }
}

TEST_CASE("multiplying by (x1 - x2)^m matches the binomial expansion") {
  for (int m = 0; m <= 4; ++m)
    for (int j = 0; j <= 3; ++j) {
      const auto d = DeltaExpr::delta(j).times_difference_power(m);
      for (int p = -5; p <= 5; ++p)
        for (int q = -9; q <= 5; ++q) CHECK(d.coeff(p, q) == shifted_oracle(m, j, p, q));
    }
}

TEST_CASE("delta identities and substitution hold on the window") {
  const ExponentWindow window{Range{-5, 5}, {Range{-5, 5}}};
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) CHECK(delta_identity_check(m, n, window));
  testgen::Gen gen(13);
  for (int t = 0; t < 20; ++t) {
    CHECK(delta_substitution_check(gen.laurent(-3, 3), gen.nonzero_rational(), window));
  }
  CHECK_THROWS_AS(delta_substitution_check(LaurentPoly::constant(1), Scalar(0), window), Error);
  // the identity report really compares something
  CHECK(delta_identity_report(1, 3, window).checks() > 0);
}

TEST_CASE("formal series residue and difference powers") {
  // s = Σ x^i y^j with coefficient i - 2j
  const FormalSeries<Scalar> s(2, [](const std::vector<int>& e) { return Scalar(e[0] - 2 * e[1]); });
  const auto d = s.times_difference_power(0, 1, 2);
  // (x - y)^2 s at (i, j) = s(i-2, j) - 2 s(i-1, j-1) + s(i, j-2)
  for (int i = -3; i <= 3; ++i)
    for (int j = -3; j <= 3; ++j) {
      const Scalar expected = Scalar(i - 2 - 2 * j) - Scalar(2) * Scalar(i - 1 - 2 * (j - 1)) + Scalar(i - 2 * (j - 2));
      CHECK(d.coeff({i, j}) == expected);
    }
  const auto res = s.times_monomial(0, 2).residue(0, 0);
  CHECK(res.coeff({4}) == Scalar(-3 - 8));
  const auto boxed = windowed(s, {Range{-2, 2}, Range{-2, 2}});
  CHECK_THROWS_AS(boxed.coeff({3, 0}), Error);
  CHECK_THROWS_AS(boxed.residue(0, 3), Error);
}

TEST_CASE("psi is the identity on restricted series and zero on evaluation ones") {
  const LaurentPoly p0 = LaurentPoly::linear(3);
  const auto res = restricted_like(2);
  const auto eval = evaluation_like(Scalar(3));
  const auto mixed = (res + eval).with_certificate({p0, 2});
  for (int n0 = -6; n0 <= 6; ++n0) {
    CHECK(psi_project(res, p0, n0, {}) == res(n0, {}));
    CHECK(psi_project(mixed, p0, n0, {}) == res(n0, {}));
    const auto [tilde, check] = decompose_series(mixed, p0);
    CHECK(check(n0, {}) == eval(n0, {}));
  }
  CHECK_THROWS_AS(psi_project(eval, p0, 0, {}), Error);
}

TEST_CASE("psi handles a zero root of p0 by index shifting") {
  // p0 = x0 (x0 - 3): (p0·α)(n0) = α(n0 + 2) - 3 α(n0 + 1)
  const LaurentPoly p0 = LaurentPoly::monomial(1) * LaurentPoly::linear(3);
  const auto res = restricted_like(1);
  const auto eval = evaluation_like(Scalar(3));
  const auto mixed = (res + eval).with_certificate({p0, 0});
  for (int n0 = -5; n0 <= 5; ++n0) CHECK(psi_project(mixed, p0, n0, {}) == res(n0, {}));
  const auto e = psi_expansion(mixed, p0, 0);
  CHECK(e.L == 1);
  CHECK(e.l == 2);
  CHECK(psi_expansion(mixed, p0, 5).L < 0);
}

TEST_CASE("psi coefficients from the finite formula") {
  // q0 = 1 - 2x: 1/q0 = Σ 2^i x^i, so β_m = α_m - 2 α_{m-1} truncated at L
  const LaurentPoly p0(LaurentPoly::Terms{{0, Scalar(1)}, {1, Scalar(-2)}});
  const auto alpha = restricted_like(4);
  const auto e = psi_expansion(alpha, p0, 1);
  const int G = 4 - p0.low_degree();
  CHECK(e.L == G - 1);
  REQUIRE(static_cast<int>(e.beta.size()) == e.l + 1);
  for (int m = 0; m <= e.l; ++m) {
    const Scalar am = m <= e.L ? Scalar(2).pow(m) : Scalar();
    const Scalar am1 = m >= 1 && m - 1 <= e.L ? Scalar(2).pow(m - 1) : Scalar();
    CHECK(e.beta[static_cast<std::size_t>(m)] == am - Scalar(2) * am1);
  }
}

TEST_CASE("generating series of a module generator") {
  const InducedModule W(FiniteRep::trivial(builtin_algebra("sl2")), Scalar(1), 2);
  const auto fvac = ModuleVector::basis(*W.find_label("f(-1)vac"));
  const auto alpha = GeneratingSeries::of_generator(W, 0, fvac);
  REQUIRE(alpha.x0_floor().has_value());
  CHECK(*alpha.x0_floor() == 1);
  CHECK(alpha(1, {}) == W.apply(LoopKey{0, 1, {}}, fvac));
  CHECK(alpha(3, {}).is_zero());
  const auto shifted = alpha.times_x0_poly(LaurentPoly::monomial(1));
  CHECK(shifted(0, {}) == alpha(1, {}));
}

TEST_CASE("bracket coefficients from delta kernels agree with the mode bracket") {
  const ToroidalAlgebra g(builtin_algebra("sl2"), 1);
  const ExponentWindow window{Range{-2, 2}, {Range{-2, 2}}};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const auto report = bracket_series_report(g, a, b, window);
      CHECK(report.pass());
      CHECK(report.checks() == 625);
    }
}

TEST_CASE("commutator residues on the vacuum") {
  const InducedModule W(FiniteRep::trivial(builtin_algebra("sl2")), Scalar(1), 2);
  const auto vac = ModuleVector::basis(*W.find_label("vac"));
  // Res (x0 - y0)^0: [e(0), f(m0)] vac = h(m0) vac; y0^0 is m0 = -1
  const auto r0 = commutator_residue(W, 0, 1, vac, 0);
  CHECK(r0.coeff({0}) == W.apply(LoopKey{2, -1, {}}, vac));
  // Res (x0 - y0)^1 picks out ⟨e,f⟩ K0, supported at y0^0
  const auto r1 = commutator_residue(W, 0, 1, vac, 1);
  CHECK(r1.coeff({0}) == vac);
  CHECK(r1.coeff({1}).is_zero());
  CHECK(commutator_series_check(W, 0, 1, vac, ExponentWindow{Range{-2, 2}, {}}));
}
