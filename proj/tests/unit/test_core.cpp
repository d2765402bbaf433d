#include <doctest.h>

#include "generators.hpp"
#include "toroidal/core/dense.hpp"
#include "toroidal/core/json.hpp"
#include "toroidal/core/laurent_poly.hpp"
#include "toroidal/core/multi_index.hpp"
#include "toroidal/core/scalar.hpp"
#include "toroidal/error.hpp"

using namespace toroidal;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::InvalidArgument;
}

// Direct evaluation of Σ c_e x^e by repeated multiplication.
Scalar eval_naive(const LaurentPoly& p, const Scalar& x) {
  Scalar out;
  for (const auto& [e, c] : p.terms()) {
    Scalar m(1);
    for (int k = 0; k < std::abs(e); ++k) m *= x;
    out += c * (e < 0 ? m.inverse() : m);
  }
  return out;
}

}  // namespace

TEST_CASE("scalars parse, normalise and print exactly") {
  CHECK(Scalar::parse("6/4") == Scalar(3, 2));
  CHECK(Scalar::parse("-2") == Scalar(-2));
  CHECK(Scalar(3, -6).str() == "-1/2");
  CHECK(Scalar(4, 2).str() == "2");
  CHECK(code_of([] { (void)Scalar::parse("1/0"); }) == Errc::DivisionByZero);
  CHECK(code_of([] { (void)Scalar::parse("abc"); }) == Errc::ParseError);
  CHECK(code_of([] { (void)Scalar().inverse(); }) == Errc::DivisionByZero);
  CHECK(Scalar(2, 3).pow(-2) == Scalar(9, 4));
  CHECK(binomial(6, 2) == Scalar(15));
  CHECK(binomial(-1, 3) == Scalar(-1));
  CHECK(factorial(5) == Scalar(120));
}

TEST_CASE("scalar field axioms on seeded samples") {
  testgen::Gen gen(11);
  for (int t = 0; t < 200; ++t) {
    const auto a = gen.rational(), b = gen.rational(), c = gen.nonzero_rational();
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a / c) * c == a);
    CHECK(a - a == Scalar());
    CHECK(Scalar::parse(a.str()) == a);
  }
}

TEST_CASE("multi-index arithmetic checks ranks") {
  const MultiIndex a{1, -2}, b{3, 4};
  CHECK(a + b == MultiIndex{4, 2});
  CHECK(-a == MultiIndex{-1, 2});
  CHECK(MultiIndex::unit(3, 2) == MultiIndex{0, 1, 0});
  CHECK(code_of([&] { (void)(a + MultiIndex{1}); }) == Errc::RankMismatch);
}

TEST_CASE("laurent polynomial ring laws and evaluation") {
  testgen::Gen gen(23);
  for (int t = 0; t < 100; ++t) {
    const auto p = gen.laurent(-3, 3), q = gen.laurent(-3, 3), s = gen.laurent(-2, 2);
    CHECK(p * (q + s) == p * q + p * s);
    CHECK((p * q) * s == p * (q * s));
    const auto x = gen.nonzero_rational();
    CHECK((p * q).eval(x) == eval_naive(p, x) * eval_naive(q, x));
    CHECK(p.shifted(2) == p * LaurentPoly::monomial(2));
  }
}

TEST_CASE("division with remainder reconstructs the dividend") {
  testgen::Gen gen(5);
  for (int t = 0; t < 100; ++t) {
    const auto a = gen.laurent(0, 6);
    const auto b = gen.nonzero_poly(3);
    const auto [quot, rem] = LaurentPoly::divmod(a, b);
    CHECK(quot * b + rem == a);
    CHECK((rem.is_zero() || rem.degree() < b.degree()));
  }
  CHECK(code_of([] { (void)LaurentPoly::divmod(LaurentPoly::constant(1), LaurentPoly()); }) == Errc::EmptyPolynomial);
}

TEST_CASE("gcd of products with a shared factor") {
  const std::vector<Scalar> r1 = {1, 2, 3}, r2 = {2, 3, -5};
  const auto g = LaurentPoly::gcd(LaurentPoly::from_roots(r1), LaurentPoly::from_roots(r2));
  const std::vector<Scalar> shared = {2, 3};
  CHECK(g == LaurentPoly::from_roots(shared));
}

TEST_CASE("from_roots vanishes exactly at its roots") {
  testgen::Gen gen(8);
  for (int t = 0; t < 50; ++t) {
    std::vector<Scalar> roots;
    for (int k = gen.integer(1, 4); k > 0; --k) roots.push_back(gen.rational());
    const auto p = LaurentPoly::from_roots(roots);
    CHECK(p.degree() == static_cast<int>(roots.size()));
    CHECK(p.leading_coeff() == Scalar(1));
    for (const auto& z : roots) CHECK(p.eval(z).is_zero());
  }
}

TEST_CASE("expand_inverse times the polynomial is 1 up to the window") {
  testgen::Gen gen(31);
  for (int t = 0; t < 50; ++t) {
    auto q = gen.laurent(1, 4);
    q += LaurentPoly::constant(gen.nonzero_rational());
    const int w = gen.integer(0, 8);
    const auto inv = expand_inverse(q, w);
    const auto prod = inv.times_mod(q);
    CHECK(prod[0] == Scalar(1));
    for (int i = 1; i <= w; ++i) CHECK(prod[i].is_zero());
  }
  // 1/(1-x) = 1 + x + x^2 + ...
  const auto geo = expand_inverse(LaurentPoly(LaurentPoly::Terms{{0, Scalar(1)}, {1, Scalar(-1)}}), 4);
  for (int i = 0; i <= 4; ++i) CHECK(geo[i] == Scalar(1));
  CHECK(code_of([] { (void)expand_inverse(LaurentPoly::monomial(1), 3); }) == Errc::ConstantTermZero);
}

TEST_CASE("monomial factor, radical and multiplicity-freeness") {
  const std::vector<Scalar> roots = {2, 2, -1, 0, 0};
  const auto p = LaurentPoly::from_roots(roots);
  const auto split = strip_monomial_factor(p);
  CHECK(split.shift == 2);
  CHECK(split.q == LaurentPoly::from_roots(std::vector<Scalar>{2, 2, -1}));
  CHECK(nonzero_root_radical(p) == LaurentPoly::from_roots(std::vector<Scalar>{2, -1}));
  CHECK_FALSE(poly_roots_multiplicity_free(p));
  // a repeated zero root does not count: only nonzero roots must be simple
  CHECK(poly_roots_multiplicity_free(LaurentPoly::from_roots(std::vector<Scalar>{0, 0, 3, 4})));
  CHECK(nonzero_root_radical(LaurentPoly::monomial(3)) == LaurentPoly::constant(1));
}

TEST_CASE("dense inverse and solve agree with multiplication") {
  testgen::Gen gen(2);
  int solved = 0;
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 4));
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = gen.rational(4, 3);
    std::vector<Scalar> b(n);
    for (auto& x : b) x = gen.rational();
    const auto inv = inverse(m);
    if (!inv) {
      CHECK(rank(m) < n);
      continue;
    }
    ++solved;
    CHECK(m * *inv == DenseMatrix::identity(n));
    const auto x = solve(m, b);
    REQUIRE(x);
    for (std::size_t i = 0; i < n; ++i) {
      Scalar row;
      for (std::size_t j = 0; j < n; ++j) row += m(i, j) * (*x)[j];
      CHECK(row == b[i]);
    }
  }
  CHECK(solved > 20);
}

TEST_CASE("json round trip of scalars and polynomials") {
  testgen::Gen gen(3);
  for (int t = 0; t < 30; ++t) {
    const auto p = gen.laurent(-4, 4);
    const json j = p;
    CHECK(j.get<LaurentPoly>() == p);
  }
  CHECK(code_of([] { (void)json::parse(R"({"1": "x"})").get<LaurentPoly>(); }) == Errc::InvalidDescriptor);
}
