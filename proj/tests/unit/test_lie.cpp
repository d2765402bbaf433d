#include <doctest.h>

#include "generators.hpp"
#include "toroidal/error.hpp"
#include "toroidal/lie/simple_lie.hpp"
#include "toroidal/lie/toroidal.hpp"

using namespace toroidal;

namespace {

// sl2 as 2x2 matrices in the order e, f, h; an element is written as
// [[p, q], [r, -p]] = q e + r f + p h.
using Mat = std::array<std::array<Scalar, 2>, 2>;

Mat sl2_matrix(int i) {
  Mat m{};
  if (i == 0) m[0][1] = 1;
  if (i == 1) m[1][0] = 1;
  if (i == 2) {
    m[0][0] = 1;
    m[1][1] = -1;
  }
  return m;
}

Mat mul(const Mat& a, const Mat& b) {
  Mat c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

std::array<Scalar, 3> coords(const Mat& m) { return {m[0][1], m[1][0], m[0][0]}; }

Scalar trace_form(int a, int b) {
  const auto p = mul(sl2_matrix(a), sl2_matrix(b));
  return p[0][0] + p[1][1];
}

// Mode bracket of two loop generators computed straight from the matrices.
ToroidalElement oracle_bracket(const ToroidalAlgebra& g, const LoopKey& u, const LoopKey& v) {
  ToroidalElement out;
  const auto ab = mul(sl2_matrix(u.basis), sl2_matrix(v.basis));
  const auto ba = mul(sl2_matrix(v.basis), sl2_matrix(u.basis));
  Mat c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = ab[i][j] - ba[i][j];
  const auto x = coords(c);
  for (int k = 0; k < 3; ++k) {
    if (!x[k].is_zero()) out.add(LoopKey{k, u.n0 + v.n0, u.n + v.n}, x[k]);
  }
  const Scalar form = trace_form(u.basis, v.basis);
  if (u.n0 + v.n0 == 0 && !form.is_zero()) {
    if (u.n0 != 0) out.add(K0Key{u.n + v.n}, Scalar(u.n0) * form);
    if ((u.n + v.n).is_zero()) {
      for (int i = 1; i <= g.rank(); ++i) {
        if (u.n[i - 1] != 0) out.add(KiKey{i}, Scalar(u.n[i - 1]) * form);
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("sl2 structure constants match matrix commutators") {
  const auto lie = builtin_algebra("sl2");
  REQUIRE(lie->dimension() == 3);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      const auto br = lie->bracket(LieElement::basis(3, a), LieElement::basis(3, b));
      const auto ab = mul(sl2_matrix(a), sl2_matrix(b));
      const auto ba = mul(sl2_matrix(b), sl2_matrix(a));
      Mat c{};
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) c[i][j] = ab[i][j] - ba[i][j];
      const auto x = coords(c);
      for (int k = 0; k < 3; ++k) CHECK(br[k] == x[k]);
      CHECK(lie->form(a, b) == trace_form(a, b));
    }
  }
}

TEST_CASE("built-in algebras are Lie algebras with invariant forms") {
  for (const char* name : {"sl2", "sl3"}) {
    const auto lie = builtin_algebra(name);
    const int d = lie->dimension();
    testgen::Gen gen(17);
    auto random = [&] {
      std::vector<Scalar> c(static_cast<std::size_t>(d));
      for (auto& x : c) x = gen.rational();
      return LieElement(c);
    };
    for (int t = 0; t < 30; ++t) {
      const auto x = random(), y = random(), z = random();
      auto jac = lie->bracket(x, lie->bracket(y, z));
      jac += lie->bracket(y, lie->bracket(z, x));
      jac += lie->bracket(z, lie->bracket(x, y));
      CHECK(jac.is_zero());
      // ⟨[x,y],z⟩ = ⟨x,[y,z]⟩
      CHECK(lie->invariant_form(lie->bracket(x, y), z) == lie->invariant_form(x, lie->bracket(y, z)));
    }
    // every listed nilpotent basis element is ad-nilpotent
    for (const auto& x : lie->nilpotent_basis()) {
      auto p = lie->ad(x);
      for (int k = 1; k < 2 * d; ++k) p = p * lie->ad(x);
      CHECK(p.is_zero());
    }
  }
  CHECK_THROWS_AS(builtin_algebra("g2"), Error);
}

TEST_CASE("structure-constant tables round trip through json") {
  const auto lie = builtin_algebra("sl3");
  const auto back = SimpleLieData::from_json(lie->to_json());
  CHECK(back.dimension() == lie->dimension());
  for (int a = 0; a < lie->dimension(); ++a)
    for (int b = 0; b < lie->dimension(); ++b) {
      CHECK(back.form(a, b) == lie->form(a, b));
      CHECK(back.bracket(LieElement::basis(8, a), LieElement::basis(8, b)).coords() ==
            lie->bracket(LieElement::basis(8, a), LieElement::basis(8, b)).coords());
    }
  auto broken = lie->to_json();
  broken.erase("form");
  CHECK_THROWS_AS(SimpleLieData::from_json(broken), Error);
}

TEST_CASE("toroidal mode bracket agrees with the matrix oracle") {
  testgen::Gen gen(99);
  for (int r : {0, 1, 2}) {
    const ToroidalAlgebra g(builtin_algebra("sl2"), r);
    for (int t = 0; t < 300; ++t) {
      const LoopKey u{gen.integer(0, 2), gen.integer(-3, 3), gen.multi_index(r, -2, 2)};
      // bias towards n0 + m0 = 0 and n + m = 0 so the central terms show up
      LoopKey v{gen.integer(0, 2), gen.coin() ? -u.n0 : gen.integer(-3, 3), gen.coin() ? -u.n : gen.multi_index(r, -2, 2)};
      CHECK(g.bracket(GeneratorKey(u), GeneratorKey(v)) == oracle_bracket(g, u, v));
    }
  }
}

TEST_CASE("bracket is antisymmetric, satisfies Jacobi and has a central K part") {
  testgen::Gen gen(7);
  const ToroidalAlgebra g(builtin_algebra("sl3"), 2);
  for (int t = 0; t < 40; ++t) {
    const auto u = gen.element(g, -2, 2), v = gen.element(g, -2, 2), w = gen.element(g, -2, 2);
    CHECK(g.bracket(u, v) + g.bracket(v, u) == ToroidalElement());
    CHECK(g.jacobi_check(u, v, w));
    CHECK(g.bracket(ToroidalElement(K0Key{MultiIndex{1, -1}}), u).is_zero());
    CHECK(g.bracket(ToroidalElement(KiKey{2}), u).is_zero());
  }
}

TEST_CASE("generator keys parse and print") {
  const ToroidalAlgebra g(builtin_algebra("sl2"), 2);
  for (const char* text : {"e(1,(1,-2))", "K0((0,3))", "K2", "h(-4,(0,0))"}) {
    const auto key = g.parse_key(text);
    CHECK(g.parse_key(g.key_str(key)) == key);
  }
  CHECK(std::get<LoopKey>(g.parse_key("f(-1,(2,0))")).n0 == -1);
  CHECK_THROWS_AS(g.parse_key("x(1,(0,0))"), Error);
  CHECK_THROWS_AS(g.validate(GeneratorKey(LoopKey{0, 1, MultiIndex{1}})), Error);
  CHECK_THROWS_AS(g.validate(GeneratorKey(KiKey{3})), Error);
}
