#include <doctest.h>

#include <array>

#include "generators.hpp"
#include "toroidal/error.hpp"
#include "toroidal/modules/checks.hpp"
#include "toroidal/modules/evaluation.hpp"
#include "toroidal/modules/finite_rep.hpp"
#include "toroidal/modules/induced.hpp"
#include "toroidal/modules/tensor.hpp"

using namespace toroidal;

namespace {

constexpr int E = 0, F = 1, H = 2;

// Matrix of e, f or h on V(m) in the basis v_0..v_m, from the standard formulas.
DenseMatrix irrep_oracle(int a, int m) {
  const auto n = static_cast<std::size_t>(m + 1);
  DenseMatrix out(n, n);
  for (int k = 0; k <= m; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    if (a == H) out(kk, kk) = m - 2 * k;
    if (a == F && k < m) out(kk + 1, kk) = 1;
    if (a == E && k > 0) out(kk - 1, kk) = k * (m - k + 1);
  }
  return out;
}

// Coefficients of Π_{n>=1} (1 - q^n)^{-dim} up to q^depth: the PBW count of
// U(g ⊗ t^{-1}C[t^{-1}]) by degree.
std::vector<std::size_t> pbw_counts(int dim, int depth) {
  std::vector<std::size_t> c(static_cast<std::size_t>(depth + 1), 0);
  c[0] = 1;
  for (int n = 1; n <= depth; ++n) {
    for (int copy = 0; copy < dim; ++copy) {
      for (int d = n; d <= depth; ++d) c[static_cast<std::size_t>(d)] += c[static_cast<std::size_t>(d - n)];
    }
  }
  return c;
}

std::size_t label_index(const Module& W, const std::string& label) {
  const auto i = W.find_label(label);
  REQUIRE_MESSAGE(i.has_value(), "no basis label ", label);
  return *i;
}

int nilpotency_oracle(const DenseMatrix& m, int max_k) {
  DenseMatrix p = m;
  for (int k = 1; k <= max_k; ++k) {
    if (p.is_zero()) return k;
    p = p * m;
  }
  return -1;
}

}  // namespace

TEST_CASE("V(m) matches the standard sl2 formulas") {
  for (int m = 0; m <= 4; ++m) {
    const auto V = FiniteRep::sl2_irrep(m);
    CHECK(V.dimension() == static_cast<std::size_t>(m + 1));
    for (int a : {E, F, H}) CHECK(V.matrix(a) == irrep_oracle(a, m));
  }
  CHECK_THROWS_AS(FiniteRep(builtin_algebra("sl2"), "bad", {irrep_oracle(E, 1), irrep_oracle(E, 1), irrep_oracle(H, 1)}),
                  Error);
}

TEST_CASE("defining and adjoint representations are homomorphisms") {
  for (const char* name : {"sl2", "sl3"}) {
    const auto lie = builtin_algebra(name);
    CHECK_NOTHROW(FiniteRep::defining(lie));
    const auto ad = FiniteRep::adjoint(lie);
    CHECK(ad.dimension() == static_cast<std::size_t>(lie->dimension()));
    CHECK(FiniteRep::trivial(lie).label(0) == "vac");
  }
}

TEST_CASE("evaluation module acts by point monomials and kills the centre") {
  const EvaluationModule W({FiniteRep::sl2_irrep(1)}, {EvalPoint({Scalar(2), Scalar(3)})});
  const auto v1 = label_index(W, "v1");
  const auto v0 = label_index(W, "v0");
  CHECK(W.act(LoopKey{E, 1, MultiIndex{1}}, v1) == ModuleVector::basis(v0, 6));
  CHECK(W.act(LoopKey{E, -2, MultiIndex{-1}}, v1) == ModuleVector::basis(v0, Scalar(1, 12)));
  CHECK(W.act(K0Key{MultiIndex{2}}, v1).is_zero());
  CHECK(W.act(KiKey{1}, v0).is_zero());
  CHECK_THROWS_AS(EvalPoint({Scalar(2), Scalar(0)}), Error);
}

TEST_CASE("evaluation tensor action is the weighted sum over slots") {
  testgen::Gen gen(4);
  const std::vector<EvalPoint> pts = {EvalPoint({Scalar(2), Scalar(-1, 2)}), EvalPoint({Scalar(3), Scalar(5)})};
  const EvaluationModule W({FiniteRep::sl2_irrep(1), FiniteRep::sl2_irrep(2)}, pts);
  CHECK(W.dimension() == 6);
  for (int t = 0; t < 40; ++t) {
    const int a = gen.integer(0, 2), n0 = gen.integer(-3, 3);
    const MultiIndex n{gen.integer(-3, 3)};
    const std::size_t i = static_cast<std::size_t>(gen.integer(0, 5));
    ModuleVector expected;
    for (std::size_t j = 0; j < 2; ++j) expected += pts[j].monomial(n0, n) * W.act_slot(LoopKey{a, 0, MultiIndex{0}}, i, j);
    CHECK(W.act(LoopKey{a, n0, n}, i) == expected);
  }
}

TEST_CASE("evaluation annihilators vanish at every point") {
  const std::vector<EvalPoint> pts = {EvalPoint({Scalar(2), Scalar(3)}), EvalPoint({Scalar(2), Scalar(-1)}),
                                      EvalPoint({Scalar(5), Scalar(3)})};
  const auto p = eval_annihilator(pts);
  const auto red = reduced_eval_annihilator(pts);
  REQUIRE(p.size() == 2);
  for (int i = 0; i <= 1; ++i) {
    CHECK(p[static_cast<std::size_t>(i)].degree() == 3);
    for (const auto& z : pts) {
      CHECK(p[static_cast<std::size_t>(i)].eval(z.z[static_cast<std::size_t>(i)]).is_zero());
      CHECK(red[static_cast<std::size_t>(i)].eval(z.z[static_cast<std::size_t>(i)]).is_zero());
    }
    CHECK(red[static_cast<std::size_t>(i)].degree() == 2);
    CHECK(poly_roots_multiplicity_free(red[static_cast<std::size_t>(i)]));
  }
}

TEST_CASE("induced module graded dimensions follow the PBW count") {
  for (int depth = 0; depth <= 4; ++depth) {
    const InducedModule W(FiniteRep::trivial(builtin_algebra("sl2")), Scalar(1), depth);
    CHECK(W.graded_dimensions() == pbw_counts(3, depth));
  }
  const InducedModule W1(FiniteRep::sl2_irrep(1), Scalar(2), 2);
  auto expected = pbw_counts(3, 2);
  for (auto& c : expected) c *= 2;
  CHECK(W1.graded_dimensions() == expected);
  const InducedModule W8(FiniteRep::trivial(builtin_algebra("sl3")), Scalar(1), 2);
  CHECK(W8.graded_dimensions() == pbw_counts(8, 2));
}

TEST_CASE("induced module commutation on the vacuum") {
  const Scalar level(3, 2);
  const InducedModule W(FiniteRep::trivial(builtin_algebra("sl2")), level, 3);
  const auto vac = label_index(W, "vac");
  const auto fvac = W.act(LoopKey{F, -1, {}}, vac);
  // e(1) f(-1) vac = h(0) vac + ⟨e,f⟩ K0 vac = level vac
  CHECK(W.apply(LoopKey{E, 1, {}}, fvac) == ModuleVector::basis(vac, level));
  // h(2) h(-2) vac = 2 ⟨h,h⟩ level vac
  CHECK(W.apply(LoopKey{H, 2, {}}, W.act(LoopKey{H, -2, {}}, vac)) == ModuleVector::basis(vac, 4 * level));
  CHECK(W.act(K0Key{{}}, vac) == ModuleVector::basis(vac, level));
  for (int n = 1; n <= 3; ++n) {
    for (int a : {E, F, H}) CHECK(W.act(LoopKey{a, n, {}}, vac).is_zero());
  }
  CHECK(W.restriction_bound(E, {}, vac) == 0);
}

TEST_CASE("truncated action projects onto the depth") {
  const InducedModule W(FiniteRep::trivial(builtin_algebra("sl2")), Scalar(1), 2);
  const auto fvac = label_index(W, "f(-1)vac");
  CHECK(W.act(LoopKey{F, -2, {}}, fvac).is_zero());
  const std::array<int, 1> one{1}, two{2};
  CHECK(within_valid_window(W, fvac, one));
  CHECK_FALSE(within_valid_window(W, fvac, two));
  CHECK_THROWS_AS(require_within_valid_window(W, ModuleVector::basis(fvac), two), Error);
}

TEST_CASE("representation property for every module constructor") {
  const auto sl2 = builtin_algebra("sl2");
  const auto induced = std::make_shared<InducedModule>(FiniteRep::sl2_irrep(1), Scalar(2), 3);
  const auto eval = std::make_shared<EvaluationModule>(std::vector<FiniteRep>{FiniteRep::sl2_irrep(1), FiniteRep::sl2_irrep(2)},
                                                       std::vector<EvalPoint>{EvalPoint({Scalar(2), Scalar(3)}), EvalPoint({Scalar(-1), Scalar(7, 2)})});
  const auto restricted = std::make_shared<RestrictedEvalModule>(
      std::vector<ModulePtr>{std::make_shared<InducedModule>(FiniteRep::trivial(sl2), Scalar(1), 2),
                             std::make_shared<InducedModule>(FiniteRep::sl2_irrep(1), Scalar(1), 1)},
      std::vector<RestrictedEvalPoint>{RestrictedEvalPoint({Scalar(2)}), RestrictedEvalPoint({Scalar(-3)})});
  const auto tensor = std::make_shared<TensorModule>(std::vector<ModulePtr>{restricted, eval});
  for (const ModulePtr& W : std::vector<ModulePtr>{induced, eval, restricted, tensor}) {
    std::vector<std::size_t> basis;
    for (std::size_t i = 0; i < W->dimension() && basis.size() < 8; ++i) basis.push_back(i);
    const auto keys = generator_window(W->algebra(), -1, 1);
    const auto report = representation_check(*W, keys, basis);
    CHECK_MESSAGE(report.pass(), W->kind());
    CHECK(report.checks() > 0);
    CHECK(weight_space_check(*W, 1));
  }
}

TEST_CASE("restricted evaluation scales the affine action") {
  const auto sl2 = builtin_algebra("sl2");
  const auto V = std::make_shared<InducedModule>(FiniteRep::trivial(sl2), Scalar(1), 2);
  const RestrictedEvalModule W({V}, {RestrictedEvalPoint({Scalar(2), Scalar(-1)})});
  const auto vac = label_index(W, "vac");
  const auto fvac = label_index(W, "f(-1)vac");
  CHECK(W.act(LoopKey{F, -1, MultiIndex{3, 1}}, vac) == ModuleVector::basis(fvac, -8));
  CHECK(W.act(K0Key{MultiIndex{1, 2}}, vac) == ModuleVector::basis(vac, 2));
  CHECK(W.act(KiKey{2}, vac).is_zero());
  CHECK_THROWS_AS(RestrictedEvalModule({V}, {RestrictedEvalPoint({Scalar(0), Scalar(1)})}), Error);
}

TEST_CASE("tensor coproduct adds the levels") {
  const auto sl2 = builtin_algebra("sl2");
  const auto a = std::make_shared<InducedModule>(FiniteRep::trivial(sl2), Scalar(1), 1);
  const auto b = std::make_shared<InducedModule>(FiniteRep::sl2_irrep(1), Scalar(2, 3), 1);
  const TensorModule T({a, b});
  CHECK(T.dimension() == a->dimension() * b->dimension());
  const auto i = T.compose({0, 0});
  CHECK(T.act(K0Key{{}}, i) == ModuleVector::basis(i, Scalar(5, 3)));
  const auto e = T.act(LoopKey{E, 0, {}}, T.compose({0, 1}));
  CHECK(e == T.act_part(LoopKey{E, 0, {}}, T.compose({0, 1}), 1));
  CHECK_THROWS_AS(TensorModule({a, std::make_shared<EvaluationModule>(std::vector<FiniteRep>{FiniteRep::sl2_irrep(1)},
                                                                       std::vector<EvalPoint>{EvalPoint({Scalar(1), Scalar(2)})})}),
                  Error);
}

TEST_CASE("nilpotency order on V(m) matches matrix powers") {
  for (int m = 0; m <= 4; ++m) {
    const EvaluationModule W({FiniteRep::sl2_irrep(m)}, {EvalPoint({Scalar(2), Scalar(3)})});
    for (int a : {E, F}) {
      int worst = 0;
      for (std::size_t i = 0; i < W.dimension(); ++i) {
        const auto k = nilpotency_check(W, a, 2, MultiIndex{-1}, ModuleVector::basis(i), m + 3);
        REQUIRE(k.has_value());
        worst = std::max(worst, *k);
      }
      CHECK(worst == nilpotency_oracle(irrep_oracle(a, m), m + 3));
      CHECK(worst == m + 1);
    }
    CHECK_THROWS_AS(nilpotency_check(W, H, 0, MultiIndex{0}, ModuleVector::basis(0), 3), Error);
  }
}

TEST_CASE("vectors parse from labels, indices and maps") {
  const EvaluationModule W({FiniteRep::sl2_irrep(1)}, {EvalPoint({Scalar(2), Scalar(3)})});
  CHECK(W.parse_vector(json("v1")) == ModuleVector::basis(1));
  CHECK(W.parse_vector(json("#0")) == ModuleVector::basis(0));
  CHECK(W.parse_vector(json::parse(R"({"v0": "1/2", "v1": 3})")) == ModuleVector::basis(0, Scalar(1, 2)) + ModuleVector::basis(1, 3));
  CHECK(W.vector_json(ModuleVector::basis(0, 6)) == json::parse(R"({"v0": "6"})"));
  CHECK_THROWS_AS(W.parse_vector(json("v7")), Error);
}
