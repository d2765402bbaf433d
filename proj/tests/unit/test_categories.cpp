#include <doctest.h>

#include "generators.hpp"
#include "toroidal/categories/categories.hpp"
#include "toroidal/error.hpp"
#include "toroidal/modules/checks.hpp"
#include "toroidal/modules/evaluation.hpp"
#include "toroidal/modules/induced.hpp"
#include "toroidal/suites.hpp"

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

std::vector<ModuleVector> all_basis(const Module& W, std::size_t cap = 1000) {
  std::vector<ModuleVector> out;
  for (std::size_t i = 0; i < W.dimension() && i < cap; ++i) out.push_back(ModuleVector::basis(i));
  return out;
}

// (induced V(0), level 1, depth d, point z1) ⊗ eval V(1) at (z0', z1').
struct SmallMixed {
  ModulePtr module;
  CategoryWitness witness;
};

SmallMixed small_mixed(int depth) {
  const auto sl2 = builtin_algebra("sl2");
  auto R = std::make_shared<RestrictedEvalModule>(
      std::vector<ModulePtr>{std::make_shared<InducedModule>(FiniteRep::trivial(sl2), Scalar(1), depth)},
      std::vector<RestrictedEvalPoint>{RestrictedEvalPoint({Scalar(2)})});
  auto Ev = std::make_shared<EvaluationModule>(std::vector<FiniteRep>{FiniteRep::sl2_irrep(1)},
                                               std::vector<EvalPoint>{EvalPoint({Scalar(3), Scalar(5)})});
  auto T = std::make_shared<TensorModule>(std::vector<ModulePtr>{R, Ev});
  CategoryWitness w{CategoryTag::C_tau, LaurentPoly::linear(3), {LaurentPoly::linear(2) * LaurentPoly::linear(5)}};
  return {T, w};
}

}  // namespace

TEST_CASE("category tags and witnesses round trip through json") {
  for (auto tag : {CategoryTag::E_tau, CategoryTag::E_tau_prime, CategoryTag::R_tilde, CategoryTag::C_tau}) {
    CHECK(parse_tag(tag_name(tag)) == tag);
  }
  CHECK(code_of([] { (void)parse_tag("D_tau"); }) == Errc::ParseError);
  const CategoryWitness w{CategoryTag::C_tau, LaurentPoly::linear(3), {LaurentPoly::linear(Scalar(1, 2))}};
  const auto back = CategoryWitness::from_json(w.to_json());
  CHECK(back.tag == w.tag);
  CHECK(back.p0 == w.p0);
  CHECK(back.p == w.p);
  CHECK_NOTHROW(w.validate(1));
  CHECK(code_of([&] { w.validate(2); }) == Errc::InvalidWitness);
  const CategoryWitness zero{CategoryTag::C_tau, LaurentPoly(), {LaurentPoly::linear(1)}};
  CHECK(code_of([&] { zero.validate(1); }) == Errc::EmptyPolynomial);
  const CategoryWitness no_p0{CategoryTag::E_tau, std::nullopt, {LaurentPoly::linear(1)}};
  CHECK(code_of([&] { no_p0.validate(1); }) == Errc::InvalidWitness);
  CHECK_THROWS_AS(CategoryWitness::from_json(json::parse(R"({"category": "C_tau", "p": "x"})")), Error);
}

TEST_CASE("evaluation modules satisfy their annihilator witnesses") {
  const std::vector<EvalPoint> pts = {EvalPoint({Scalar(2), Scalar(3)}), EvalPoint({Scalar(-1), Scalar(3)})};
  const EvaluationModule W({FiniteRep::sl2_irrep(1), FiniteRep::sl2_irrep(2)}, pts);
  const auto p = eval_annihilator(pts);
  const auto window = ExponentWindow::uniform(Range{-3, 3}, 1);
  const CategoryWitness unreduced{CategoryTag::E_tau, p[0], {p[1]}};
  CHECK(check_membership(W, unreduced, window, all_basis(W)).pass());
  // the primed tag needs simple roots: (x - 3)^2 fails, the reduced polynomial passes
  const CategoryWitness primed{CategoryTag::E_tau_prime, p[0], {p[1]}};
  CHECK_FALSE(check_membership(W, primed, window, all_basis(W)).pass());
  const auto red = reduced_eval_annihilator(pts);
  CHECK(check_membership(W, CategoryWitness{CategoryTag::E_tau_prime, red[0], {red[1]}}, window, all_basis(W)).pass());
  // dropping a root of p0 breaks annihilation
  const CategoryWitness wrong{CategoryTag::E_tau, LaurentPoly::linear(2), {p[1]}};
  const auto report = check_membership(W, wrong, window, all_basis(W));
  CHECK_FALSE(report.pass());
  CHECK_FALSE(report.counterexamples().empty());
}

TEST_CASE("restricted modules are not evaluation modules") {
  const auto mixed = small_mixed(2);
  const auto window = ExponentWindow::uniform(Range{-2, 2}, 1);
  const auto vectors = all_basis(*mixed.module, 12);
  CHECK(check_membership(*mixed.module, mixed.witness, window, vectors).pass());
  auto as_eval = mixed.witness;
  as_eval.tag = CategoryTag::E_tau_prime;
  CHECK_FALSE(check_membership(*mixed.module, as_eval, window, vectors).pass());
  auto as_restricted = mixed.witness;
  as_restricted.tag = CategoryTag::R_tilde;
  as_restricted.p0.reset();
  CHECK_FALSE(check_membership(*mixed.module, as_restricted, window, vectors).pass());
}

TEST_CASE("splitting a mixed tensor recovers the factor actions") {
  const auto mixed = small_mixed(2);
  const auto d = decompose_pi(mixed.module, mixed.witness);
  const auto& T = static_cast<const TensorModule&>(*mixed.module);
  const auto keys = generator_window(T.algebra(), -2, 2);
  const auto vectors = low_degree_basis(T, 1);
  int compared = 0;
  for (const auto& key : keys) {
    for (const auto& w : vectors) {
      const std::array<int, 1> step{lowering(key)};
      if (!within_valid_window(T, w, step)) continue;
      ModuleVector R, E;
      for (const auto& [i, c] : w.terms()) {
        if (!std::holds_alternative<KiKey>(key)) R.add_scaled(T.act_part(key, i, 0), c);
        if (!is_central(key)) E.add_scaled(T.act_part(key, i, 1), c);
      }
      CHECK(d.pi_R->apply(key, w) == R);
      CHECK(d.pi_E->apply(key, w) == E);
      ++compared;
    }
  }
  CHECK(compared > 100);
  CHECK(verify_commuting_actions(d, keys, vectors));
  CHECK(d.witness_E.p0 == LaurentPoly::linear(3));
}

TEST_CASE("splitting rejects a witness the module does not satisfy") {
  const auto mixed = small_mixed(1);
  auto bad = mixed.witness;
  bad.p0 = LaurentPoly::linear(4);
  CHECK(code_of([&] { (void)decompose_pi(mixed.module, bad); }) == Errc::NotInCategory);
}

TEST_CASE("vandermonde separation inverts recombination") {
  testgen::Gen gen(21);
  for (int t = 0; t < 30; ++t) {
    const int N = gen.integer(1, 4);
    std::vector<Scalar> z;
    while (static_cast<int>(z.size()) < N) {
      const auto c = gen.nonzero_rational();
      if (std::find(z.begin(), z.end(), c) == z.end()) z.push_back(c);
    }
    std::vector<ModuleVector> parts;
    for (int j = 0; j < N; ++j) {
      ModuleVector v;
      for (std::size_t i = 0; i < 3; ++i) v.add(i, gen.rational());
      parts.push_back(v);
    }
    std::vector<ModuleVector> samples;
    for (int k = 0; k < N; ++k) {
      ModuleVector s;
      for (int j = 0; j < N; ++j) s.add_scaled(parts[static_cast<std::size_t>(j)], z[static_cast<std::size_t>(j)].pow(k));
      samples.push_back(s);
    }
    CHECK(vandermonde_separate(samples, z) == parts);
  }
  const std::vector<ModuleVector> two(2, ModuleVector::basis(0));
  CHECK(code_of([&] { (void)vandermonde_separate(two, std::vector<Scalar>{1, 1}); }) == Errc::SingularSystem);
  CHECK(code_of([&] { (void)vandermonde_separate(two, std::vector<Scalar>{0, 1}); }) == Errc::ZeroPoint);
  CHECK(code_of([&] { (void)vandermonde_separate(two, std::vector<Scalar>{1, 2, 3}); }) == Errc::InvalidArgument);
}

TEST_CASE("integrability transfers to both halves") {
  const auto mixed = small_mixed(3);
  const auto d = decompose_pi(mixed.module, mixed.witness);
  const auto& T = static_cast<const TensorModule&>(*mixed.module);
  const auto w = ModuleVector::basis(T.compose({0, 0}));
  for (int a : T.lie().root_vectors()) {
    const auto t = integrability_transport_check(d, a, 1, MultiIndex{0}, w, 20);
    CHECK(t.pass);
    CHECK(t.k_R <= t.k * (t.l + 1));
    CHECK(t.k_E <= t.k * (t.l + 2));
  }
  // purely evaluation: the restricted side acts as zero, so k_R = 1
  const auto ev = std::make_shared<EvaluationModule>(std::vector<FiniteRep>{FiniteRep::sl2_irrep(2)},
                                                     std::vector<EvalPoint>{EvalPoint({Scalar(3), Scalar(5)})});
  const auto de = decompose_pi(ev, CategoryWitness{CategoryTag::E_tau_prime, LaurentPoly::linear(3), {LaurentPoly::linear(5)}});
  const auto te = integrability_transport_check(de, 1, 0, MultiIndex{0}, ModuleVector::basis(0), 10);
  CHECK(te.k_R == 1);
  CHECK(te.k_E == 3);
}
