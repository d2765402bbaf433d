#include "toroidal/suites.hpp"

#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <random>

#include "toroidal/categories/categories.hpp"
#include "toroidal/error.hpp"
#include "toroidal/formal/commutator.hpp"
#include "toroidal/formal/delta.hpp"
#include "toroidal/formal/generating.hpp"
#include "toroidal/modules/checks.hpp"
#include "toroidal/modules/evaluation.hpp"
#include "toroidal/modules/induced.hpp"

namespace toroidal {

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Scalar nonzero_coeff(Rng& rng) {
  int c = 0;
  while (c == 0) c = uniform(rng, -3, 3);
  return c;
}

std::vector<Scalar> ints(std::initializer_list<long> xs) {
  std::vector<Scalar> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

ToroidalElement random_element(const ToroidalAlgebra& g, Rng& rng, Range range) {
  const int r = g.rank();
  ToroidalElement u;
  const int terms = uniform(rng, 1, 3);
  for (int t = 0; t < terms; ++t) {
    const int kind = uniform(rng, 0, 9);
    std::vector<int> n(static_cast<std::size_t>(r));
    for (auto& x : n) x = uniform(rng, range.lo, range.hi);
    GeneratorKey key;
    if (kind < 8 || r == 0) {
      key = LoopKey{uniform(rng, 0, g.lie().dimension() - 1), uniform(rng, range.lo, range.hi), MultiIndex(n)};
    } else if (kind == 8) {
      key = K0Key{MultiIndex(n)};
    } else {
      key = KiKey{uniform(rng, 1, r)};
    }
    u.add(key, nonzero_coeff(rng));
  }
  return u;
}

int total_degree(const Module& W, std::size_t i) {
  const auto d = W.degree_profile(i);
  return std::accumulate(d.begin(), d.end(), 0);
}

json finish(const std::string& suite, const SuiteConfig& config, const Report& report) {
  json j = report.to_json();
  j["suite"] = suite;
  j["seed"] = config.seed;
  return j;
}

LieDataPtr algebra_of(const SuiteConfig& config) { return config.algebra ? config.algebra : builtin_algebra("sl2"); }

// Loop keys with n0 and every n_i in `modes`, then K0(n) over the same n and all K_i.
std::vector<GeneratorKey> keys_in(const ToroidalAlgebra& g, Range modes) {
  return generator_window(g, modes.lo, modes.hi);
}

// ---------------------------------------------------------------------------

json suite_bracket_jacobi(const SuiteConfig& config) {
  const Range range = config.window.value_or(Range{-3, 3});
  Report report("bracket-jacobi");
  report.window = ExponentWindow::uniform(range, config.rank).to_json();
  Rng rng(config.seed);
  for (const auto& lie : {algebra_of(config), builtin_algebra(algebra_of(config)->name() == "sl2" ? "sl3" : "sl2")}) {
    const ToroidalAlgebra g(lie, config.rank);
    for (int t = 0; t < 100; ++t) {
      const auto u = random_element(g, rng, range);
      const auto v = random_element(g, rng, range);
      const auto w = random_element(g, rng, range);
      const auto uv = g.bracket(u, v);
      const auto vu = g.bracket(v, u);
      report.record(uv + vu == ToroidalElement(), [&] {
        return Counterexample{"antisymmetry " + lie->name(), g.element_str(u) + " ; " + g.element_str(v), {t},
                              g.element_str(uv), g.element_str(-1 * vu)};
      });
      report.record(g.jacobi_check(u, v, w), [&] {
        return Counterexample{"jacobi " + lie->name(), g.element_str(u) + " ; " + g.element_str(v) + " ; " + g.element_str(w),
                              {t}, "nonzero", "0"};
      });
    }
    report.samples.push_back(lie->name() + ": 100 seeded triples");
  }
  return finish("bracket-jacobi", config, report);
}

json suite_bracket_coefficients(const SuiteConfig& config) {
  Report report("bracket-series");
  if (!config.module) {
    const ToroidalAlgebra g(algebra_of(config), config.rank);
    ExponentWindow window{config.window.value_or(Range{-3, 3}), {}};
    for (int i = 0; i < g.rank(); ++i) window.x.push_back(config.window.value_or(Range{-2, 2}));
    report.window = window.to_json();
    const int dim = g.lie().dimension();
    for (int a = 0; a < dim; ++a) {
      for (int b = 0; b < dim; ++b) report.merge(bracket_series_report(g, a, b, window));
    }
    report.samples.push_back(std::to_string(dim * dim) + " basis pairs");
    return finish("eq2.3-coefficients", config, report);
  }
  const Module& W = *config.module->module;
  const auto window = ExponentWindow::uniform(config.window.value_or(Range{-2, 2}), W.rank());
  report.window = window.to_json();
  const auto vectors = low_degree_basis(W, 1);
  const int dim = W.lie().dimension();
  for (const auto& w : vectors) {
    report.samples.push_back(W.vector_str(w));
    for (int a = 0; a < dim; ++a) {
      for (int b = 0; b < dim; ++b) report.merge(commutator_series_report(W, a, b, w, window));
    }
  }
  return finish("eq2.3-coefficients", config, report);
}

std::vector<LoadedModule> small_eval_tensors(int rank) {
  // s <= 3 factors V(m), m <= 2, at distinct points (j+2, j+3, ...)
  std::vector<LoadedModule> out;
  std::function<void(std::vector<int>&, int)> grow = [&](std::vector<int>& ms, int lo) {
    if (!ms.empty()) {
      std::vector<FiniteRep> reps;
      std::vector<EvalPoint> pts;
      for (std::size_t j = 0; j < ms.size(); ++j) {
        reps.push_back(FiniteRep::sl2_irrep(ms[j]));
        std::vector<Scalar> z;
        for (int i = 0; i <= rank; ++i) z.emplace_back(static_cast<long>(j) + 2 + i);
        pts.emplace_back(std::move(z));
      }
      const auto p = eval_annihilator(pts);
      out.push_back({std::make_shared<EvaluationModule>(std::move(reps), pts),
                     CategoryWitness{CategoryTag::E_tau, p[0], std::vector<LaurentPoly>(p.begin() + 1, p.end())}});
    }
    if (ms.size() == 3) return;
    for (int m = lo; m <= 2; ++m) {
      ms.push_back(m);
      grow(ms, m);
      ms.pop_back();
    }
  };
  std::vector<int> ms;
  grow(ms, 0);
  return out;
}

json suite_center(const SuiteConfig& config) {
  Report report("center");
  const Range range = config.window.value_or(Range{-3, 3});
  const auto modules = config.module ? std::vector<LoadedModule>{*config.module} : small_eval_tensors(config.rank);
  for (const auto& lm : modules) {
    const Module& W = *lm.module;
    const int r = W.rank();
    report.samples.push_back(W.kind() + " dim " + std::to_string(W.dimension()));
    std::vector<int> lo(static_cast<std::size_t>(r), range.lo), hi(static_cast<std::size_t>(r), range.hi);
    for (std::size_t i = 0; i < W.dimension(); ++i) {
      for_each_in_box(lo, hi, [&](const std::vector<int>& n) {
        const auto v = W.act(K0Key{MultiIndex(n)}, i);
        report.record(v.is_zero(), [&] { return Counterexample{"K0" + MultiIndex(n).str(), W.label(i), n, W.vector_json(v), json::object()}; });
      });
      for (int k = 1; k <= r; ++k) {
        const auto v = W.act(KiKey{k}, i);
        report.record(v.is_zero(), [&] { return Counterexample{"K" + std::to_string(k), W.label(i), {}, W.vector_json(v), json::object()}; });
      }
    }
  }
  report.window = ExponentWindow::uniform(range, modules.front().module->rank()).to_json();
  return finish("lemma3.2-center", config, report);
}

json suite_annihilators(const SuiteConfig& config) {
  Report report("annihilators");
  const Range range = config.window.value_or(Range{-4, 4});
  const auto modules = config.module ? std::vector<LoadedModule>{*config.module} : small_eval_tensors(config.rank);
  for (const auto& lm : modules) {
    const Module& W = *lm.module;
    std::vector<ModuleVector> basis;
    for (std::size_t i = 0; i < W.dimension(); ++i) basis.push_back(ModuleVector::basis(i));
    report.merge(check_membership(W, lm.witness, ExponentWindow::uniform(range, W.rank()), basis));
    report.samples.push_back(W.kind() + " dim " + std::to_string(W.dimension()) + " " + tag_name(lm.witness.tag));
  }
  report.window = ExponentWindow::uniform(range, modules.front().module->rank()).to_json();
  return finish("annihilators", config, report);
}

json suite_delta(const SuiteConfig& config) {
  const Range range = config.window.value_or(Range{-5, 5});
  const ExponentWindow window{range, {range}};
  Report report("delta-identities");
  report.window = window.to_json();
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 3; ++n) report.merge(delta_identity_report(m, n, window));
  }
  const std::vector<LaurentPoly> polys = {
      LaurentPoly::constant(1), LaurentPoly::monomial(1), LaurentPoly::linear(2),
      LaurentPoly(LaurentPoly::Terms{{-2, Scalar(3)}, {0, Scalar(1)}, {3, Scalar(-5, 2)}}),
      LaurentPoly::from_roots(ints({1, -3, 4}))};
  const std::vector<Scalar> points = {Scalar(2), Scalar(-1, 3), Scalar(5, 7)};
  for (const auto& f : polys) {
    for (const auto& a : points) report.merge(delta_substitution_report(f, a, window));
  }
  report.samples.push_back("(m, n) in [0,3]^2");
  report.samples.push_back("5 polynomials x 3 points");
  return finish("delta-identities", config, report);
}

// ψ properties for every generator on the given vectors. `kind` selects the
// extra family property: ψ = 1 on restricted series, ψ = 0 on evaluation ones.
enum class PsiFamily { Restricted, Evaluation, Mixed };

void psi_checks(const Module& W, const CategoryWitness& witness, PsiFamily family, const ExponentWindow& window,
                std::span<const ModuleVector> vectors, Rng& rng, Report& report) {
  const int r = W.rank();
  const LaurentPoly p0 = witness.p0 ? *witness.p0 : LaurentPoly::constant(1);
  int c = 0;
  while (c == 0) c = uniform(rng, -4, 4);
  const LaurentPoly p0c = p0 * LaurentPoly::linear(c);
  for (const auto& w : vectors) {
    for (int a = 0; a < W.lie().dimension(); ++a) {
      const auto alpha = GeneratingSeries::of_generator(W, a, w, p0);
      const auto [tilde, check] = decompose_series(alpha, p0);
      const std::string key = W.lie().label(a);
      window.for_each([&](int e0, const std::vector<int>& e) {
        const int n0 = mode_of_exponent(e0);
        std::vector<int> nv;
        for (int x : e) nv.push_back(mode_of_exponent(x));
        const MultiIndex n(nv);
        const int lowest = n0 + std::min(0, p0.low_degree());
        const std::array<int, 1> step{lowering(GeneratorKey(LoopKey{a, lowest, n}))};
        if (!within_valid_window(W, w, step)) {
          report.skip();
          return;
        }
        auto exps = e;
        exps.insert(exps.begin(), e0);
        auto rec = [&](const std::string& what, const ModuleVector& lhs, const ModuleVector& rhs) {
          report.record(lhs == rhs, [&] { return Counterexample{what + " " + key, W.vector_str(w), exps, W.vector_json(lhs), W.vector_json(rhs)}; });
        };
        const ModuleVector t = tilde(n0, n);
        rec("f0 psi = f0 alpha", alpha.times_x0_poly(p0)(n0, n), tilde.times_x0_poly(p0)(n0, n));
        rec("well-defined under p0*(x-c)", t, psi_project(alpha, p0c, n0, n));
        rec("idempotent", t, psi_project(tilde, p0, n0, n));
        rec("sum", alpha(n0, n), t + check(n0, n));
        rec("p0 kills the complement", check.times_x0_poly(p0)(n0, n), ModuleVector());
        for (int i = 1; i <= r; ++i) {
          const auto& pi = witness.p[static_cast<std::size_t>(i - 1)];
          rec("p" + std::to_string(i) + " transported", tilde.times_xi_poly(i, pi)(n0, n), ModuleVector());
        }
        if (family == PsiFamily::Restricted) rec("identity on restricted", t, alpha(n0, n));
        if (family == PsiFamily::Evaluation) rec("zero on evaluation", t, ModuleVector());
      });
    }
  }
}

std::vector<ModuleVector> sample_vectors(const Module& W, int max_degree, std::size_t cap, Rng& rng) {
  auto basis = low_degree_basis(W, max_degree);
  if (basis.size() > cap) basis.resize(cap);
  std::vector<ModuleVector> out = basis;
  // a few seeded combinations so that the checks are not basis-only
  for (int added = 0; added < 4 && basis.size() > 1;) {
    ModuleVector v;
    for (const auto& b : basis) {
      if (uniform(rng, 0, 1)) v.add_scaled(b, nonzero_coeff(rng));
    }
    if (v.is_zero()) continue;
    out.push_back(v);
    ++added;
  }
  return out;
}

json suite_psi(const SuiteConfig& config) {
  Report report("psi-properties");
  Rng rng(config.seed);
  struct Case {
    LoadedModule lm;
    PsiFamily family;
  };
  std::vector<Case> cases;
  if (config.module) {
    cases.push_back({*config.module, PsiFamily::Mixed});
  } else {
    const auto mixed = default_split_module();
    const auto& t = static_cast<const TensorModule&>(*mixed.module);
    cases.push_back({{t.part_ptr(0), CategoryWitness{CategoryTag::C_tau, LaurentPoly::constant(1), {LaurentPoly::linear(2)}}},
                     PsiFamily::Restricted});
    cases.push_back({load_module({{"type", "eval"}, {"factors", {{{"m", 1}, {"z", {"3", "5"}}}, {{"m", 1}, {"z", {"4", "-2"}}}}}}),
                     PsiFamily::Evaluation});
    cases.push_back({mixed, PsiFamily::Mixed});
  }
  const auto window = ExponentWindow::uniform(config.window.value_or(Range{-3, 3}), cases.front().lm.module->rank());
  report.window = window.to_json();
  json instances = json::object();
  for (const auto& c : cases) {
    auto witness = c.lm.witness;
    if (!witness.p0) witness.p0 = LaurentPoly::constant(1);
    const auto vectors = sample_vectors(*c.lm.module, 2, 8, rng);
    for (const auto& v : vectors) report.samples.push_back(c.lm.module->kind() + ": " + c.lm.module->vector_str(v));
    psi_checks(*c.lm.module, witness, c.family, window, vectors, rng, report);
    const char* family = c.family == PsiFamily::Restricted ? "restricted" : c.family == PsiFamily::Evaluation ? "evaluation" : "mixed";
    instances[family] = vectors.size() * static_cast<std::size_t>(c.lm.module->lie().dimension());
  }
  report.extra = {{"series_vector_instances", instances}};
  return finish("psi-properties", config, report);
}

// Expected split of a tensor product whose parts are each purely evaluation
// or purely restricted: the sum of the parts' own actions on each side.
std::optional<std::pair<ModuleVector, ModuleVector>> factor_split(const Module& W, const GeneratorKey& key,
                                                                  const ModuleVector& w) {
  const auto* t = dynamic_cast<const TensorModule*>(&W);
  if (!t) {
    if (W.kind() == "eval") return std::make_pair(ModuleVector(), is_central(key) ? ModuleVector() : W.apply(key, w));
    if (W.kind() == "induced" || W.kind() == "restricted_eval") {
      return std::make_pair(std::holds_alternative<KiKey>(key) ? ModuleVector() : W.apply(key, w), ModuleVector());
    }
    return std::nullopt;
  }
  ModuleVector R, E;
  for (std::size_t j = 0; j < t->parts(); ++j) {
    const auto kind = t->part(j).kind();
    const bool eval = kind == "eval";
    if (!eval && kind != "induced" && kind != "restricted_eval") return std::nullopt;
    for (const auto& [i, c] : w.terms()) {
      if (eval) {
        if (!is_central(key)) E.add_scaled(t->act_part(key, i, j), c);
      } else if (!std::holds_alternative<KiKey>(key)) {
        R.add_scaled(t->act_part(key, i, j), c);
      }
    }
  }
  return std::make_pair(R, E);
}

json suite_split(const SuiteConfig& config) {
  const LoadedModule lm = config.module ? *config.module : default_split_module();
  const Module& W = *lm.module;
  const Range modes = config.window.value_or(Range{-3, 3});
  Report report("split");
  report.witness = lm.witness.to_json();
  report.window = {{"modes", {modes.lo, modes.hi}}};
  const auto d = decompose_pi(lm.module, lm.witness);
  const auto vectors = low_degree_basis(W, 2);
  for (const auto& v : vectors) report.samples.push_back(W.vector_str(v));
  const auto keys = keys_in(W.algebra(), modes);

  Report additivity("additivity"), round_trip("factor-round-trip");
  for (const auto& w : vectors) {
    for (const auto& key : keys) {
      const std::array<int, 1> step{lowering(key)};
      if (!within_valid_window(W, w, step)) {
        additivity.skip();
        round_trip.skip();
        continue;
      }
      const auto R = d.pi_R->apply(key, w);
      const auto E = d.pi_E->apply(key, w);
      const auto full = W.apply(key, w);
      additivity.record(R + E == full, [&] {
        return Counterexample{W.algebra().key_str(key), W.vector_str(w), {}, W.vector_json(R + E), W.vector_json(full)};
      });
      if (const auto expected = factor_split(W, key, w)) {
        round_trip.record(R == expected->first, [&] {
          return Counterexample{"pi_R " + W.algebra().key_str(key), W.vector_str(w), {}, W.vector_json(R),
                                W.vector_json(expected->first)};
        });
        round_trip.record(E == expected->second, [&] {
          return Counterexample{"pi_E " + W.algebra().key_str(key), W.vector_str(w), {}, W.vector_json(E),
                                W.vector_json(expected->second)};
        });
      }
    }
  }
  const auto commuting = commuting_actions_report(d, keys, vectors);
  const auto window = ExponentWindow::uniform(Range{exponent_of_mode(modes.hi), exponent_of_mode(modes.lo)}, W.rank());
  const auto member_R = check_membership(*d.pi_R, d.witness_R, window, vectors);
  const auto member_E = check_membership(*d.pi_E, d.witness_E, window, vectors);
  const Range small{std::max(modes.lo, -2), std::min(modes.hi, 2)};
  const auto rep_keys = keys_in(W.algebra(), small);
  std::vector<std::size_t> rep_basis;
  for (std::size_t i = 0; i < W.dimension(); ++i) {
    if (total_degree(W, i) <= 1) rep_basis.push_back(i);
  }
  const auto rep_R = representation_check(*d.pi_R, rep_keys, rep_basis);
  const auto rep_E = representation_check(*d.pi_E, rep_keys, rep_basis);

  json parts = json::object();
  for (const Report* part : std::initializer_list<const Report*>{&additivity, &round_trip, &commuting, &member_R, &member_E, &rep_R, &rep_E}) {
    report.merge(*part);
  }
  parts["additivity"] = {{"checks", additivity.checks()}, {"pass", additivity.pass()}};
  parts["factor_round_trip"] = {{"checks", round_trip.checks()}, {"pass", round_trip.pass()}};
  parts["commuting"] = {{"checks", commuting.checks()}, {"pass", commuting.pass()}};
  parts["pi_R_membership"] = {{"checks", member_R.checks()}, {"pass", member_R.pass()}};
  parts["pi_E_membership"] = {{"checks", member_E.checks()}, {"pass", member_E.pass()}};
  parts["pi_R_representation"] = {{"checks", rep_R.checks()}, {"pass", rep_R.pass()}};
  parts["pi_E_representation"] = {{"checks", rep_E.checks()}, {"pass", rep_E.pass()}};
  report.extra = parts;
  return finish("thm4.8-split", config, report);
}

json suite_vandermonde(const SuiteConfig& config) {
  Report report("vandermonde");
  Rng rng(config.seed);
  for (int N = 2; N <= 3; ++N) {
    // distinct nonzero rational points for x1
    std::vector<Scalar> z1;
    while (static_cast<int>(z1.size()) < N) {
      const Scalar z(uniform(rng, -9, 9), uniform(rng, 1, 4));
      if (z.is_zero() || std::find(z1.begin(), z1.end(), z) != z1.end()) continue;
      z1.push_back(z);
    }
    std::vector<FiniteRep> reps(static_cast<std::size_t>(N), FiniteRep::sl2_irrep(1));
    std::vector<EvalPoint> pts;
    for (int j = 0; j < N; ++j) pts.emplace_back(std::vector<Scalar>{Scalar(j + 2), z1[static_cast<std::size_t>(j)]});
    const EvaluationModule W(reps, pts);
    std::string pts_str;
    for (const auto& z : z1) pts_str += z.str() + " ";
    report.samples.push_back("N=" + std::to_string(N) + " z1=" + pts_str);
    for (int a = 0; a < W.lie().dimension(); ++a) {
      for (std::size_t i = 0; i < W.dimension(); ++i) {
        const auto w = ModuleVector::basis(i);
        std::vector<ModuleVector> samples;
        for (int k = 0; k < N; ++k) samples.push_back(W.apply(LoopKey{a, 0, MultiIndex{k}}, w));
        const auto parts = vandermonde_separate(samples, z1);
        for (int j = 0; j < N; ++j) {
          const auto direct = W.act_slot(LoopKey{a, 0, MultiIndex{0}}, i, static_cast<std::size_t>(j));
          report.record(parts[static_cast<std::size_t>(j)] == direct, [&] {
            return Counterexample{W.lie().label(a) + " slot " + std::to_string(j), W.label(i), {N}, W.vector_json(parts[static_cast<std::size_t>(j)]),
                                  W.vector_json(direct)};
          });
        }
        for (int k = 0; k < N; ++k) {
          ModuleVector back;
          for (int j = 0; j < N; ++j) back.add_scaled(parts[static_cast<std::size_t>(j)], z1[static_cast<std::size_t>(j)].pow(k));
          report.record(back == samples[static_cast<std::size_t>(k)], [&] {
            return Counterexample{W.lie().label(a) + " resubstitution", W.label(i), {N, k}, W.vector_json(back),
                                  W.vector_json(samples[static_cast<std::size_t>(k)])};
          });
        }
      }
    }
  }
  return finish("vandermonde", config, report);
}

json suite_integrability(const SuiteConfig& config) {
  Report report("integrability");
  const auto lie = builtin_algebra("sl2");
  for (int m = 0; m <= 3; ++m) {
    const EvaluationModule W({FiniteRep::sl2_irrep(m)}, {EvalPoint(ints({2, 3}))});
    for (int a : lie->root_vectors()) {
      int worst = 0;
      for (std::size_t i = 0; i < W.dimension(); ++i) {
        const auto k = nilpotency_check(W, a, 1, MultiIndex{-1}, ModuleVector::basis(i), m + 5);
        worst = std::max(worst, k.value_or(1000));
      }
      report.record(worst == m + 1, [&] {
        return Counterexample{lie->label(a) + " on V(" + std::to_string(m) + ")", "", {m}, worst, m + 1};
      });
    }
    report.samples.push_back("eval V(" + std::to_string(m) + ")");
  }
  const LoadedModule lm = config.module ? *config.module : default_split_module();
  const auto d = decompose_pi(lm.module, lm.witness);
  const auto vectors = low_degree_basis(*lm.module, 1);
  json results = json::array();
  for (int a : lm.module->lie().root_vectors()) {
    for (int n0 = 0; n0 <= 2; ++n0) {
      for (const auto& w : vectors) {
        const auto n = MultiIndex::zero(lm.module->rank());
        try {
          const auto t = integrability_transport_check(d, a, n0, n, w, 20);
          report.record(t.pass, [&] {
            return Counterexample{lm.module->lie().label(a) + "(" + std::to_string(n0) + ")", lm.module->vector_str(w), {n0},
                                  t.to_json(), "k_R <= k(l+1), k_E <= k(l+2)"};
          });
        } catch (const Error& e) {
          if (e.code() != Errc::NotWithinValidWindow) throw;
          report.skip();
        }
      }
    }
  }
  report.witness = lm.witness.to_json();
  return finish("integrability", config, report);
}

json suite_representation(const SuiteConfig& config) {
  Report report("representation");
  const Range modes = config.window.value_or(Range{-2, 2});
  std::vector<LoadedModule> modules;
  if (config.module) {
    modules.push_back(*config.module);
  } else {
    modules.push_back(default_eval_module());
    modules.push_back(load_module({{"type", "induced"}, {"m", 1}, {"level", "2"}, {"depth", 2}}));
    modules.push_back(load_module({{"type", "eval"}, {"g", "sl3"}, {"factors", {{{"rep", "defining"}, {"z", {"2", "3"}}}}}}));
    modules.push_back(default_split_module());
  }
  for (const auto& lm : modules) {
    const Module& W = *lm.module;
    std::vector<std::size_t> basis;
    for (std::size_t i = 0; i < W.dimension(); ++i) {
      if (total_degree(W, i) <= 1) basis.push_back(i);
    }
    report.merge(representation_check(W, keys_in(W.algebra(), modes), basis));
    report.samples.push_back(W.kind() + " dim " + std::to_string(W.dimension()));
  }
  report.window = {{"modes", {modes.lo, modes.hi}}};
  return finish("representation", config, report);
}

json suite_membership(const SuiteConfig& config) {
  const LoadedModule lm = config.module ? *config.module : default_split_module();
  const Module& W = *lm.module;
  const auto window = ExponentWindow::uniform(config.window.value_or(Range{-3, 3}), W.rank());
  auto report = check_membership(W, lm.witness, window, low_degree_basis(W, 1));
  return finish("membership", config, report);
}

using SuiteFn = json (*)(const SuiteConfig&);

const std::map<std::string, SuiteFn>& suites() {
  static const std::map<std::string, SuiteFn> table = {
      {"bracket-jacobi", suite_bracket_jacobi},
      {"eq2.3-coefficients", suite_bracket_coefficients},
      {"lemma3.2-center", suite_center},
      {"annihilators", suite_annihilators},
      {"delta-identities", suite_delta},
      {"psi-properties", suite_psi},
      {"thm4.8-split", suite_split},
      {"vandermonde", suite_vandermonde},
      {"integrability", suite_integrability},
      {"representation", suite_representation},
      {"membership", suite_membership},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

json run_suite(const SuiteConfig& config) {
  const auto it = suites().find(config.suite);
  if (it == suites().end()) throw Error(Errc::InvalidArgument, "unknown suite '" + config.suite + "'");
  return it->second(config);
}

std::vector<ModuleVector> low_degree_basis(const Module& W, int max_degree) {
  std::vector<ModuleVector> out;
  for (std::size_t i = 0; i < W.dimension(); ++i) {
    if (total_degree(W, i) <= max_degree) out.push_back(ModuleVector::basis(i));
  }
  return out;
}

LoadedModule default_split_module() {
  const json d = {
      {"type", "tensor"},
      {"parts",
       {{{"type", "restricted_eval"},
         {"factors", {{{"module", {{"type", "induced"}, {"m", 0}, {"level", "1"}, {"depth", 4}}}, {"z", {"2"}}}}}},
        {{"type", "eval"}, {"factors", {{{"m", 1}, {"z", {"3", "5"}}}}}}}}};
  return load_module(d);
}

LoadedModule default_eval_module() {
  const json d = {{"type", "eval"}, {"factors", {{{"m", 1}, {"z", {"2", "3"}}}, {{"m", 2}, {"z", {"5", "7"}}}}}};
  return load_module(d);
}

}  // namespace toroidal
