#include "toroidal/categories/categories.hpp"

#include <array>

#include "toroidal/core/dense.hpp"
#include "toroidal/error.hpp"
#include "toroidal/modules/checks.hpp"

namespace toroidal {

namespace {

MultiIndex modes_of(const std::vector<int>& exps) {
  std::vector<int> out;
  out.reserve(exps.size());
  for (int e : exps) out.push_back(mode_of_exponent(e));
  return MultiIndex(std::move(out));
}

std::vector<int> exponent_tuple(int p0, const std::vector<int>& p) {
  std::vector<int> e{p0};
  e.insert(e.end(), p.begin(), p.end());
  return e;
}

MultiIndex bump(MultiIndex n, int i, int k) {
  n[i - 1] += k;
  return n;
}

bool needs_p0(CategoryTag tag) { return tag != CategoryTag::R_tilde; }
bool needs_multiplicity_free(CategoryTag tag) { return tag != CategoryTag::E_tau; }

}  // namespace

std::string tag_name(CategoryTag tag) {
  switch (tag) {
    case CategoryTag::E_tau: return "E_tau";
    case CategoryTag::E_tau_prime: return "E_tau_prime";
    case CategoryTag::R_tilde: return "R_tilde";
    case CategoryTag::C_tau: return "C_tau";
  }
  return "?";
}

CategoryTag parse_tag(std::string_view name) {
  for (auto t : {CategoryTag::E_tau, CategoryTag::E_tau_prime, CategoryTag::R_tilde, CategoryTag::C_tau}) {
    if (tag_name(t) == name) return t;
  }
  throw Error(Errc::ParseError, "unknown category '" + std::string(name) + "'");
}

void CategoryWitness::validate(int rank) const {
  if (static_cast<int>(p.size()) != rank) {
    throw Error(Errc::InvalidWitness, "witness lists " + std::to_string(p.size()) + " polynomials p1..pr for rank " +
                                          std::to_string(rank));
  }
  if (needs_p0(tag) && !p0) throw Error(Errc::InvalidWitness, tag_name(tag) + " witness needs p0");
  if (!needs_p0(tag) && p0) throw Error(Errc::InvalidWitness, "R_tilde witness must not carry p0");
  if (p0 && p0->is_zero()) throw Error(Errc::EmptyPolynomial, "p0 is zero");
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_zero()) throw Error(Errc::EmptyPolynomial, "p" + std::to_string(i + 1) + " is zero");
  }
}

json CategoryWitness::to_json() const {
  json j = {{"category", tag_name(tag)}, {"p", p}};
  j["p0"] = p0 ? json(*p0) : json(nullptr);
  return j;
}

CategoryWitness CategoryWitness::from_json(const json& j) {
  if (!j.is_object()) throw Error(Errc::ParseError, "witness must be an object");
  CategoryWitness w;
  if (!j.contains("category") || !j["category"].is_string()) throw Error(Errc::ParseError, "witness field 'category' missing");
  w.tag = parse_tag(j["category"].get<std::string>());
  try {
    if (j.contains("p0") && !j["p0"].is_null()) w.p0 = j["p0"].get<LaurentPoly>();
  } catch (const json::exception&) {
    throw Error(Errc::ParseError, "witness field 'p0' is not a polynomial");
  }
  if (j.contains("p")) {
    if (!j["p"].is_array()) throw Error(Errc::ParseError, "witness field 'p' must be an array");
    for (std::size_t i = 0; i < j["p"].size(); ++i) {
      try {
        w.p.push_back(j["p"][i].get<LaurentPoly>());
      } catch (const json::exception&) {
        throw Error(Errc::ParseError, "witness field 'p[" + std::to_string(i) + "]' is not a polynomial");
      }
    }
  }
  return w;
}

Report check_membership(const Module& W, const CategoryWitness& witness, const ExponentWindow& window,
                        std::span<const ModuleVector> vectors) {
  const int r = W.rank();
  witness.validate(r);
  if (window.rank() != r) throw Error(Errc::RankMismatch, "window rank differs from the module rank");
  const auto tag = witness.tag;
  const auto& g = W.algebra();
  Report report(tag_name(tag));
  report.witness = witness.to_json();
  report.window = window.to_json();
  for (const auto& w : vectors) report.samples.push_back(W.vector_str(w));

  if (needs_multiplicity_free(tag)) {
    for (int i = 1; i <= r; ++i) {
      if (!poly_roots_multiplicity_free(witness.p[static_cast<std::size_t>(i - 1)])) {
        report.fail("p" + std::to_string(i) + " has a repeated nonzero root");
      }
    }
  }

  for (const auto& w : vectors) {
    // Action on w, or nullopt when it would leave the valid window.
    auto act = [&](const GeneratorKey& key) -> std::optional<ModuleVector> {
      const std::array<int, 1> step{lowering(key)};
      if (!within_valid_window(W, w, step)) return std::nullopt;
      return W.apply(key, w);
    };
    // Σ_e c_e v_e with every v_e available, else nullopt (the check is skipped).
    auto combination = [&](const LaurentPoly& poly, auto&& key_at) -> std::optional<ModuleVector> {
      ModuleVector out;
      for (const auto& [e, c] : poly.terms()) {
        auto v = act(key_at(e));
        if (!v) return std::nullopt;
        out.add_scaled(*v, c);
      }
      return out;
    };
    auto expect_zero = [&](const std::optional<ModuleVector>& v, const std::string& key, const std::vector<int>& exps) {
      if (!v) {
        report.skip();
        return;
      }
      report.record(v->is_zero(), [&] { return Counterexample{key, W.vector_str(w), exps, W.vector_json(*v), json::object()}; });
    };

    for (int i = 1; i <= r; ++i) expect_zero(act(KiKey{i}), "K" + std::to_string(i), {});

    for (int a = 0; a < g.lie().dimension(); ++a) {
      const std::string name = g.lie().label(a);
      std::optional<int> floor;
      if (tag == CategoryTag::R_tilde) {
        floor = W.vector_restriction_bound(a, MultiIndex::zero(r), w);
        if (!floor) report.fail(name + "(x0, x) has no x0 bound on " + W.vector_str(w));
      } else if (tag == CategoryTag::C_tau) {
        floor = GeneratingSeries::of_generator(W, a, w, *witness.p0).truncation_floor(*witness.p0);
        if (!floor) report.fail("p0(x0) " + name + "(x0, x) has no x0 bound on " + W.vector_str(w));
      }

      window.for_each([&](int e0, const std::vector<int>& e) {
        const int n0 = mode_of_exponent(e0);
        const MultiIndex n = modes_of(e);
        const auto exps = exponent_tuple(e0, e);
        if (tag == CategoryTag::E_tau || tag == CategoryTag::E_tau_prime) {
          expect_zero(combination(*witness.p0, [&](int k) { return GeneratorKey(LoopKey{a, n0 + k, n}); }),
                      "p0(x0) " + name, exps);
        } else if (floor && n0 > *floor) {
          if (tag == CategoryTag::R_tilde) {
            expect_zero(act(LoopKey{a, n0, n}), name, exps);
          } else {
            expect_zero(combination(*witness.p0, [&](int k) { return GeneratorKey(LoopKey{a, n0 + k, n}); }),
                        "p0(x0) " + name, exps);
          }
        }
        for (int i = 1; i <= r; ++i) {
          const auto& pi = witness.p[static_cast<std::size_t>(i - 1)];
          const std::string label = "p" + std::to_string(i) + "(x" + std::to_string(i) + ") ";
          expect_zero(combination(pi, [&](int k) { return GeneratorKey(LoopKey{a, n0, bump(n, i, k)}); }),
                      label + name, exps);
          // K0(x) w does not depend on x0; check it once per x exponent.
          if (a == 0 && e0 == window.x0.lo && (tag == CategoryTag::R_tilde || tag == CategoryTag::C_tau)) {
            expect_zero(combination(pi, [&](int k) { return GeneratorKey(K0Key{bump(n, i, k)}); }),
                        label + "K0", exponent_tuple(0, e));
          }
        }
      });
    }
  }
  return report;
}

std::pair<GeneratingSeries, GeneratingSeries> decompose_series(const GeneratingSeries& alpha,
                                                               const CategoryWitness& witness) {
  witness.validate(alpha.rank());
  return decompose_series(alpha, witness.p0 ? *witness.p0 : LaurentPoly::constant(1));
}

SplitModule::SplitModule(ModulePtr base, LaurentPoly p0, Side side)
    : Module(base->algebra()), base_(std::move(base)), p0_(std::move(p0)), side_(side) {
  if (p0_.is_zero()) throw Error(Errc::EmptyPolynomial, "p0 is zero");
}

ModuleVector SplitModule::restricted_part(int a, int n0, const MultiIndex& n, std::size_t i) const {
  const auto alpha = GeneratingSeries::of_generator(*base_, a, ModuleVector::basis(i), p0_);
  return psi_project(alpha, p0_, n0, n);
}

int SplitModule::expansion_length(int a, int n0, std::size_t i) const {
  const auto alpha = GeneratingSeries::of_generator(*base_, a, ModuleVector::basis(i), p0_);
  return psi_expansion(alpha, p0_, n0).l;
}

std::optional<int> SplitModule::restriction_bound(int a, const MultiIndex& /*n*/, std::size_t i) const {
  if (side_ == Side::E) return std::nullopt;
  const auto alpha = GeneratingSeries::of_generator(*base_, a, ModuleVector::basis(i), p0_);
  const auto G = alpha.truncation_floor(p0_);
  if (!G || *G == kVanishingBound) return G;
  return *G + p0_.low_degree();
}

std::optional<int> SplitModule::restricted_part_bound(std::size_t i) const {
  if (side_ == Side::E) return kVanishingBound;
  return restriction_bound(0, MultiIndex::zero(rank()), i);
}

ModuleVector SplitModule::act_basis(const GeneratorKey& key, std::size_t i) const {
  if (const auto* k = std::get_if<LoopKey>(&key)) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = cache_.find({key, i}); it != cache_.end()) return it->second;
    }
    ModuleVector out = restricted_part(k->basis, k->n0, k->n, i);
    if (side_ == Side::E) out = base_->act(key, i) - out;
    std::lock_guard lock(mutex_);
    return cache_.emplace(std::make_pair(key, i), std::move(out)).first->second;
  }
  if (std::holds_alternative<K0Key>(key) && side_ == Side::R) return base_->act(key, i);
  return {};
}

DecomposedRep decompose_pi(ModulePtr W, const CategoryWitness& witness) {
  const int r = W->rank();
  witness.validate(r);
  const LaurentPoly p0 = witness.p0 ? *witness.p0 : LaurentPoly::constant(1);

  CategoryWitness mixed{CategoryTag::C_tau, p0, witness.p};
  std::vector<ModuleVector> sample;
  for (std::size_t i = 0; i < W->dimension() && sample.size() < 6; ++i) sample.push_back(ModuleVector::basis(i));
  ExponentWindow small{Range{-2, 2}, std::vector<Range>(static_cast<std::size_t>(r), Range{-1, 1})};
  const auto cert = check_membership(*W, mixed, small, sample);
  if (!cert.pass()) {
    const auto j = cert.to_json();
    std::string why = "witness fails the C_tau axioms";
    if (j.contains("reasons")) why += ": " + j["reasons"][0].get<std::string>();
    else if (!j["counterexample"].is_null()) why += " at " + j["counterexample"]["key"].get<std::string>();
    throw Error(Errc::NotInCategory, why);
  }

  DecomposedRep d;
  d.original = W;
  d.pi_R = std::make_shared<SplitModule>(W, p0, SplitModule::Side::R);
  d.pi_E = std::make_shared<SplitModule>(W, p0, SplitModule::Side::E);
  d.witness = witness;
  d.witness_R = CategoryWitness{CategoryTag::R_tilde, std::nullopt, witness.p};
  d.witness_E = CategoryWitness{CategoryTag::E_tau_prime, strip_monomial_factor(p0).q, witness.p};
  return d;
}

Report commuting_actions_report(const DecomposedRep& d, std::span<const GeneratorKey> keys,
                                std::span<const ModuleVector> vectors) {
  const Module& W = *d.original;
  Report report("commuting-actions");
  report.witness = d.witness.to_json();
  for (const auto& w : vectors) report.samples.push_back(W.vector_str(w));
  for (const auto& w : vectors) {
    for (const auto& u : keys) {
      for (const auto& v : keys) {
        const std::array<int, 2> uv{lowering(v), lowering(u)};
        const std::array<int, 2> vu{lowering(u), lowering(v)};
        if (!within_valid_window(W, w, uv) || !within_valid_window(W, w, vu)) {
          report.skip();
          continue;
        }
        const auto lhs = d.pi_R->apply(u, d.pi_E->apply(v, w));
        const auto rhs = d.pi_E->apply(v, d.pi_R->apply(u, w));
        report.record(lhs == rhs, [&] {
          return Counterexample{W.algebra().key_str(u) + "," + W.algebra().key_str(v), W.vector_str(w), {},
                                W.vector_json(lhs), W.vector_json(rhs)};
        });
      }
    }
  }
  return report;
}

bool verify_commuting_actions(const DecomposedRep& d, std::span<const GeneratorKey> keys,
                              std::span<const ModuleVector> vectors) {
  return commuting_actions_report(d, keys, vectors).pass();
}

std::vector<ModuleVector> vandermonde_separate(std::span<const ModuleVector> samples, std::span<const Scalar> points) {
  const std::size_t N = points.size();
  if (N == 0) throw Error(Errc::InvalidArgument, "no points given");
  if (samples.size() < N) {
    throw Error(Errc::InvalidArgument, std::to_string(samples.size()) + " samples for " + std::to_string(N) + " points");
  }
  for (const auto& z : points) {
    if (z.is_zero()) throw Error(Errc::ZeroPoint, "Vandermonde point is zero");
  }
  DenseMatrix V(N, N);
  for (std::size_t k = 0; k < N; ++k) {
    for (std::size_t j = 0; j < N; ++j) V(k, j) = points[j].pow(static_cast<long>(k));
  }
  const auto inv = inverse(V);
  if (!inv) throw Error(Errc::SingularSystem, "Vandermonde points are not distinct");
  std::vector<ModuleVector> out(N);
  for (std::size_t j = 0; j < N; ++j) {
    for (std::size_t k = 0; k < N; ++k) out[j].add_scaled(samples[k], (*inv)(j, k));
  }
  return out;
}

json TransportResult::to_json() const {
  return {{"k", k}, {"l", l}, {"k_R", k_R}, {"k_E", k_E}, {"bound_R", k * (l + 1)}, {"bound_E", k * (l + 2)}, {"pass", pass}};
}

TransportResult integrability_transport_check(const DecomposedRep& d, int a, int n0, const MultiIndex& n,
                                              const ModuleVector& w, int max_k) {
  TransportResult t;
  const auto k = nilpotency_check(*d.original, a, n0, n, w, max_k);
  if (!k) {
    throw Error(Errc::NilpotencyBoundExceeded, d.original->lie().label(a) + "(" + std::to_string(n0) + "," + n.str() +
                                                   ") is not nilpotent on the vector within " + std::to_string(max_k));
  }
  t.k = *k;
  int l = -1;
  for (const auto& [i, c] : w.terms()) {
    (void)c;
    l = std::max(l, d.pi_R->expansion_length(a, n0, i));
  }
  t.l = std::max(l, 0);
  const int bound_R = t.k * (t.l + 1);
  const int bound_E = t.k * (t.l + 2);
  const auto kr = nilpotency_check(*d.pi_R, a, n0, n, w, std::max(bound_R, 1));
  const auto ke = nilpotency_check(*d.pi_E, a, n0, n, w, std::max(bound_E, 1));
  t.k_R = kr ? *kr : bound_R + 1;
  t.k_E = ke ? *ke : bound_E + 1;
  t.pass = kr.has_value() && ke.has_value();
  return t;
}

}  // namespace toroidal
