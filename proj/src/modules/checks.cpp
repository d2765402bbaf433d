#include "toroidal/modules/checks.hpp"

#include "toroidal/error.hpp"

namespace toroidal {

std::optional<int> nilpotency_check(const Module& W, int a, int n0, const MultiIndex& n, const ModuleVector& w,
                                    int max_k) {
  if (!W.lie().is_root_vector(a)) {
    throw Error(Errc::InvalidArgument, W.lie().label(a) + " is not a designated root vector");
  }
  if (max_k < 1) throw Error(Errc::InvalidArgument, "max_k must be at least 1");
  const GeneratorKey key = LoopKey{a, n0, n};
  W.algebra().validate(key);
  if (w.is_zero()) return 0;
  std::vector<int> steps;
  ModuleVector cur = w;
  for (int k = 1; k <= max_k; ++k) {
    steps.push_back(lowering(key));
    require_within_valid_window(W, w, steps);
    cur = W.apply(key, cur);
    if (cur.is_zero()) return k;
  }
  return std::nullopt;
}

bool weight_space_check(const Module& W, int radius) {
  const int r = W.rank();
  const auto& lie = W.lie();
  std::vector<MultiIndex> window;
  for_each_in_box(std::vector<int>(static_cast<std::size_t>(r), -radius), std::vector<int>(static_cast<std::size_t>(r), radius),
                  [&](const std::vector<int>& v) { window.emplace_back(v); });
  for (std::size_t i = 0; i < W.dimension(); ++i) {
    const auto weight = W.weight_of(i);
    if (!weight) throw Error(Errc::MissingWeightData, "no weight declared for " + W.label(i));
    for (std::size_t c = 0; c < lie.cartan().size(); ++c) {
      const auto got = W.act(LoopKey{lie.cartan()[c], 0, MultiIndex::zero(r)}, i);
      if (!(got == ModuleVector::basis(i, weight->cartan[c]))) return false;
    }
    for (const auto& n : window) {
      if (!(W.act(K0Key{n}, i) == ModuleVector::basis(i, weight->k0(n)))) return false;
    }
    for (int k = 1; k <= r; ++k) {
      if (!(W.act(KiKey{k}, i) == ModuleVector::basis(i, weight->k[static_cast<std::size_t>(k) - 1]))) return false;
    }
  }
  return true;
}

Report representation_check(const Module& W, std::span<const GeneratorKey> keys, std::span<const std::size_t> basis) {
  Report report("representation");
  const auto& g = W.algebra();
  for (std::size_t x = 0; x < keys.size(); ++x) {
    for (std::size_t y = x + 1; y < keys.size(); ++y) {
      const auto& u = keys[x];
      const auto& v = keys[y];
      const int steps[] = {lowering(u), lowering(v)};
      const auto uv = g.bracket(u, v);
      for (std::size_t i : basis) {
        if (!within_valid_window(W, i, steps)) {
          report.skip();
          continue;
        }
        const auto e = ModuleVector::basis(i);
        const auto lhs = W.apply(u, W.apply(v, e)) - W.apply(v, W.apply(u, e));
        const auto rhs = W.apply(uv, e);
        report.record(lhs == rhs, [&] {
          return Counterexample{"[" + g.key_str(u) + "," + g.key_str(v) + "]", W.label(i), {}, W.vector_json(lhs),
                                W.vector_json(rhs)};
        });
      }
    }
  }
  return report;
}

std::vector<GeneratorKey> generator_window(const ToroidalAlgebra& g, int lo, int hi) {
  std::vector<GeneratorKey> keys;
  const auto r = static_cast<std::size_t>(g.rank());
  std::vector<MultiIndex> ns;
  for_each_in_box(std::vector<int>(r, lo), std::vector<int>(r, hi), [&](const std::vector<int>& v) { ns.emplace_back(v); });
  for (int a = 0; a < g.lie().dimension(); ++a) {
    for (int n0 = lo; n0 <= hi; ++n0) {
      for (const auto& n : ns) keys.emplace_back(LoopKey{a, n0, n});
    }
  }
  for (const auto& n : ns) keys.emplace_back(K0Key{n});
  for (int i = 1; i <= g.rank(); ++i) keys.emplace_back(KiKey{i});
  return keys;
}

}  // namespace toroidal
