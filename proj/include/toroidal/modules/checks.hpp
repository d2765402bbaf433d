#pragma once

#include <optional>
#include <span>
#include <vector>

#include "toroidal/modules/module.hpp"
#include "toroidal/report.hpp"

namespace toroidal {

/// Least k <= max_k with x_a(n0, n)^k w = 0, or nullopt. `a` must be a
/// designated root vector. Throws NotWithinValidWindow when the next power
/// would leave a truncated module's valid window.
std::optional<int> nilpotency_check(const Module& W, int a, int n0, const MultiIndex& n, const ModuleVector& w,
                                    int max_k);

/// Every extended-Cartan generator (h(0, 0) for h in the Cartan basis, K0(n)
/// for n in [-radius, radius]^r, and each K_i) acts diagonally on every basis
/// vector with the declared eigenvalue. Throws MissingWeightData.
bool weight_space_check(const Module& W, int radius = 2);

/// u (v w) - v (u w) = [u, v] w for all pairs drawn from `keys` and all listed
/// basis vectors. Pairs whose two-step chain leaves the valid window are
/// counted as skipped.
Report representation_check(const Module& W, std::span<const GeneratorKey> keys, std::span<const std::size_t> basis);

/// Every generator key with loop modes n0 in [lo, hi], n in [lo, hi]^r, plus
/// K0(n) over the same n and all K_i.
std::vector<GeneratorKey> generator_window(const ToroidalAlgebra& g, int lo, int hi);

}  // namespace toroidal
