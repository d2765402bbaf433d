#include "toroidal/formal/commutator.hpp"

#include <array>
#include <utility>

#include "toroidal/error.hpp"
#include "toroidal/formal/delta.hpp"

namespace toroidal {

namespace {

struct Contribution {
  Scalar c;
  int mode = 0;  // mode of the y-series factor; unused for constant factors
};

// Contributions of one variable's kernel to the coefficient x^p y^q. When the
// variable also appears in a y-series the kernel's y exponent is completed by
// the series; otherwise it must equal q.
std::vector<Contribution> kernel_contributions(const DeltaExpr& kernel, int p, int q, bool series) {
  std::vector<Contribution> out;
  if (!series) {
    const Scalar c = kernel.coeff(p, q);
    if (!c.is_zero()) out.push_back({c, 0});
    return out;
  }
  for (const auto& t : kernel.terms()) {
    const int partner = DeltaExpr::partner_exponent(t, p);
    const long k = p - t.a;
    const Scalar c = t.c * falling_factorial(-k - 1, t.j);
    if (!c.is_zero()) out.push_back({c, mode_of_exponent(q - partner)});
  }
  return out;
}

// Σ over choices of one contribution per variable: (product of scalars, modes).
std::vector<std::pair<Scalar, std::vector<int>>> combine(const std::vector<std::vector<Contribution>>& per_var) {
  std::vector<std::pair<Scalar, std::vector<int>>> acc{{Scalar(1), {}}};
  for (const auto& options : per_var) {
    std::vector<std::pair<Scalar, std::vector<int>>> next;
    for (const auto& [c, modes] : acc) {
      for (const auto& o : options) {
        auto m = modes;
        m.push_back(o.mode);
        next.emplace_back(c * o.c, std::move(m));
      }
    }
    acc = std::move(next);
    if (acc.empty()) break;
  }
  return acc;
}

const DeltaExpr& plain_delta() {
  static const DeltaExpr d = DeltaExpr::delta(0);
  return d;
}

const DeltaExpr& delta_derivative() {
  static const DeltaExpr d = DeltaExpr::delta(1);
  return d;
}

// x^{-1} y^{-1} δ(x/y)
const DeltaExpr& shifted_delta() {
  static const DeltaExpr d = DeltaExpr::delta(0).times_monomial(-1, 0);
  return d;
}

void check_indices(const ToroidalAlgebra& g, int a, int b, std::size_t p, std::size_t q) {
  const int dim = g.lie().dimension();
  if (a < 0 || a >= dim || b < 0 || b >= dim) throw Error(Errc::IndexOutOfRange, "basis index outside g");
  if (p != static_cast<std::size_t>(g.rank()) || q != p) throw Error(Errc::RankMismatch, "exponent vectors must have rank r");
}

MultiIndex modes_of(const std::vector<int>& exps) {
  std::vector<int> out;
  out.reserve(exps.size());
  for (int e : exps) out.push_back(mode_of_exponent(e));
  return MultiIndex(std::move(out));
}

}  // namespace

ToroidalElement bracket_series_coefficient(const ToroidalAlgebra& g, int a, int b, int p0, const std::vector<int>& p,
                                           int q0, const std::vector<int>& q) {
  check_indices(g, a, b, p.size(), q.size());
  const int r = g.rank();
  const auto& lie = g.lie();
  ToroidalElement out;

  // [a,b](y0,y) Π y_i^{-1}δ(x_i/y_i)
  {
    std::vector<std::vector<Contribution>> per_var;
    per_var.push_back(kernel_contributions(plain_delta(), p0, q0, true));
    for (int i = 0; i < r; ++i) per_var.push_back(kernel_contributions(plain_delta(), p[i], q[i], true));
    for (const auto& [c, modes] : combine(per_var)) {
      const MultiIndex m(std::vector<int>(modes.begin() + 1, modes.end()));
      for (const auto& t : lie.bracket_basis(a, b)) out.add(LoopKey{t.index, modes[0], m}, c * t.coeff);
    }
  }

  const Scalar form = lie.form(a, b);
  if (form.is_zero()) return out;

  // ⟨a,b⟩ K0(y) ∂_{y0}(y0^{-1}δ(x0/y0)) Π_{i>=1} y_i^{-1}δ(x_i/y_i)
  {
    std::vector<std::vector<Contribution>> per_var;
    per_var.push_back(kernel_contributions(delta_derivative(), p0, q0, false));
    for (int i = 0; i < r; ++i) per_var.push_back(kernel_contributions(plain_delta(), p[i], q[i], true));
    for (const auto& [c, modes] : combine(per_var)) {
      out.add(K0Key{MultiIndex(std::vector<int>(modes.begin() + 1, modes.end()))}, form * c);
    }
  }

  // ⟨a,b⟩ x0^{-1}y0^{-1}δ(x0/y0) Σ_j K_j ∂_{yj}(y_j^{-1}δ(x_j/y_j)) Π_{i!=j} x_i^{-1}y_i^{-1}δ(x_i/y_i)
  const Scalar zero_part = shifted_delta().coeff(p0, q0);
  if (zero_part.is_zero()) return out;
  for (int j = 1; j <= r; ++j) {
    Scalar c = form * zero_part;
    for (int i = 1; i <= r && !c.is_zero(); ++i) {
      const DeltaExpr& kernel = i == j ? delta_derivative() : shifted_delta();
      c *= kernel.coeff(p[i - 1], q[i - 1]);
    }
    out.add(KiKey{j}, c);
  }
  return out;
}

Report bracket_series_report(const ToroidalAlgebra& g, int a, int b, const ExponentWindow& window) {
  if (window.rank() != g.rank()) throw Error(Errc::RankMismatch, "window rank differs from the algebra rank");
  Report report("bracket-series");
  report.window = window.to_json();
  report.extra = {{"a", g.lie().label(a)}, {"b", g.lie().label(b)}};
  window.for_each([&](int p0, const std::vector<int>& p) {
    const LoopKey ka{a, mode_of_exponent(p0), modes_of(p)};
    window.for_each([&](int q0, const std::vector<int>& q) {
      const LoopKey kb{b, mode_of_exponent(q0), modes_of(q)};
      const auto lhs = g.bracket(ka, kb);
      const auto rhs = bracket_series_coefficient(g, a, b, p0, p, q0, q);
      report.record(lhs == rhs, [&] {
        std::vector<int> exps{p0};
        exps.insert(exps.end(), p.begin(), p.end());
        exps.push_back(q0);
        exps.insert(exps.end(), q.begin(), q.end());
        return Counterexample{g.key_str(ka) + "," + g.key_str(kb), "", exps, g.element_str(lhs), g.element_str(rhs)};
      });
    });
  });
  return report;
}

Report commutator_series_report(const Module& W, int a, int b, const ModuleVector& w, const ExponentWindow& window) {
  const auto& g = W.algebra();
  if (window.rank() != g.rank()) throw Error(Errc::RankMismatch, "window rank differs from the module rank");
  Report report("commutator-series");
  report.window = window.to_json();
  report.extra = {{"a", g.lie().label(a)}, {"b", g.lie().label(b)}, {"w", W.vector_str(w)}};
  window.for_each([&](int p0, const std::vector<int>& p) {
    const LoopKey ka{a, mode_of_exponent(p0), modes_of(p)};
    window.for_each([&](int q0, const std::vector<int>& q) {
      const LoopKey kb{b, mode_of_exponent(q0), modes_of(q)};
      const std::array<int, 2> ab{lowering(kb), lowering(ka)};
      const std::array<int, 2> ba{lowering(ka), lowering(kb)};
      if (!within_valid_window(W, w, ab) || !within_valid_window(W, w, ba)) {
        report.skip();
        return;
      }
      const ModuleVector lhs = W.apply(ka, W.apply(kb, w)) - W.apply(kb, W.apply(ka, w));
      const ModuleVector rhs = W.apply(bracket_series_coefficient(g, a, b, p0, p, q0, q), w);
      report.record(lhs == rhs, [&] {
        std::vector<int> exps{p0};
        exps.insert(exps.end(), p.begin(), p.end());
        exps.push_back(q0);
        exps.insert(exps.end(), q.begin(), q.end());
        return Counterexample{g.key_str(ka) + "," + g.key_str(kb), W.vector_str(w), exps, W.vector_json(lhs),
                              W.vector_json(rhs)};
      });
    });
  });
  return report;
}

bool commutator_series_check(const Module& W, int a, int b, const ModuleVector& w, const ExponentWindow& window) {
  return commutator_series_report(W, a, b, w, window).pass();
}

FormalSeries<ModuleVector> commutator_series(const Module& W, int a, int b, const ModuleVector& w) {
  const int r = W.rank();
  const Module* mod = &W;
  return FormalSeries<ModuleVector>(2 * (r + 1), [mod, a, b, w, r](const std::vector<int>& e) {
    const LoopKey ka{a, mode_of_exponent(e[0]), modes_of(std::vector<int>(e.begin() + 1, e.begin() + 1 + r))};
    const LoopKey kb{b, mode_of_exponent(e[static_cast<std::size_t>(r + 1)]),
                     modes_of(std::vector<int>(e.begin() + 2 + r, e.end()))};
    const std::array<int, 2> ab{lowering(kb), lowering(ka)};
    const std::array<int, 2> ba{lowering(ka), lowering(kb)};
    require_within_valid_window(*mod, w, ab);
    require_within_valid_window(*mod, w, ba);
    return mod->apply(ka, mod->apply(kb, w)) - mod->apply(kb, mod->apply(ka, w));
  });
}

FormalSeries<ModuleVector> commutator_residue(const Module& W, int a, int b, const ModuleVector& w, int j) {
  const int r = W.rank();
  return commutator_series(W, a, b, w).times_difference_power(0, r + 1, j).residue(0, 0);
}

}  // namespace toroidal
