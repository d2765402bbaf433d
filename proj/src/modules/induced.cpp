#include "toroidal/modules/induced.hpp"

#include <algorithm>
#include <functional>

#include "toroidal/error.hpp"

namespace toroidal {

int InducedModule::Monomial::degree() const {
  int d = 0;
  for (const auto& f : factors) d += f.first;
  return d;
}

InducedModule::InducedModule(FiniteRep u, Scalar level, int depth)
    : Module(ToroidalAlgebra(u.lie(), 0)), u_(std::move(u)), level_(std::move(level)), depth_(depth) {
  if (depth_ < 0) throw Error(Errc::InvalidArgument, "depth must be non-negative");
  const int dim = u_.lie()->dimension();
  std::vector<std::pair<int, int>> letters;
  for (int m = 1; m <= depth_; ++m) {
    for (int i = 0; i < dim; ++i) letters.emplace_back(m, i);
  }
  std::vector<std::vector<std::pair<int, int>>> words;
  std::vector<std::pair<int, int>> cur;
  std::function<void(std::size_t, int)> grow = [&](std::size_t from, int budget) {
    words.push_back(cur);
    for (std::size_t l = from; l < letters.size(); ++l) {
      if (letters[l].first > budget) break;
      cur.push_back(letters[l]);
      grow(l, budget - letters[l].first);
      cur.pop_back();
    }
  };
  grow(0, depth_);
  for (auto& w : words) {
    for (std::size_t k = 0; k < u_.dimension(); ++k) basis_.push_back(Monomial{w, k});
  }
  std::sort(basis_.begin(), basis_.end(), [](const Monomial& a, const Monomial& b) {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    if (a.factors != b.factors) return a.factors < b.factors;
    return a.u < b.u;
  });
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

std::string InducedModule::label(std::size_t i) const {
  const auto& w = basis_.at(i);
  std::string s;
  for (const auto& [m, a] : w.factors) s += lie().label(a) + "(" + std::to_string(-m) + ")";
  return s + u_.label(w.u);
}

std::optional<Weight> InducedModule::weight_of(std::size_t i) const {
  const auto& w = basis_.at(i);
  const auto& top = u_.weight(w.u);
  if (!top) return std::nullopt;
  Weight out;
  out.cartan = *top;
  for (const auto& [m, a] : w.factors) {
    auto wa = lie().cartan_weight(a);
    if (!wa) return std::nullopt;
    for (std::size_t c = 0; c < wa->size(); ++c) out.cartan[c] += (*wa)[c];
  }
  out.k0 = [level = level_](const MultiIndex&) { return level; };
  return out;
}

void InducedModule::add_action(Combination& out, int a, int n, const Combination& in, const Scalar& scale) const {
  for (const auto& [mono, c] : in) {
    const Scalar s = scale * c;
    for (const auto& [m2, c2] : act_monomial(a, n, mono)) {
      auto [it, inserted] = out.try_emplace(m2, s * c2);
      if (!inserted) {
        it->second += s * c2;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
}

const InducedModule::Combination& InducedModule::act_monomial(int a, int n, const Monomial& w) const {
  const auto key = std::make_tuple(a, n, w);
  {
    std::lock_guard lock(memo_mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return *it->second;
  }
  auto out = std::make_unique<Combination>();
  if (w.factors.empty()) {
    if (n < 0) {
      out->emplace(Monomial{{{-n, a}}, w.u}, Scalar(1));
    } else if (n == 0) {
      for (const auto& [row, value] : u_.column(a, w.u)) out->emplace(Monomial{{}, row}, value);
    }
  } else {
    const auto [m1, i1] = w.factors.front();
    Monomial rest{std::vector<std::pair<int, int>>(w.factors.begin() + 1, w.factors.end()), w.u};
    const std::pair<int, int> y{-n, a};
    if (n < 0 && y <= w.factors.front()) {
      Monomial longer = w;
      longer.factors.insert(longer.factors.begin(), y);
      out->emplace(std::move(longer), Scalar(1));
    } else {
      // a(n) X1 rest = X1 (a(n) rest) + [a(n), X1] rest
      add_action(*out, i1, -m1, act_monomial(a, n, rest), Scalar(1));
      const Combination just_rest{{rest, Scalar(1)}};
      for (const auto& t : lie().bracket_basis(a, i1)) add_action(*out, t.index, n - m1, just_rest, t.coeff);
      if (n == m1) {
        const Scalar central = Scalar(n) * lie().form(a, i1) * level_;
        if (!central.is_zero()) {
          auto [it, inserted] = out->try_emplace(rest, central);
          if (!inserted) {
            it->second += central;
            if (it->second.is_zero()) out->erase(it);
          }
        }
      }
    }
  }
  std::lock_guard lock(memo_mutex_);
  auto [it, inserted] = memo_.try_emplace(key, std::move(out));
  return *it->second;
}

ModuleVector InducedModule::act_basis(const GeneratorKey& key, std::size_t i) const {
  ModuleVector out;
  if (std::holds_alternative<K0Key>(key)) {
    out.add(i, level_);
    return out;
  }
  const auto* g = std::get_if<LoopKey>(&key);
  if (!g) return out;
  const int target = degree(i) - g->n0;
  if (target < 0 || target > depth_) return out;
  for (const auto& [mono, c] : act_monomial(g->basis, g->n0, basis_[i])) {
    auto it = index_.find(mono);
    if (it == index_.end()) throw Error(Errc::InvalidArgument, "internal: PBW monomial outside the basis");
    out.add(it->second, c);
  }
  return out;
}

}  // namespace toroidal
