#include "toroidal/modules/tensor.hpp"

#include <algorithm>

#include "toroidal/error.hpp"

namespace toroidal {

namespace {

bool same_lie(const SimpleLieData& a, const SimpleLieData& b) {
  return &a == &b || (a.name() == b.name() && a.dimension() == b.dimension());
}

std::vector<std::size_t> dims_of(const std::vector<ModulePtr>& mods) {
  std::vector<std::size_t> dims;
  for (const auto& m : mods) dims.push_back(m->dimension());
  return dims;
}

ToroidalAlgebra restricted_eval_algebra(const std::vector<ModulePtr>& factors,
                                        const std::vector<RestrictedEvalPoint>& points) {
  if (factors.empty()) throw Error(Errc::InvalidArgument, "restricted evaluation module needs at least one factor");
  if (factors.size() != points.size()) throw Error(Errc::InvalidArgument, "one point per factor is required");
  const int r = points[0].rank();
  for (std::size_t j = 0; j < factors.size(); ++j) {
    if (!factors[j]) throw Error(Errc::InvalidArgument, "null factor");
    if (factors[j]->rank() != 0) throw Error(Errc::RankMismatch, "restricted evaluation factors must be ĝ-modules (rank 0)");
    if (points[j].rank() != r) throw Error(Errc::RankMismatch, "restricted evaluation points have different lengths");
    if (!same_lie(factors[j]->lie(), factors[0]->lie())) throw Error(Errc::InvalidArgument, "factors over different Lie algebras");
    if (!factors[j]->restriction_bound(0, MultiIndex(), std::size_t{0})) {
      throw Error(Errc::MissingRestrictionBound, "factor " + std::to_string(j) + " (" + factors[j]->kind() +
                                                     ") declares no restriction bound");
    }
  }
  return ToroidalAlgebra(factors[0]->algebra().lie_ptr(), r);
}

ToroidalAlgebra tensor_algebra(const std::vector<ModulePtr>& parts) {
  if (parts.empty()) throw Error(Errc::InvalidArgument, "tensor product needs at least one part");
  for (const auto& p : parts) {
    if (!p) throw Error(Errc::InvalidArgument, "null tensor part");
    if (p->rank() != parts[0]->rank()) throw Error(Errc::RankMismatch, "tensor parts have different ranks");
    if (!same_lie(p->lie(), parts[0]->lie())) throw Error(Errc::InvalidArgument, "tensor parts over different Lie algebras");
  }
  return parts[0]->algebra();
}

}  // namespace

RestrictedEvalModule::RestrictedEvalModule(std::vector<ModulePtr> factors, std::vector<RestrictedEvalPoint> points)
    : Module(restricted_eval_algebra(factors, points)),
      factors_(std::move(factors)),
      points_(std::move(points)),
      index_(dims_of(factors_)) {}

std::string RestrictedEvalModule::label(std::size_t i) const {
  std::vector<std::string> parts;
  for (std::size_t j = 0; j < factors_.size(); ++j) parts.push_back(factors_[j]->label(index_.digit(i, j)));
  return tensor_label(parts);
}

std::optional<Weight> RestrictedEvalModule::weight_of(std::size_t i) const {
  Weight w;
  w.cartan.assign(lie().cartan().size(), Scalar(0));
  std::vector<Weight> slot;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    auto wj = factors_[j]->weight_of(index_.digit(i, j));
    if (!wj) return std::nullopt;
    for (std::size_t c = 0; c < wj->cartan.size(); ++c) w.cartan[c] += wj->cartan[c];
    slot.push_back(std::move(*wj));
  }
  w.k0 = [slot, points = points_](const MultiIndex& n) {
    Scalar s = 0;
    for (std::size_t j = 0; j < slot.size(); ++j) s += points[j].monomial(n) * slot[j].k0(MultiIndex());
    return s;
  };
  w.k.assign(static_cast<std::size_t>(rank()), Scalar(0));
  return w;
}

std::optional<int> RestrictedEvalModule::restriction_bound(int a, const MultiIndex&, std::size_t i) const {
  int bound = kVanishingBound;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    auto b = factors_[j]->restriction_bound(a, MultiIndex(), index_.digit(i, j));
    if (!b) throw Error(Errc::MissingRestrictionBound, "factor " + std::to_string(j));
    bound = std::max(bound, *b);
  }
  return bound;
}

std::optional<int> RestrictedEvalModule::restricted_part_bound(std::size_t i) const {
  return restriction_bound(0, MultiIndex::zero(rank()), i);
}

std::vector<int> RestrictedEvalModule::degree_profile(std::size_t i) const {
  std::vector<int> out;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    const auto d = factors_[j]->degree_profile(index_.digit(i, j));
    out.insert(out.end(), d.begin(), d.end());
  }
  return out;
}

std::vector<int> RestrictedEvalModule::depth_profile() const {
  std::vector<int> out;
  for (const auto& f : factors_) {
    const auto d = f->depth_profile();
    out.insert(out.end(), d.begin(), d.end());
  }
  return out;
}

ModuleVector RestrictedEvalModule::act_basis(const GeneratorKey& key, std::size_t i) const {
  ModuleVector out;
  GeneratorKey local;
  MultiIndex n;
  if (const auto* g = std::get_if<LoopKey>(&key)) {
    local = LoopKey{g->basis, g->n0, MultiIndex()};
    n = g->n;
  } else if (const auto* k0 = std::get_if<K0Key>(&key)) {
    local = K0Key{MultiIndex()};
    n = k0->n;
  } else {
    return out;
  }
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    const Scalar weight = points_[j].monomial(n);
    const ModuleVector image = factors_[j]->act(local, index_.digit(i, j));
    for (const auto& [k, c] : image.terms()) {
      out.add(index_.replace(i, j, k), weight * c);
    }
  }
  return out;
}

TensorModule::TensorModule(std::vector<ModulePtr> parts)
    : Module(tensor_algebra(parts)), parts_(std::move(parts)), index_(dims_of(parts_)) {}

std::string TensorModule::label(std::size_t i) const {
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < parts_.size(); ++j) labels.push_back(parts_[j]->label(index_.digit(i, j)));
  return tensor_label(labels);
}

std::size_t TensorModule::compose(const std::vector<std::size_t>& digits) const {
  if (digits.size() != parts_.size()) throw Error(Errc::InvalidArgument, "one digit per tensor part is required");
  std::size_t i = 0;
  for (std::size_t j = 0; j < digits.size(); ++j) i = index_.replace(i, j, digits[j]);
  return i;
}

std::optional<Weight> TensorModule::weight_of(std::size_t i) const {
  Weight w;
  w.cartan.assign(lie().cartan().size(), Scalar(0));
  w.k.assign(static_cast<std::size_t>(rank()), Scalar(0));
  std::vector<Weight> slot;
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    auto wj = parts_[j]->weight_of(index_.digit(i, j));
    if (!wj) return std::nullopt;
    for (std::size_t c = 0; c < wj->cartan.size(); ++c) w.cartan[c] += wj->cartan[c];
    for (std::size_t c = 0; c < wj->k.size(); ++c) w.k[c] += wj->k[c];
    slot.push_back(std::move(*wj));
  }
  w.k0 = [slot](const MultiIndex& n) {
    Scalar s = 0;
    for (const auto& wj : slot) s += wj.k0(n);
    return s;
  };
  return w;
}

std::optional<int> TensorModule::restriction_bound(int a, const MultiIndex& n, std::size_t i) const {
  int bound = kVanishingBound;
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    auto b = parts_[j]->restriction_bound(a, n, index_.digit(i, j));
    if (!b) return std::nullopt;
    bound = std::max(bound, *b);
  }
  return bound;
}

std::optional<int> TensorModule::restricted_part_bound(std::size_t i) const {
  int bound = kVanishingBound;
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    auto b = parts_[j]->restricted_part_bound(index_.digit(i, j));
    if (!b) return std::nullopt;
    bound = std::max(bound, *b);
  }
  return bound;
}

std::vector<int> TensorModule::degree_profile(std::size_t i) const {
  std::vector<int> out;
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    const auto d = parts_[j]->degree_profile(index_.digit(i, j));
    out.insert(out.end(), d.begin(), d.end());
  }
  return out;
}

std::vector<int> TensorModule::depth_profile() const {
  std::vector<int> out;
  for (const auto& p : parts_) {
    const auto d = p->depth_profile();
    out.insert(out.end(), d.begin(), d.end());
  }
  return out;
}

ModuleVector TensorModule::act_part(const GeneratorKey& key, std::size_t i, std::size_t j) const {
  algebra().validate(key);
  ModuleVector out;
  const ModuleVector image = parts_.at(j)->act(key, index_.digit(i, j));
  for (const auto& [k, c] : image.terms()) out.add(index_.replace(i, j, k), c);
  return out;
}

ModuleVector TensorModule::act_basis(const GeneratorKey& key, std::size_t i) const {
  ModuleVector out;
  for (std::size_t j = 0; j < parts_.size(); ++j) out += act_part(key, i, j);
  return out;
}

}  // namespace toroidal
