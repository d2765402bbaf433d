#include "toroidal/modules/evaluation.hpp"

#include "toroidal/error.hpp"

namespace toroidal {

namespace {

void require_nonzero(const std::vector<Scalar>& z) {
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i].is_zero()) throw Error(Errc::ZeroPoint, "evaluation point component " + std::to_string(i) + " is zero");
  }
}

ToroidalAlgebra algebra_for(const std::vector<FiniteRep>& reps, const std::vector<EvalPoint>& points) {
  if (reps.empty()) throw Error(Errc::InvalidArgument, "evaluation module needs at least one factor");
  if (reps.size() != points.size()) throw Error(Errc::InvalidArgument, "one evaluation point per factor is required");
  const int r = points[0].rank();
  for (std::size_t j = 0; j < reps.size(); ++j) {
    if (points[j].rank() != r) throw Error(Errc::RankMismatch, "evaluation points have different lengths");
    if (reps[j].lie()->name() != reps[0].lie()->name() || reps[j].lie()->dimension() != reps[0].lie()->dimension()) {
      throw Error(Errc::InvalidArgument, "evaluation factors over different Lie algebras");
    }
  }
  if (r < 0) throw Error(Errc::InvalidArgument, "evaluation point needs z_0");
  return ToroidalAlgebra(reps[0].lie(), r);
}

}  // namespace

EvalPoint::EvalPoint(std::vector<Scalar> zs) : z(std::move(zs)) {
  if (z.empty()) throw Error(Errc::InvalidArgument, "evaluation point needs z_0");
  require_nonzero(z);
}

Scalar EvalPoint::monomial(int n0, const MultiIndex& n) const {
  if (n.rank() != rank()) throw Error(Errc::RankMismatch, "evaluation point rank");
  Scalar s = z[0].pow(n0);
  for (int i = 0; i < n.rank(); ++i) s *= z[static_cast<std::size_t>(i) + 1].pow(n[i]);
  return s;
}

RestrictedEvalPoint::RestrictedEvalPoint(std::vector<Scalar> zs) : z(std::move(zs)) { require_nonzero(z); }

Scalar RestrictedEvalPoint::monomial(const MultiIndex& n) const {
  if (n.rank() != rank()) throw Error(Errc::RankMismatch, "restricted evaluation point rank");
  Scalar s = 1;
  for (int i = 0; i < n.rank(); ++i) s *= z[static_cast<std::size_t>(i)].pow(n[i]);
  return s;
}

EvaluationModule::EvaluationModule(std::vector<FiniteRep> reps, std::vector<EvalPoint> points)
    : Module(algebra_for(reps, points)), reps_(std::move(reps)), points_(std::move(points)) {
  std::vector<std::size_t> dims;
  for (const auto& u : reps_) dims.push_back(u.dimension());
  index_ = TensorIndexer(std::move(dims));
}

std::string EvaluationModule::label(std::size_t i) const {
  std::vector<std::string> parts;
  for (std::size_t j = 0; j < reps_.size(); ++j) parts.push_back(reps_[j].label(index_.digit(i, j)));
  return tensor_label(parts);
}

std::optional<Weight> EvaluationModule::weight_of(std::size_t i) const {
  Weight w;
  w.cartan.assign(lie().cartan().size(), Scalar(0));
  for (std::size_t j = 0; j < reps_.size(); ++j) {
    const auto& wj = reps_[j].weight(index_.digit(i, j));
    if (!wj) return std::nullopt;
    for (std::size_t c = 0; c < wj->size(); ++c) w.cartan[c] += (*wj)[c];
  }
  w.k0 = [](const MultiIndex&) { return Scalar(0); };
  w.k.assign(static_cast<std::size_t>(rank()), Scalar(0));
  return w;
}

ModuleVector EvaluationModule::act_slot(const GeneratorKey& key, std::size_t i, std::size_t j) const {
  algebra().validate(key);
  ModuleVector out;
  const auto* g = std::get_if<LoopKey>(&key);
  if (!g) return out;
  const Scalar weight = points_[j].monomial(g->n0, g->n);
  for (const auto& [row, value] : reps_[j].column(g->basis, index_.digit(i, j))) {
    out.add(index_.replace(i, j, row), weight * value);
  }
  return out;
}

ModuleVector EvaluationModule::act_basis(const GeneratorKey& key, std::size_t i) const {
  ModuleVector out;
  if (is_central(key)) return out;
  for (std::size_t j = 0; j < reps_.size(); ++j) out += act_slot(key, i, j);
  return out;
}

std::vector<LaurentPoly> eval_annihilator(const std::vector<EvalPoint>& points) {
  if (points.empty()) throw Error(Errc::InvalidArgument, "no evaluation points");
  const auto width = points[0].z.size();
  std::vector<LaurentPoly> p(width, LaurentPoly::constant(1));
  for (const auto& pt : points) {
    if (pt.z.size() != width) throw Error(Errc::RankMismatch, "evaluation points have different lengths");
    for (std::size_t i = 0; i < width; ++i) p[i] *= LaurentPoly::linear(pt.z[i]);
  }
  return p;
}

std::vector<LaurentPoly> reduced_eval_annihilator(const std::vector<EvalPoint>& points) {
  auto p = eval_annihilator(points);
  for (auto& q : p) q = nonzero_root_radical(q);
  return p;
}

}  // namespace toroidal
