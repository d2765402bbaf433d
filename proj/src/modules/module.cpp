#include "toroidal/modules/module.hpp"

#include <algorithm>
#include <numeric>

#include "toroidal/error.hpp"

namespace toroidal {

ModuleVector ModuleVector::basis(std::size_t i, const Scalar& c) {
  ModuleVector v;
  v.add(i, c);
  return v;
}

void ModuleVector::add(std::size_t i, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void ModuleVector::add_scaled(const ModuleVector& v, const Scalar& c) {
  if (c.is_zero()) return;
  for (const auto& [i, x] : v.terms_) add(i, x * c);
}

Scalar ModuleVector::coeff(std::size_t i) const {
  auto it = terms_.find(i);
  return it == terms_.end() ? Scalar(0) : it->second;
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& rhs) {
  for (const auto& [i, c] : rhs.terms_) add(i, c);
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& rhs) {
  for (const auto& [i, c] : rhs.terms_) add(i, -c);
  return *this;
}

ModuleVector& ModuleVector::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [i, c] : terms_) c *= s;
  return *this;
}

std::optional<std::size_t> Module::find_label(std::string_view label) const {
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (this->label(i) == label) return i;
  }
  return std::nullopt;
}

ModuleVector Module::act(const GeneratorKey& key, std::size_t i) const {
  algebra_.validate(key);
  if (i >= dimension()) throw Error(Errc::IndexOutOfRange, "basis vector " + std::to_string(i));
  return act_basis(key, i);
}

ModuleVector Module::apply(const GeneratorKey& key, const ModuleVector& v) const {
  algebra_.validate(key);
  ModuleVector out;
  for (const auto& [i, c] : v.terms()) out.add_scaled(act(key, i), c);
  return out;
}

ModuleVector Module::apply(const ToroidalElement& u, const ModuleVector& v) const {
  ModuleVector out;
  for (const auto& [k, c] : u.terms()) out.add_scaled(apply(k, v), c);
  return out;
}

std::optional<int> Module::vector_restriction_bound(int a, const MultiIndex& n, const ModuleVector& v) const {
  int bound = kVanishingBound;
  for (const auto& [i, c] : v.terms()) {
    auto b = restriction_bound(a, n, i);
    if (!b) return std::nullopt;
    bound = std::max(bound, *b);
  }
  return bound;
}

std::optional<int> Module::vector_restricted_part_bound(const ModuleVector& v) const {
  int bound = kVanishingBound;
  for (const auto& [i, c] : v.terms()) {
    auto b = restricted_part_bound(i);
    if (!b) return std::nullopt;
    bound = std::max(bound, *b);
  }
  return bound;
}

json Module::vector_json(const ModuleVector& v) const {
  json j = json::object();
  for (const auto& [i, c] : v.terms()) j[label(i)] = c.str();
  return j;
}

std::string Module::vector_str(const ModuleVector& v) const {
  if (v.is_zero()) return "0";
  std::string s;
  for (const auto& [i, c] : v.terms()) {
    if (!s.empty()) s += " + ";
    if (!c.is_one()) s += "(" + c.str() + ")*";
    s += label(i);
  }
  return s;
}

ModuleVector Module::parse_vector(const json& j) const {
  auto index_of = [&](const std::string& text) -> std::size_t {
    if (!text.empty() && text[0] == '#') {
      try {
        const auto idx = static_cast<std::size_t>(std::stoul(text.substr(1)));
        if (idx < dimension()) return idx;
      } catch (const std::exception&) {
      }
      throw Error(Errc::InvalidDescriptor, "field 'vector': bad basis index '" + text + "'");
    }
    auto idx = find_label(text);
    if (!idx) throw Error(Errc::InvalidDescriptor, "field 'vector': unknown basis label '" + text + "'");
    return *idx;
  };
  if (j.is_string()) return ModuleVector::basis(index_of(j.get<std::string>()));
  if (!j.is_object()) throw Error(Errc::InvalidDescriptor, "field 'vector': expected a label or {label: scalar}");
  ModuleVector v;
  for (const auto& [label, c] : j.items()) v.add(index_of(label), scalar_field(c, "vector"));
  return v;
}

std::vector<std::size_t> Module::graded_dimensions() const {
  if (!truncated()) return {dimension()};
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i < dimension(); ++i) {
    const auto prof = degree_profile(i);
    const auto d = static_cast<std::size_t>(std::accumulate(prof.begin(), prof.end(), 0));
    if (dims.size() <= d) dims.resize(d + 1, 0);
    ++dims[d];
  }
  return dims;
}

int lowering(const GeneratorKey& key) {
  if (const auto* g = std::get_if<LoopKey>(&key)) return g->n0 < 0 ? -g->n0 : 0;
  return 0;
}

int lowering(const ToroidalElement& u) {
  int worst = 0;
  for (const auto& [k, c] : u.terms()) worst = std::max(worst, lowering(k));
  return worst;
}

bool within_valid_window(const Module& m, std::size_t i, std::span<const int> steps) {
  const auto depth = m.depth_profile();
  if (depth.empty()) return true;
  const int rise = std::accumulate(steps.begin(), steps.end(), 0);
  const auto degree = m.degree_profile(i);
  for (std::size_t f = 0; f < depth.size(); ++f) {
    if (degree[f] + rise > depth[f]) return false;
  }
  return true;
}

bool within_valid_window(const Module& m, const ModuleVector& v, std::span<const int> steps) {
  for (const auto& [i, c] : v.terms()) {
    if (!within_valid_window(m, i, steps)) return false;
  }
  return true;
}

void require_within_valid_window(const Module& m, const ModuleVector& v, std::span<const int> steps) {
  if (!within_valid_window(m, v, steps)) {
    throw Error(Errc::NotWithinValidWindow,
                "a chain of " + std::to_string(steps.size()) + " generators on " + m.vector_str(v) +
                    " would exceed the truncation depth");
  }
}

TensorIndexer::TensorIndexer(std::vector<std::size_t> dims) : dims_(std::move(dims)), strides_(dims_.size()) {
  for (std::size_t s = dims_.size(); s-- > 0;) {
    strides_[s] = size_;
    size_ *= dims_[s];
  }
}

std::string tensor_label(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += "⊗";
    s += p;
  }
  return s;
}

}  // namespace toroidal
