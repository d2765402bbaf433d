#include "toroidal/descriptor.hpp"

#include <fstream>

#include "toroidal/error.hpp"
#include "toroidal/modules/evaluation.hpp"
#include "toroidal/modules/induced.hpp"

namespace toroidal {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw Error(Errc::InvalidDescriptor, "field '" + path + "': " + what);
}

std::string join(const std::string& path, const std::string& field) { return path.empty() ? field : path + "." + field; }

const json& require(const json& j, const std::string& path, const std::string& field) {
  if (!j.is_object()) bad(path.empty() ? "<root>" : path, "expected an object");
  if (!j.contains(field)) bad(join(path, field), "missing");
  return j.at(field);
}

int int_field(const json& j, const std::string& path, const std::string& field) {
  const auto& v = require(j, path, field);
  if (!v.is_number_integer()) bad(join(path, field), "expected an integer");
  return v.get<int>();
}

Scalar scalar_at(const json& v, const std::string& path) { return scalar_field(v, path); }

std::vector<Scalar> point_field(const json& j, const std::string& path) {
  const auto& z = require(j, path, "z");
  const std::string zp = join(path, "z");
  if (!z.is_array()) bad(zp, "expected an array of scalars");
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const std::string ip = zp + "[" + std::to_string(i) + "]";
    out.push_back(scalar_at(z[i], ip));
    if (out.back().is_zero()) bad(ip, "evaluation points must be nonzero");
  }
  return out;
}

FiniteRep rep_field(const json& j, const std::string& path, const LieDataPtr& lie) {
  if (j.contains("m")) {
    const int m = int_field(j, path, "m");
    if (lie->name() != "sl2") bad(join(path, "m"), "highest weights are only supported for sl2; use \"rep\"");
    if (m < 0) bad(join(path, "m"), "must be non-negative");
    return FiniteRep::sl2_irrep(m);
  }
  if (!j.contains("rep")) bad(join(path, "m"), "missing (give \"m\" or \"rep\")");
  const auto& r = j["rep"];
  if (!r.is_string()) bad(join(path, "rep"), "expected a string");
  const auto name = r.get<std::string>();
  try {
    if (name == "defining") return FiniteRep::defining(lie);
    if (name == "adjoint") return FiniteRep::adjoint(lie);
    if (name == "trivial") return FiniteRep::trivial(lie);
  } catch (const Error& e) {
    bad(join(path, "rep"), e.what());
  }
  bad(join(path, "rep"), "unknown representation '" + name + "'");
}

LieDataPtr algebra_at(const json& j, const std::string& path, const LieDataPtr& inherited) {
  if (!j.is_object() || !j.contains("g")) return inherited;
  try {
    return load_algebra(j["g"]);
  } catch (const Error& e) {
    bad(join(path, "g"), e.what());
  }
}

LaurentPoly product_radical(const std::vector<LaurentPoly>& polys) {
  LaurentPoly p = LaurentPoly::constant(1);
  for (const auto& q : polys) p *= q;
  return nonzero_root_radical(p);
}

CategoryWitness combine_witnesses(const std::vector<CategoryWitness>& parts, int rank) {
  bool all_eval = true;
  bool all_restricted = true;
  std::vector<LaurentPoly> p0s;
  for (const auto& w : parts) {
    all_eval = all_eval && (w.tag == CategoryTag::E_tau || w.tag == CategoryTag::E_tau_prime);
    all_restricted = all_restricted && w.tag == CategoryTag::R_tilde;
    if (w.p0) p0s.push_back(*w.p0);
  }
  CategoryWitness out;
  out.tag = all_eval ? CategoryTag::E_tau_prime : all_restricted ? CategoryTag::R_tilde : CategoryTag::C_tau;
  if (!all_restricted) out.p0 = product_radical(p0s);
  for (int i = 0; i < rank; ++i) {
    std::vector<LaurentPoly> pis;
    for (const auto& w : parts) pis.push_back(w.p[static_cast<std::size_t>(i)]);
    out.p.push_back(product_radical(pis));
  }
  return out;
}

LoadedModule load_at(const json& j, const std::string& path, const LieDataPtr& inherited);

LoadedModule load_eval(const json& j, const std::string& path, const LieDataPtr& lie) {
  const auto& factors = require(j, path, "factors");
  const std::string fp = join(path, "factors");
  if (!factors.is_array() || factors.empty()) bad(fp, "expected a non-empty array");
  std::vector<FiniteRep> reps;
  std::vector<EvalPoint> points;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const std::string kp = fp + "[" + std::to_string(k) + "]";
    const auto g = algebra_at(factors[k], kp, lie);
    reps.push_back(rep_field(factors[k], kp, g));
    auto z = point_field(factors[k], kp);
    if (z.empty()) bad(join(kp, "z"), "needs at least z_0");
    if (!points.empty() && z.size() != points[0].z.size()) bad(join(kp, "z"), "all points need the same length");
    points.emplace_back(std::move(z));
  }
  auto module = std::make_shared<EvaluationModule>(std::move(reps), points);
  const auto p = reduced_eval_annihilator(points);
  CategoryWitness w{CategoryTag::E_tau_prime, p[0], std::vector<LaurentPoly>(p.begin() + 1, p.end())};
  return {module, w};
}

LoadedModule load_induced(const json& j, const std::string& path, const LieDataPtr& lie) {
  const auto rep = rep_field(j, path, lie);
  const Scalar level = scalar_at(require(j, path, "level"), join(path, "level"));
  const int depth = int_field(j, path, "depth");
  if (depth < 0) bad(join(path, "depth"), "must be non-negative");
  return {std::make_shared<InducedModule>(rep, level, depth), CategoryWitness{CategoryTag::R_tilde, std::nullopt, {}}};
}

LoadedModule load_restricted(const json& j, const std::string& path, const LieDataPtr& lie) {
  const auto& factors = require(j, path, "factors");
  const std::string fp = join(path, "factors");
  if (!factors.is_array() || factors.empty()) bad(fp, "expected a non-empty array");
  std::vector<ModulePtr> mods;
  std::vector<RestrictedEvalPoint> points;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const std::string kp = fp + "[" + std::to_string(k) + "]";
    const auto g = algebra_at(factors[k], kp, lie);
    auto inner = load_at(require(factors[k], kp, "module"), join(kp, "module"), g);
    if (inner.module->rank() != 0) bad(join(kp, "module"), "restricted evaluation factors must be rank-0 modules");
    mods.push_back(inner.module);
    auto z = point_field(factors[k], kp);
    if (!points.empty() && z.size() != points[0].z.size()) bad(join(kp, "z"), "all points need the same length");
    points.emplace_back(std::move(z));
  }
  const int r = points[0].rank();
  ModulePtr module;
  try {
    module = std::make_shared<RestrictedEvalModule>(std::move(mods), points);
  } catch (const Error& e) {
    bad(fp, e.what());
  }
  CategoryWitness w{CategoryTag::R_tilde, std::nullopt, {}};
  for (int i = 0; i < r; ++i) {
    std::vector<LaurentPoly> lin;
    for (const auto& pt : points) lin.push_back(LaurentPoly::linear(pt.z[static_cast<std::size_t>(i)]));
    w.p.push_back(product_radical(lin));
  }
  return {module, w};
}

LoadedModule load_tensor(const json& j, const std::string& path, const LieDataPtr& lie) {
  const auto& parts = require(j, path, "parts");
  const std::string pp = join(path, "parts");
  if (!parts.is_array() || parts.empty()) bad(pp, "expected a non-empty array");
  std::vector<ModulePtr> mods;
  std::vector<CategoryWitness> witnesses;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    auto part = load_at(parts[k], pp + "[" + std::to_string(k) + "]", lie);
    mods.push_back(part.module);
    witnesses.push_back(part.witness);
  }
  ModulePtr module;
  try {
    module = std::make_shared<TensorModule>(std::move(mods));
  } catch (const Error& e) {
    bad(pp, e.what());
  }
  return {module, combine_witnesses(witnesses, module->rank())};
}

LoadedModule load_at(const json& j, const std::string& path, const LieDataPtr& inherited) {
  const auto lie = algebra_at(j, path, inherited);
  const auto& type = require(j, path, "type");
  if (!type.is_string()) bad(join(path, "type"), "expected a string");
  const auto t = type.get<std::string>();
  LoadedModule out;
  if (t == "eval") out = load_eval(j, path, lie);
  else if (t == "induced") out = load_induced(j, path, lie);
  else if (t == "restricted_eval") out = load_restricted(j, path, lie);
  else if (t == "tensor") out = load_tensor(j, path, lie);
  else bad(join(path, "type"), "unknown module type '" + t + "'");
  if (j.contains("witness")) {
    try {
      out.witness = CategoryWitness::from_json(j["witness"]);
      out.witness.validate(out.module->rank());
    } catch (const Error& e) {
      bad(join(path, "witness"), e.what());
    }
  }
  return out;
}

}  // namespace

LieDataPtr load_algebra(const json& g) {
  if (g.is_string()) return builtin_algebra(g.get<std::string>());
  if (g.is_object()) return std::make_shared<const SimpleLieData>(SimpleLieData::from_json(g));
  throw Error(Errc::InvalidDescriptor, "algebra must be a name or a structure-constant table");
}

LoadedModule load_module(const json& descriptor) { return load_at(descriptor, "", builtin_algebra("sl2")); }

LoadedModule load_module_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidDescriptor, "cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, path.string() + ": " + e.what());
  }
  return load_module(j);
}

}  // namespace toroidal
