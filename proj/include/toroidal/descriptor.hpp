#pragma once

#include <filesystem>

#include "toroidal/categories/categories.hpp"
#include "toroidal/core/json.hpp"
#include "toroidal/modules/tensor.hpp"

namespace toroidal {

/// A module built from a JSON descriptor together with the witness it is
/// declared (or constructed) to satisfy.
struct LoadedModule {
  ModulePtr module;
  CategoryWitness witness;
};

/// Lie algebra from a name ("sl2", "sl3") or an inline structure-constant table.
LieDataPtr load_algebra(const json& g);

/// Descriptor forms:
///   {"type": "eval", "factors": [{"m": 1, "z": ["2", "3"]}, ...]}
///   {"type": "induced", "m": 0, "level": "1", "depth": 4}
///   {"type": "restricted_eval", "factors": [{"module": {...}, "z": ["2"]}, ...]}
///   {"type": "tensor", "parts": [{...}, ...]}
/// "g" (default "sl2") may appear at any level and is inherited by nested
/// descriptors. Representations are given by "m" (sl2 highest weight) or
/// "rep": "defining" | "adjoint" | "trivial". An optional "witness" replaces
/// the constructed one:
///   eval: E_tau_prime with the reduced evaluation annihilators;
///   induced and restricted_eval: R_tilde with the distinct points per variable;
///   tensor: the product of the parts' polynomials (reduced), tagged C_tau
///           when evaluation and restricted parts are mixed.
/// Errors are Error(InvalidDescriptor) naming the offending field.
LoadedModule load_module(const json& descriptor);
LoadedModule load_module_file(const std::filesystem::path& path);

}  // namespace toroidal
