#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toroidal/core/json.hpp"
#include "toroidal/descriptor.hpp"
#include "toroidal/formal/window.hpp"

namespace toroidal {

/// Settings shared by every verification suite. Unset fields fall back to
/// suite-specific defaults.
struct SuiteConfig {
  std::string suite;
  LieDataPtr algebra;                  // default sl2
  int rank = 2;                        // for suites that build their own algebra
  std::optional<LoadedModule> module;  // default depends on the suite
  std::optional<Range> window;
  std::uint64_t seed = 1;
};

const std::vector<std::string>& suite_names();

/// Runs the named suite and returns its report (the report schema plus
/// "suite" and "checks"/"skipped" counters). Throws Error(InvalidArgument)
/// for an unknown suite.
json run_suite(const SuiteConfig& config);

/// Modules used when a suite is run without --module.
LoadedModule default_split_module();  // (induced V(0), level 1, depth 4, z=(2)) ⊗ eval(V(1), z=(3,5))
LoadedModule default_eval_module();   // eval V(1) ⊗ V(2) at (2,3), (5,7)

/// Basis vectors whose total degree is at most max_degree.
std::vector<ModuleVector> low_degree_basis(const Module& W, int max_degree);

}  // namespace toroidal
