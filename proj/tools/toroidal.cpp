// toroidal: build modules from descriptors, apply generators, run verification suites.
//
//   toroidal build tests/data/tensor_r_e.json
//   toroidal apply --module eval.json --key "e(1,(1))" --vector v1
//   toroidal verify --suite delta-identities --window -4..4 --out report.json
//   toroidal verify --suite membership --module w.json --witness c_tau.json

#include <CLI11.hpp>

#include <array>
#include <fstream>
#include <iostream>

#include "toroidal/descriptor.hpp"
#include "toroidal/error.hpp"
#include "toroidal/modules/module.hpp"
#include "toroidal/suites.hpp"

namespace {

using namespace toroidal;

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, path + ": " + e.what());
  }
}

json build_summary(const LoadedModule& lm) {
  const Module& W = *lm.module;
  json j;
  j["kind"] = W.kind();
  j["algebra"] = W.lie().name();
  j["rank"] = W.rank();
  j["dimension"] = W.dimension();
  j["graded_dimensions"] = W.graded_dimensions();
  json basis = json::array();
  for (std::size_t i = 0; i < W.dimension() && i < 64; ++i) basis.push_back(W.label(i));
  j["basis"] = basis;
  if (W.dimension() > 64) j["basis_truncated"] = true;
  j["witness"] = lm.witness.to_json();
  json free = json::array();
  for (const auto& p : lm.witness.p) free.push_back(poly_roots_multiplicity_free(p));
  j["witness"]["multiplicity_free"] = free;
  return j;
}

void emit(const json& j, const std::string& out) {
  const std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error(Errc::InvalidArgument, "cannot write " + out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with toroidal Lie algebra modules"};
  app.require_subcommand(1);

  std::string build_path;
  auto* build = app.add_subcommand("build", "Construct a module and print its summary");
  build->add_option("descriptor", build_path, "Module descriptor (JSON)")->required();

  std::string apply_module, apply_key, apply_vector;
  auto* apply = app.add_subcommand("apply", "Apply a generator to a vector");
  apply->add_option("--module", apply_module, "Module descriptor (JSON)")->required();
  apply->add_option("--key", apply_key, "Generator, e.g. e(1,(1)), K0((2)), K1")->required();
  apply->add_option("--vector", apply_vector, "Basis label, #index or a JSON {label: scalar} map")->required();

  SuiteConfig config;
  std::string suite_window, suite_module, suite_witness, suite_algebra, suite_out;
  auto* verify = app.add_subcommand("verify", "Run a verification suite and write its JSON report");
  verify->add_option("--suite", config.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--window", suite_window, "Window lo..hi");
  verify->add_option("--seed", config.seed, "Seed for sampled elements and vectors");
  verify->add_option("--out", suite_out, "Report path (default stdout)");
  verify->add_option("--module", suite_module, "Module descriptor (JSON)");
  verify->add_option("--witness", suite_witness, "Category witness (JSON), overriding the module's");
  verify->add_option("--algebra", suite_algebra, "sl2, sl3 or a JSON structure-constant table");
  verify->add_option("--rank", config.rank, "Rank r for suites that build their own algebra")->check(CLI::Range(1, 4));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  if (*build) {
    LoadedModule lm;
    try {
      lm = load_module_file(build_path);
    } catch (const Error& e) {
      std::cerr << "toroidal build: " << e.what() << "\n";
      return kExitConfig;
    }
    emit(build_summary(lm), "");
    return 0;
  }

  if (*apply) {
    LoadedModule lm;
    GeneratorKey key;
    ModuleVector v;
    try {
      lm = load_module_file(apply_module);
      key = lm.module->algebra().parse_key(apply_key);
      lm.module->algebra().validate(key);
      const json vj = json::accept(apply_vector) ? json::parse(apply_vector) : json(apply_vector);
      v = lm.module->parse_vector(vj);
    } catch (const Error& e) {
      std::cerr << "toroidal apply: " << e.what() << "\n";
      return kExitConfig;
    }
    try {
      const std::array<int, 1> step{lowering(key)};
      require_within_valid_window(*lm.module, v, step);
      emit(lm.module->vector_json(lm.module->apply(key, v)), "");
    } catch (const Error& e) {
      std::cerr << "toroidal apply: " << e.what() << "\n";
      return kExitFail;
    }
    return 0;
  }

  try {
    if (!suite_window.empty()) config.window = parse_range(suite_window);
    if (!suite_module.empty()) config.module = load_module_file(suite_module);
    if (!suite_witness.empty()) {
      if (!config.module) throw Error(Errc::InvalidArgument, "--witness needs --module");
      config.module->witness = CategoryWitness::from_json(read_json(suite_witness));
      config.module->witness.validate(config.module->module->rank());
    }
    if (!suite_algebra.empty()) {
      if (suite_algebra.ends_with(".json")) {
        config.algebra = load_algebra(read_json(suite_algebra));
      } else {
        config.algebra = load_algebra(json(suite_algebra));
      }
    }
  } catch (const Error& e) {
    std::cerr << "toroidal verify: " << e.what() << "\n";
    return kExitConfig;
  }

  json report;
  try {
    report = run_suite(config);
  } catch (const Error& e) {
    report = {{"suite", config.suite}, {"pass", false}, {"error", e.what()}};
    std::cerr << "toroidal verify: " << e.what() << "\n";
  }
  try {
    emit(report, suite_out);
  } catch (const Error& e) {
    std::cerr << "toroidal verify: " << e.what() << "\n";
    return kExitConfig;
  }
  if (!suite_out.empty()) {
    std::cout << config.suite << ": " << (report["pass"].get<bool>() ? "pass" : "FAIL");
    if (report.contains("checks")) std::cout << " (" << report["checks"] << " checks, " << report["skipped"] << " skipped)";
    std::cout << "\n";
  }
  return report["pass"].get<bool>() ? 0 : kExitFail;
}
