#include <doctest.h>

#include "toroidal/descriptor.hpp"
#include "toroidal/error.hpp"
#include "toroidal/suites.hpp"

using namespace toroidal;

namespace {

std::string error_of(const json& descriptor) {
  try {
    (void)load_module(descriptor);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("descriptors build every module type with default witnesses") {
  const auto eval = load_module(json::parse(R"({"type": "eval", "factors": [{"m": 1, "z": ["1", "1"]}, {"m": 1, "z": ["2", "1"]}]})"));
  CHECK(eval.module->dimension() == 4);
  CHECK(eval.witness.tag == CategoryTag::E_tau_prime);
  CHECK(eval.witness.p[0] == LaurentPoly::linear(1));

  const auto induced = load_module(json::parse(R"({"type": "induced", "m": 0, "level": "1", "depth": 2})"));
  CHECK(induced.module->graded_dimensions() == std::vector<std::size_t>{1, 3, 9});
  CHECK(induced.witness.tag == CategoryTag::R_tilde);

  const auto restricted = load_module(json::parse(R"({"type": "restricted_eval", "factors": [
      {"module": {"type": "induced", "m": 0, "level": "1", "depth": 1}, "z": ["2"]},
      {"module": {"type": "induced", "m": 0, "level": "1", "depth": 1}, "z": ["-3"]}]})"));
  const std::vector<Scalar> roots = {2, -3};
  CHECK(restricted.witness.p[0] == LaurentPoly::from_roots(roots));

  const auto tensor = load_module(json::parse(R"({"type": "tensor", "parts": [
      {"type": "restricted_eval", "factors": [{"module": {"type": "induced", "m": 0, "level": "1", "depth": 1}, "z": ["2"]}]},
      {"type": "eval", "factors": [{"m": 1, "z": ["3", "5"]}]}]})"));
  CHECK(tensor.witness.tag == CategoryTag::C_tau);
  CHECK(tensor.witness.p0 == LaurentPoly::linear(3));
  const std::vector<Scalar> both = {2, 5};
  CHECK(tensor.witness.p[0] == LaurentPoly::from_roots(both));

  const auto sl3 = load_module(json::parse(R"({"type": "eval", "g": "sl3", "factors": [{"rep": "adjoint", "z": ["2", "3"]}]})"));
  CHECK(sl3.module->dimension() == 8);
}

TEST_CASE("an explicit witness overrides the default") {
  const auto lm = load_module(json::parse(R"({"type": "eval", "factors": [{"m": 1, "z": ["2", "3"]}],
      "witness": {"category": "E_tau", "p0": {"1": "1", "0": "-2"}, "p": [{"1": "1", "0": "-3"}]}})"));
  CHECK(lm.witness.tag == CategoryTag::E_tau);
}

TEST_CASE("descriptor errors name the offending field") {
  CHECK(error_of(json::parse(R"({"factors": []})")).find("field 'type'") != std::string::npos);
  CHECK(error_of(json::parse(R"({"type": "eval", "factors": [{"m": 1, "z": ["2", "0"]}]})")).find("factors[0].z[1]") != std::string::npos);
  CHECK(error_of(json::parse(R"({"type": "eval", "factors": [{"m": 1, "z": ["2"]}, {"m": 1, "z": ["2", "3"]}]})")).find("factors[1].z") !=
        std::string::npos);
  CHECK(error_of(json::parse(R"({"type": "induced", "m": 0, "level": "1"})")).find("field 'depth'") != std::string::npos);
  CHECK(error_of(json::parse(R"({"type": "tensor", "parts": [{"type": "blob"}]})")).find("parts[0].type") != std::string::npos);
  CHECK(error_of(json::parse(R"({"type": "eval", "factors": [{"m": 1, "z": ["2", "3"]}], "witness": {"category": "C_tau", "p": []}})"))
            .find("field 'witness'") != std::string::npos);
  CHECK_THROWS_AS(load_module_file("/nonexistent/descriptor.json"), Error);
}

TEST_CASE("suites are deterministic and reject unknown names") {
  SuiteConfig config;
  config.suite = "vandermonde";
  config.seed = 5;
  const auto a = run_suite(config).dump();
  const auto b = run_suite(config).dump();
  CHECK(a == b);
  config.seed = 6;
  CHECK(run_suite(config).dump() != a);
  config.suite = "no-such-suite";
  CHECK_THROWS_AS(run_suite(config), Error);
}
