// Runs the ten acceptance criteria and prints one [PASS]/[FAIL] line each.
// Exit status is the number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "toroidal/error.hpp"
#include "toroidal/modules/checks.hpp"
#include "toroidal/modules/evaluation.hpp"
#include "toroidal/suites.hpp"

using namespace toroidal;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

json run(const std::string& suite, const std::function<void(SuiteConfig&)>& tweak = {}) {
  SuiteConfig config;
  config.suite = suite;
  if (tweak) tweak(config);
  return run_suite(config);
}

bool passed(const json& report) { return report.value("pass", false); }

std::string counts(const json& report) {
  std::ostringstream os;
  os << report.value("checks", 0) << " checks, " << report.value("skipped", 0) << " skipped";
  if (!passed(report) && !report["counterexamples"].empty()) os << "; first failure " << report["counterexamples"][0].dump();
  return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fixed(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << " s";
  return os.str();
}

Outcome c1() {
  const auto start = std::chrono::steady_clock::now();
  const auto r = run("bracket-jacobi", [](SuiteConfig& c) {
    c.rank = 2;
    c.window = Range{-3, 3};
  });
  const double t = seconds_since(start);
  // 100 triples per algebra, antisymmetry and Jacobi each
  const bool shape = r["checks"] == 400 && r["samples"].size() == 2;
  return {passed(r) && shape && t < 10, counts(r) + ", " + fixed(t)};
}

Outcome c2() {
  const auto r = run("eq2.3-coefficients", [](SuiteConfig& c) { c.rank = 2; });
  // 9 pairs × (7·5·5)^2 coefficient pairs
  const bool full = r["checks"] == 9 * 175 * 175 && r["skipped"] == 0;
  return {passed(r) && full, counts(r)};
}

Outcome c3() {
  const auto r = run("lemma3.2-center", [](SuiteConfig& c) {
    c.rank = 2;
    c.window = Range{-3, 3};
  });
  // factor multisets of size 1..3 from {V(0), V(1), V(2)}: 3 + 6 + 10
  const bool all = r["samples"].size() == 19;
  return {passed(r) && all && r["checks"] > 0, counts(r) + ", " + std::to_string(r["samples"].size()) + " modules"};
}

Outcome c4() {
  const auto r = run("annihilators", [](SuiteConfig& c) {
    c.rank = 2;
    c.window = Range{-4, 4};
  });
  return {passed(r) && r["checks"] > 0 && r["skipped"] == 0, counts(r)};
}

Outcome c5() {
  const auto r = run("delta-identities", [](SuiteConfig& c) { c.window = Range{-5, 5}; });
  return {passed(r) && r["checks"] > 0, counts(r)};
}

Outcome c6() {
  const auto r = run("psi-properties");
  const auto& inst = r["details"]["series_vector_instances"];
  const bool enough = inst.value("restricted", 0) >= 20 && inst.value("evaluation", 0) >= 20;
  return {passed(r) && enough, counts(r) + ", instances " + inst.dump()};
}

Outcome c7() {
  const auto start = std::chrono::steady_clock::now();
  const auto r = run("thm4.8-split", [](SuiteConfig& c) { c.window = Range{-3, 3}; });
  const double t = seconds_since(start);
  bool parts = true;
  std::string failed;
  for (const auto& [name, part] : r["details"].items()) {
    if (!part["pass"].get<bool>() || part["checks"] == 0) {
      parts = false;
      failed += " " + name;
    }
  }
  return {passed(r) && parts && t < 60, counts(r) + ", " + fixed(t) + (failed.empty() ? "" : ", failed:" + failed)};
}

Outcome c8() {
  const auto r = run("vandermonde");
  return {passed(r) && r["checks"] > 0, counts(r)};
}

// Least k with M^k = 0, from repeated matrix products.
int matrix_nilpotency(const DenseMatrix& m) {
  DenseMatrix p = m;
  for (int k = 1; k <= 64; ++k) {
    if (p.is_zero()) return k;
    p = p * m;
  }
  return -1;
}

Outcome c9() {
  const auto lie = builtin_algebra("sl2");
  bool oracle_ok = true;
  for (int m = 0; m <= 3; ++m) {
    const EvaluationModule W({FiniteRep::sl2_irrep(m)}, {EvalPoint({Scalar(2), Scalar(3)})});
    for (int a : lie->root_vectors()) {
      int worst = 0;
      for (std::size_t i = 0; i < W.dimension(); ++i) {
        worst = std::max(worst, nilpotency_check(W, a, 0, MultiIndex{0}, ModuleVector::basis(i), m + 5).value_or(1000));
      }
      oracle_ok = oracle_ok && worst == m + 1 && worst == matrix_nilpotency(W.rep(0).matrix(a));
    }
  }
  const auto r = run("integrability");
  return {passed(r) && oracle_ok && r["checks"] > 0, counts(r) + (oracle_ok ? ", matrix oracle agrees" : ", matrix oracle disagrees")};
}

Outcome c10() {
  const auto r = run("representation");
  return {passed(r) && r["checks"] > 0 && r["samples"].size() >= 4, counts(r) + ", " + std::to_string(r["samples"].size()) + " modules"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    Outcome (*fn)();
  };
  const Criterion criteria[] = {
      {"C1", "Lie structure: antisymmetry and Jacobi on 100 triples over sl2 and sl3, r = 2", c1},
      {"C2", "generating-function bracket coefficients match the mode bracket for all 9 sl2 pairs", c2},
      {"C3", "centre acts trivially on evaluation tensor modules (s <= 3, m <= 2)", c3},
      {"C4", "constructed p_i annihilate a(x0,x)w on [-4,4] per variable", c4},
      {"C5", "delta identities for 0 <= m,n <= 3 on [-5,5]^2 and substitution", c5},
      {"C6", "psi: identity, zero, f0 psi = f0 alpha, well-definedness, idempotence", c6},
      {"C7", "split of (induced depth 4, z=(2)) x (eval V(1), z=(3,5)): round trip, additivity, commutation", c7},
      {"C8", "Vandermonde separation recovers slot actions, zero resubstitution residual", c8},
      {"C9", "nilpotency k = m+1 on V(m) and transport bounds on the split module", c9},
      {"C10", "representation property of all module constructors", c10},
  };
  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.fn();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << c.id << " " << c.title << " (" << o.detail << ")" << std::endl;
  }
  const double total = seconds_since(start);
  std::cout << "total " << fixed(total) << (total < 300 ? "" : " (over the 5 minute budget)") << std::endl;
  if (total >= 300) ++failed;
  return failed;
}
