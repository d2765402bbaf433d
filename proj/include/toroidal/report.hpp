#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "toroidal/core/json.hpp"

namespace toroidal {

struct Counterexample {
  std::string key;
  std::string vector;
  std::vector<int> exponent;
  json lhs;
  json rhs;
};

/// Outcome of a windowed check: how many exact comparisons ran, how many
/// samples were skipped because they left a truncated module's valid window,
/// and the first failures in exponent order.
class Report {
 public:
  static constexpr std::size_t kMaxCounterexamples = 8;

  Report() = default;
  explicit Report(std::string category) : category(std::move(category)) {}

  std::string category;
  json witness = nullptr;
  json window = nullptr;
  json samples = json::array();
  json extra = json::object();

  bool pass() const { return failures_ == 0; }
  std::size_t checks() const { return checks_; }
  std::size_t skipped() const { return skipped_; }
  std::size_t failures() const { return failures_; }
  const std::vector<Counterexample>& counterexamples() const { return counterexamples_; }

  /// Counts one comparison; `make` is only invoked on failure.
  void record(bool ok, const std::function<Counterexample()>& make);
  void skip(std::size_t n = 1) { skipped_ += n; }
  /// Marks a structural failure that has no coefficient attached.
  void fail(const std::string& reason);
  void merge(const Report& other);

  json to_json() const;

 private:
  void keep(Counterexample c);

  std::size_t checks_ = 0;
  std::size_t skipped_ = 0;
  std::size_t failures_ = 0;
  std::vector<Counterexample> counterexamples_;
  std::vector<std::string> reasons_;
};

}  // namespace toroidal
