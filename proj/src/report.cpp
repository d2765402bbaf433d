#include "toroidal/report.hpp"

#include <algorithm>
#include <tuple>

namespace toroidal {

namespace {

bool before(const Counterexample& a, const Counterexample& b) {
  return std::tie(a.exponent, a.key, a.vector) < std::tie(b.exponent, b.key, b.vector);
}

json counterexample_json(const Counterexample& c) {
  return {{"key", c.key}, {"vector", c.vector}, {"exponent", c.exponent}, {"lhs", c.lhs}, {"rhs", c.rhs}};
}

}  // namespace

void Report::record(bool ok, const std::function<Counterexample()>& make) {
  ++checks_;
  if (ok) return;
  ++failures_;
  keep(make());
}

void Report::fail(const std::string& reason) {
  ++failures_;
  reasons_.push_back(reason);
}

void Report::keep(Counterexample c) {
  auto pos = std::upper_bound(counterexamples_.begin(), counterexamples_.end(), c, before);
  counterexamples_.insert(pos, std::move(c));
  if (counterexamples_.size() > kMaxCounterexamples) counterexamples_.pop_back();
}

void Report::merge(const Report& other) {
  checks_ += other.checks_;
  skipped_ += other.skipped_;
  failures_ += other.failures_;
  for (const auto& c : other.counterexamples_) keep(c);
  reasons_.insert(reasons_.end(), other.reasons_.begin(), other.reasons_.end());
}

json Report::to_json() const {
  json j;
  j["category"] = category;
  j["witness"] = witness;
  j["window"] = window;
  j["samples"] = samples;
  j["pass"] = pass();
  j["checks"] = checks_;
  j["skipped"] = skipped_;
  j["failures"] = failures_;
  json list = json::array();
  for (const auto& c : counterexamples_) list.push_back(counterexample_json(c));
  j["counterexamples"] = list;
  j["counterexample"] = counterexamples_.empty() ? json(nullptr) : counterexample_json(counterexamples_.front());
  if (!reasons_.empty()) j["reasons"] = reasons_;
  if (!extra.empty()) j["details"] = extra;
  return j;
}

}  // namespace toroidal
