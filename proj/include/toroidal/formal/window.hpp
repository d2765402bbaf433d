#pragma once

#include <string_view>
#include <vector>

#include "toroidal/core/json.hpp"

namespace toroidal {

/// Closed integer interval [lo, hi].
struct Range {
  int lo = 0;
  int hi = 0;
  bool contains(int v) const { return lo <= v && v <= hi; }
  friend bool operator==(const Range&, const Range&) = default;
};

/// Parses "lo..hi" (e.g. "-4..4"). Throws Error(ParseError).
Range parse_range(std::string_view text);

/// Exponent bounds for x0 and for each of x_1..x_r. Series identities are
/// only ever checked coefficient-wise inside such a window.
struct ExponentWindow {
  Range x0;
  std::vector<Range> x;

  /// The same range for x0 and for each of r further variables.
  static ExponentWindow uniform(Range range, int r);
  int rank() const { return static_cast<int>(x.size()); }
  /// Calls visit(p0, p) for every exponent tuple (p0, p_1..p_r) in the window.
  template <typename F>
  void for_each(F&& visit) const;

  json to_json() const;
  /// Accepts {"x0": [lo, hi], "x": [[lo, hi], ...]} or the same wrapped in {"window": ...}.
  static ExponentWindow from_json(const json& j);
};

template <typename F>
void ExponentWindow::for_each(F&& visit) const {
  std::vector<int> lo, hi;
  for (const auto& r : x) {
    lo.push_back(r.lo);
    hi.push_back(r.hi);
  }
  for (int p0 = x0.lo; p0 <= x0.hi; ++p0) {
    bool empty = false;
    for (std::size_t i = 0; i < lo.size(); ++i) empty = empty || lo[i] > hi[i];
    if (empty) return;
    std::vector<int> cur = lo;
    while (true) {
      visit(p0, static_cast<const std::vector<int>&>(cur));
      std::size_t i = 0;
      for (; i < cur.size(); ++i) {
        if (cur[i] < hi[i]) {
          ++cur[i];
          break;
        }
        cur[i] = lo[i];
      }
      if (i == cur.size()) break;
    }
  }
}

/// Mode index n for the coefficient of x^p in Σ a(n) x^{-n-1}, and back.
inline int mode_of_exponent(int p) { return -p - 1; }
inline int exponent_of_mode(int n) { return -n - 1; }

}  // namespace toroidal
