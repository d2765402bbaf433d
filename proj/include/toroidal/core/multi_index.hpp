#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace toroidal {

/// Exponent vector (n_1, ..., n_r) for the variables t_1..t_r. Rank 0 is the
/// affine case, where no t_i variables exist.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {}
  MultiIndex(std::initializer_list<int> entries) : entries_(entries) {}

  static MultiIndex zero(int rank) { return MultiIndex(std::vector<int>(static_cast<std::size_t>(rank), 0)); }
  /// The unit vector e_i, with i counted from 1.
  static MultiIndex unit(int rank, int i);

  int rank() const { return static_cast<int>(entries_.size()); }
  int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return entries_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& entries() const { return entries_; }

  bool is_zero() const;

  /// Throws Error(RankMismatch) when ranks differ.
  MultiIndex operator+(const MultiIndex& other) const;
  MultiIndex operator-(const MultiIndex& other) const;
  MultiIndex operator-() const;

  std::string str() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> entries_;
};

/// Enumerates every integer vector in the box [lo_i, hi_i].
template <typename F>
void for_each_in_box(const std::vector<int>& lo, const std::vector<int>& hi, F&& visit) {
  std::vector<int> cur = lo;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (lo[i] > hi[i]) return;
  }
  while (true) {
    visit(static_cast<const std::vector<int>&>(cur));
    std::size_t i = 0;
    for (; i < cur.size(); ++i) {
      if (cur[i] < hi[i]) {
        ++cur[i];
        break;
      }
      cur[i] = lo[i];
    }
    if (i == cur.size()) return;
  }
}

}  // namespace toroidal
