#include "toroidal/core/multi_index.hpp"

#include <algorithm>

#include "toroidal/error.hpp"

namespace toroidal {

namespace {

void require_same_rank(const MultiIndex& a, const MultiIndex& b) {
  if (a.rank() != b.rank()) {
    throw Error(Errc::RankMismatch,
                "multi-index ranks differ: " + std::to_string(a.rank()) + " vs " + std::to_string(b.rank()));
  }
}

}  // namespace

MultiIndex MultiIndex::unit(int rank, int i) {
  if (i < 1 || i > rank) throw Error(Errc::IndexOutOfRange, "unit index " + std::to_string(i));
  MultiIndex m = zero(rank);
  m[i - 1] = 1;
  return m;
}

bool MultiIndex::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e == 0; });
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  require_same_rank(*this, other);
  MultiIndex out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += other.entries_[i];
  return out;
}

MultiIndex MultiIndex::operator-(const MultiIndex& other) const { return *this + (-other); }

MultiIndex MultiIndex::operator-() const {
  MultiIndex out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

std::string MultiIndex::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(entries_[i]);
  }
  return s + ")";
}

}  // namespace toroidal
