#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "toroidal/core/laurent_poly.hpp"
#include "toroidal/error.hpp"
#include "toroidal/formal/window.hpp"

namespace toroidal {

/// Lazily evaluated formal series in `vars` variables with coefficients in T
/// (T needs a zero default, +=, and multiplication by Scalar from the left).
/// Coefficients are indexed by exponent vectors. A series may carry a domain:
/// the box of exponents where its coefficients are known.
template <typename T>
class FormalSeries {
 public:
  using Exponents = std::vector<int>;
  using Coeff = std::function<T(const Exponents&)>;

  FormalSeries(int vars, Coeff coeff, std::optional<std::vector<Range>> domain = std::nullopt)
      : vars_(vars), coeff_(std::move(coeff)), domain_(std::move(domain)) {
    if (domain_ && static_cast<int>(domain_->size()) != vars_) {
      throw Error(Errc::InvalidArgument, "series domain must bound every variable");
    }
  }

  int vars() const { return vars_; }
  const std::optional<std::vector<Range>>& domain() const { return domain_; }

  T coeff(const Exponents& e) const {
    if (static_cast<int>(e.size()) != vars_) throw Error(Errc::RankMismatch, "exponent vector length");
    if (domain_) {
      for (int v = 0; v < vars_; ++v) {
        if (!(*domain_)[static_cast<std::size_t>(v)].contains(e[static_cast<std::size_t>(v)])) {
          throw Error(Errc::WindowTooSmall, "coefficient requested outside the series domain");
        }
      }
    }
    return coeff_(e);
  }

  /// c · x_var^k · this
  FormalSeries times_monomial(int var, int k, const Scalar& c = 1) const {
    check_var(var);
    auto self = *this;
    return FormalSeries(vars_, [self, var, k, c](const Exponents& e) {
      auto f = e;
      f[static_cast<std::size_t>(var)] -= k;
      return c * self.coeff(f);
    }, shifted_domain(var, k, k));
  }

  /// p(x_var) · this
  FormalSeries times_poly(int var, const LaurentPoly& p) const {
    check_var(var);
    if (p.is_zero()) return FormalSeries(vars_, [](const Exponents&) { return T{}; }, domain_);
    auto self = *this;
    return FormalSeries(vars_, [self, var, p](const Exponents& e) {
      T out{};
      for (const auto& [k, c] : p.terms()) {
        auto f = e;
        f[static_cast<std::size_t>(var)] -= k;
        out += c * self.coeff(f);
      }
      return out;
    }, shifted_domain(var, p.low_degree(), p.degree()));
  }

  /// (x_i - x_j)^m · this
  FormalSeries times_difference_power(int i, int j, int m) const {
    check_var(i);
    check_var(j);
    if (m < 0) throw Error(Errc::InvalidArgument, "power must be non-negative");
    auto self = *this;
    std::optional<std::vector<Range>> dom = domain_;
    if (dom) {
      // x_i^t x_j^{m-t} with 0 <= t <= m shifts each variable by 0..m
      auto& ri = (*dom)[static_cast<std::size_t>(i)];
      auto& rj = (*dom)[static_cast<std::size_t>(j)];
      ri = Range{ri.lo + m, ri.hi};
      rj = Range{rj.lo + m, rj.hi};
    }
    return FormalSeries(vars_, [self, i, j, m](const Exponents& e) {
      T out{};
      for (int t = 0; t <= m; ++t) {
        auto f = e;
        f[static_cast<std::size_t>(i)] -= t;
        f[static_cast<std::size_t>(j)] -= m - t;
        out += (binomial(m, t) * Scalar((m - t) % 2 == 0 ? 1 : -1)) * self.coeff(f);
      }
      return out;
    }, dom);
  }

  FormalSeries operator+(const FormalSeries& rhs) const { return combine(rhs, Scalar(1)); }
  FormalSeries operator-(const FormalSeries& rhs) const { return combine(rhs, Scalar(-1)); }

  /// Res_{x_var} x_var^power · this: the coefficient of x_var^{-1-power},
  /// as a series in the remaining variables. Throws WindowTooSmall when the
  /// domain does not contain that exponent.
  FormalSeries residue(int var, int power) const {
    check_var(var);
    const int target = -1 - power;
    std::optional<std::vector<Range>> dom = domain_;
    if (dom) {
      if (!(*dom)[static_cast<std::size_t>(var)].contains(target)) {
        throw Error(Errc::WindowTooSmall, "residue needs exponent " + std::to_string(target) + " of variable " +
                                              std::to_string(var) + " inside the series domain");
      }
      dom->erase(dom->begin() + var);
    }
    auto self = *this;
    return FormalSeries(vars_ - 1, [self, var, target](const Exponents& e) {
      auto f = e;
      f.insert(f.begin() + var, target);
      return self.coeff(f);
    }, dom);
  }

 private:
  void check_var(int var) const {
    if (var < 0 || var >= vars_) throw Error(Errc::IndexOutOfRange, "series variable " + std::to_string(var));
  }

  std::optional<std::vector<Range>> shifted_domain(int var, int low, int high) const {
    if (!domain_) return std::nullopt;
    auto dom = *domain_;
    auto& r = dom[static_cast<std::size_t>(var)];
    r = Range{r.lo + high, r.hi + low};
    return dom;
  }

  FormalSeries combine(const FormalSeries& rhs, const Scalar& sign) const {
    if (rhs.vars_ != vars_) throw Error(Errc::RankMismatch, "series with different variable counts");
    std::optional<std::vector<Range>> dom;
    if (domain_ || rhs.domain_) {
      dom = domain_ ? *domain_ : *rhs.domain_;
      if (domain_ && rhs.domain_) {
        for (std::size_t v = 0; v < dom->size(); ++v) {
          (*dom)[v] = Range{std::max((*domain_)[v].lo, (*rhs.domain_)[v].lo), std::min((*domain_)[v].hi, (*rhs.domain_)[v].hi)};
        }
      }
    }
    auto a = *this;
    auto b = rhs;
    return FormalSeries(vars_, [a, b, sign](const Exponents& e) {
      T out = a.coeff(e);
      out += sign * b.coeff(e);
      return out;
    }, dom);
  }

  int vars_;
  Coeff coeff_;
  std::optional<std::vector<Range>> domain_;
};

/// The same series with its domain restricted to `box` (coefficients outside
/// become unavailable), as when only a finite window of data is known.
template <typename T>
FormalSeries<T> windowed(const FormalSeries<T>& s, std::vector<Range> box) {
  auto copy = s;
  return FormalSeries<T>(s.vars(), [copy](const std::vector<int>& e) { return copy.coeff(e); }, std::move(box));
}

}  // namespace toroidal
