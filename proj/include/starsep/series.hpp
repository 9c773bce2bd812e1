#pragma once

#include <vector>

#include "starsep/common.hpp"
#include "starsep/scalar.hpp"

namespace starsep {

/// Truncated formal power series in h with coefficients in an arbitrary
/// ring T. Represents sum_{n=0..order} c[n] h^n, exact modulo h^(order+1).
/// Operations never consult coefficients beyond the truncation order; mixed
/// orders truncate to the smaller one.
template <class T>
class Series {
 public:
  Series(int order, T zero) : zero_(zero), c_(static_cast<size_t>(order) + 1, zero) {
    if (order < 0) throw error("negative truncation order");
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const T& operator[](int n) const { return c_[static_cast<size_t>(n)]; }
  T& operator[](int n) { return c_[static_cast<size_t>(n)]; }
  const T& zero_elem() const { return zero_; }

  Series truncated(int k) const {
    Series r(std::min(k, order()), zero_);
    for (int n = 0; n <= r.order(); ++n) r[n] = c_[static_cast<size_t>(n)];
    return r;
  }

  Series operator+(const Series& o) const {
    Series r(std::min(order(), o.order()), zero_);
    for (int n = 0; n <= r.order(); ++n) r[n] = (*this)[n] + o[n];
    return r;
  }

  Series operator-(const Series& o) const {
    Series r(std::min(order(), o.order()), zero_);
    for (int n = 0; n <= r.order(); ++n) r[n] = (*this)[n] - o[n];
    return r;
  }

  Series operator*(const Series& o) const {
    Series r(std::min(order(), o.order()), zero_);
    for (int i = 0; i <= r.order(); ++i) {
      if (c_[static_cast<size_t>(i)] == zero_) continue;
      for (int j = 0; i + j <= r.order(); ++j)
        r[i + j] = r[i + j] + c_[static_cast<size_t>(i)] * o[j];
    }
    return r;
  }

  bool operator==(const Series& o) const { return c_ == o.c_; }

  bool is_zero() const {
    for (const auto& c : c_)
      if (!(c == zero_)) return false;
    return true;
  }

 private:
  T zero_;
  std::vector<T> c_;
};

using HTrunc = Series<Rat>;

inline HTrunc htrunc(int order) { return HTrunc(order, Rat(0)); }

/// Taylor expansion of a rational function at h = 0 as a truncated series.
inline HTrunc expand_series(const RationalH& a, int order) {
  HTrunc s = htrunc(order);
  auto t = a.taylor(order);
  for (int n = 0; n <= order; ++n) s[n] = t[static_cast<size_t>(n)];
  return s;
}

}  // namespace starsep
