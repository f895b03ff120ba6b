#pragma once

#include <cassert>
#include <stdexcept>
#include <vector>

#include "monopole/gaussian_rational.hpp"

namespace monopole {

/// Truncated power series c_0 + c_1 hbar + ... + c_N hbar^N.
/// T must be default-constructible as zero and provide +, -, * and is_zero().
template <class T>
class HbarSeries {
 public:
  HbarSeries() : coeffs_(1) {}
  explicit HbarSeries(int order) : coeffs_(static_cast<std::size_t>(order + 1)) {
    if (order < 0) throw std::invalid_argument("HbarSeries: negative order");
  }
  HbarSeries(int order, const T& constant) : HbarSeries(order) { coeffs_[0] = constant; }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  T& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }
  const T& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }

  /// Same coefficients re-truncated (or zero-extended) to a new order.
  HbarSeries truncated(int order) const {
    HbarSeries out(order);
    for (int n = 0; n <= std::min(order, this->order()); ++n) out[n] = (*this)[n];
    return out;
  }

  /// Multiplication by hbar^k.
  HbarSeries shifted(int k) const {
    HbarSeries out(order());
    for (int n = 0; n + k <= order(); ++n) out[n + k] = (*this)[n];
    return out;
  }

  HbarSeries& operator+=(const HbarSeries& o) {
    check_order(o);
    for (int n = 0; n <= order(); ++n) (*this)[n] += o[n];
    return *this;
  }
  HbarSeries& operator-=(const HbarSeries& o) {
    check_order(o);
    for (int n = 0; n <= order(); ++n) (*this)[n] -= o[n];
    return *this;
  }
  friend HbarSeries operator+(HbarSeries a, const HbarSeries& b) { return a += b; }
  friend HbarSeries operator-(HbarSeries a, const HbarSeries& b) { return a -= b; }

  friend HbarSeries operator*(const HbarSeries& a, const HbarSeries& b) {
    a.check_order(b);
    HbarSeries out(a.order());
    for (int i = 0; i <= a.order(); ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; i + j <= a.order(); ++j) {
        if (b[j].is_zero()) continue;
        out[i + j] += a[i] * b[j];
      }
    }
    return out;
  }

  friend HbarSeries operator*(HbarSeries a, const GaussianRational& s) {
    for (auto& c : a.coeffs_) c = c * s;
    return a;
  }

  friend bool operator==(const HbarSeries& a, const HbarSeries& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const HbarSeries& a, const HbarSeries& b) { return !(a == b); }

 private:
  void check_order(const HbarSeries& o) const {
    if (o.order() != order()) throw std::invalid_argument("HbarSeries: order mismatch");
  }

  std::vector<T> coeffs_;
};

/// exp(s) truncated at the order of s; s must have a vanishing constant term.
template <class T>
HbarSeries<T> exp_series(const HbarSeries<T>& s, const T& one) {
  if (!s[0].is_zero()) throw std::invalid_argument("exp_series: constant term must vanish");
  HbarSeries<T> result(s.order(), one);
  HbarSeries<T> power(s.order(), one);
  for (int k = 1; k <= s.order(); ++k) {
    power = power * s * GaussianRational(1, k);
    result += power;
  }
  return result;
}

}  // namespace monopole
