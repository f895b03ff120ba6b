#pragma once

#include <array>
#include <atomic>
#include <complex>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <type_traits>

#include "monopole/errors.hpp"
#include "monopole/radial_function.hpp"

namespace monopole {

struct SymbolTag {};
struct FourierTag {};

/// Polynomial in K outer variables with RadialFunction coefficients in q.
/// Zero coefficients are never stored, so equality is structural.
template <class Tag, std::size_t K>
class OuterPoly {
 public:
  using Key = std::array<int, K>;
  using Map = std::map<Key, RadialFunction>;
  static constexpr std::size_t kVariables = K;

  OuterPoly() = default;
  explicit OuterPoly(const RadialFunction& c) { add(Key{}, c); }

  static OuterPoly constant(long c) { return OuterPoly(RadialFunction::constant(c)); }
  static OuterPoly monomial(const Key& k, const RadialFunction& c) {
    OuterPoly p;
    p.add(k, c);
    return p;
  }
  /// The outer variable with index j.
  static OuterPoly variable(std::size_t j) {
    Key k{};
    k[j] = 1;
    return monomial(k, RadialFunction::constant(1));
  }

  void add(const Key& k, const RadialFunction& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Maximum total outer degree; -1 for zero.
  int degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, std::accumulate(k.begin(), k.end(), 0));
    return d;
  }

  OuterPoly& operator+=(const OuterPoly& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  OuterPoly& operator-=(const OuterPoly& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  OuterPoly& operator*=(const GaussianRational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }
  friend OuterPoly operator+(OuterPoly a, const OuterPoly& b) { return a += b; }
  friend OuterPoly operator-(OuterPoly a, const OuterPoly& b) { return a -= b; }
  friend OuterPoly operator*(OuterPoly a, const GaussianRational& s) { return a *= s; }
  friend OuterPoly operator*(const GaussianRational& s, OuterPoly a) { return a *= s; }
  OuterPoly operator-() const { return *this * GaussianRational::integer(-1); }

  friend OuterPoly operator*(const RadialFunction& r, const OuterPoly& a) {
    OuterPoly out;
    if (r.is_zero()) return out;
    for (const auto& [k, c] : a.terms_) out.add(k, r * c);
    return out;
  }

  friend OuterPoly operator*(const OuterPoly& a, const OuterPoly& b) {
    OuterPoly out;
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) {
        Key k;
        for (std::size_t t = 0; t < K; ++t) k[t] = ka[t] + kb[t];
        if constexpr (std::is_same_v<Tag, FourierTag>) check_degree(k);
        out.add(k, ca * cb);
      }
    }
    return out;
  }

  friend bool operator==(const OuterPoly& a, const OuterPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const OuterPoly& a, const OuterPoly& b) { return !(a == b); }

  /// Partial derivative in q^i acting on the coefficients.
  OuterPoly diff_q(int i) const {
    OuterPoly out;
    for (const auto& [k, c] : terms_) out.add(k, c.diff(i));
    return out;
  }

  /// Partial derivative in the outer variable j.
  OuterPoly diff_outer(std::size_t j) const {
    OuterPoly out;
    for (const auto& [k, c] : terms_) {
      if (k[j] == 0) continue;
      Key kk = k;
      kk[j] -= 1;
      out.add(kk, c * GaussianRational::integer(k[j]));
    }
    return out;
  }

  /// Multiplication by an outer variable.
  OuterPoly times_variable(std::size_t j) const {
    OuterPoly out;
    for (const auto& [k, c] : terms_) {
      Key kk = k;
      kk[j] += 1;
      if constexpr (std::is_same_v<Tag, FourierTag>) check_degree(kk);
      out.terms_.emplace(kk, c);
    }
    return out;
  }

  int max_mu_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, c.max_mu_degree());
    return d;
  }

  OuterPoly mu_component(int deg) const {
    OuterPoly out;
    for (const auto& [k, c] : terms_) out.add(k, c.mu_component(deg));
    return out;
  }

  OuterPoly bind_mu(const GaussianRational& value) const {
    OuterPoly out;
    for (const auto& [k, c] : terms_) out.add(k, c.bind_mu(value));
    return out;
  }

  /// Total-degree cap applied to Fourier polynomial products.
  static int degree_cap() { return cap_.load(); }
  static void set_degree_cap(int cap) { cap_.store(cap); }

 private:
  static void check_degree(const Key& k) {
    const int d = std::accumulate(k.begin(), k.end(), 0);
    if (d > cap_.load()) {
      throw DegreeCapError("Fourier polynomial degree " + std::to_string(d) + " exceeds cap " +
                           std::to_string(cap_.load()));
    }
  }

  inline static std::atomic<int> cap_{24};
  Map terms_;
};

/// Polynomials in (p1, p2, p3) with radial coefficients in q.
using SymbolFunction = OuterPoly<SymbolTag, 3>;

/// Polynomials in the Fourier variables (u, v, u', v'), indexed u_i -> i, v_i -> 3+i,
/// u'_i -> 6+i, v'_i -> 9+i.
using FourierPolynomial = OuterPoly<FourierTag, 12>;

namespace fourier {
inline constexpr std::size_t u(int i) { return static_cast<std::size_t>(i); }
inline constexpr std::size_t v(int i) { return static_cast<std::size_t>(3 + i); }
inline constexpr std::size_t u_right(int i) { return static_cast<std::size_t>(6 + i); }
inline constexpr std::size_t v_right(int i) { return static_cast<std::size_t>(9 + i); }
}  // namespace fourier

namespace symbol {
inline SymbolFunction p(int i) { return SymbolFunction::variable(static_cast<std::size_t>(i)); }
inline SymbolFunction q(int i) { return SymbolFunction(RadialFunction::coordinate(i)); }
inline SymbolFunction inverse_radius(int m) { return SymbolFunction(RadialFunction::inverse_radius(m)); }
inline SymbolFunction constant(long c) { return SymbolFunction::constant(c); }

/// Derivative along phase-space coordinate a in the ordering (p1, p2, p3, q1, q2, q3).
inline SymbolFunction diff(const SymbolFunction& f, int a) {
  return a < 3 ? f.diff_outer(static_cast<std::size_t>(a)) : f.diff_q(a - 3);
}
}  // namespace symbol

/// Numeric value at outer variables `vars`, position q and monopole strength mu.
template <class Tag, std::size_t K>
std::complex<double> evaluate(const OuterPoly<Tag, K>& f, const std::array<double, K>& vars, const Vec3& q,
                              double mu) {
  std::complex<double> total = 0.0;
  for (const auto& [k, c] : f.terms()) {
    double mono = 1.0;
    for (std::size_t t = 0; t < K; ++t) {
      for (int e = 0; e < k[t]; ++e) mono *= vars[t];
    }
    total += mono * c.evaluate(q, mu);
  }
  return total;
}

std::string to_string(const SymbolFunction& f);
std::string to_string(const FourierPolynomial& f);

}  // namespace monopole
