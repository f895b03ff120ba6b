#pragma once

#include <array>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "monopole/gaussian_rational.hpp"
#include "monopole/quaternion.hpp"

namespace monopole {

/// Exponents (mu, q1, q2, q3) of a numerator monomial.
using RadialKey = std::array<int, 4>;
using RadialNumerator = std::map<RadialKey, GaussianRational>;

/// One term c * mu^mu_power * q^alpha * |q|^(-m).
struct RadialTerm {
  GaussianRational coeff;
  int mu_power = 0;
  std::array<int, 3> alpha{};
  int m = 0;
};

/// Finite sums c mu^s q^alpha |q|^-m over Gaussian rationals.
///
/// Canonical form: the terms with even m and those with odd m are each kept over
/// a single denominator |q|^M with a polynomial numerator, and M is lowered by
/// dividing the numerator by |q|^2 = q1^2 + q2^2 + q3^2 for as long as that is
/// exact and M >= 2. Even and odd powers of |q| cannot cancel each other, so two
/// elements are equal exactly when their canonical forms coincide; equality and
/// the zero test are structural.
class RadialFunction {
 public:
  RadialFunction() = default;

  static RadialFunction constant(const GaussianRational& c);
  static RadialFunction constant(long c) { return constant(GaussianRational::integer(c)); }
  /// The formal coupling mu = e g.
  static RadialFunction mu();
  /// The coordinate q^i, i in {0,1,2}.
  static RadialFunction coordinate(int i);
  /// |q|^-m.
  static RadialFunction inverse_radius(int m);
  static RadialFunction term(const RadialTerm& t);
  static RadialFunction from_terms(const std::vector<RadialTerm>& terms);

  bool is_zero() const { return even_.num.empty() && odd_.num.empty(); }
  bool is_constant() const;

  RadialFunction& operator+=(const RadialFunction& o);
  RadialFunction& operator-=(const RadialFunction& o);
  RadialFunction& operator*=(const GaussianRational& c);
  friend RadialFunction operator+(RadialFunction a, const RadialFunction& b) { return a += b; }
  friend RadialFunction operator-(RadialFunction a, const RadialFunction& b) { return a -= b; }
  friend RadialFunction operator*(RadialFunction a, const GaussianRational& c) { return a *= c; }
  friend RadialFunction operator*(const GaussianRational& c, RadialFunction a) { return a *= c; }
  friend RadialFunction operator*(const RadialFunction& a, const RadialFunction& b);
  RadialFunction operator-() const;

  friend bool operator==(const RadialFunction& a, const RadialFunction& b);
  friend bool operator!=(const RadialFunction& a, const RadialFunction& b) { return !(a == b); }

  /// Exact partial derivative with respect to q^i.
  RadialFunction diff(int i) const;

  /// Highest power of mu present (-1 for zero).
  int max_mu_degree() const;
  /// Coefficient of mu^k, returned with mu stripped.
  RadialFunction mu_component(int k) const;
  /// Substitutes a rational value for mu.
  RadialFunction bind_mu(const GaussianRational& value) const;

  std::complex<double> evaluate(const Vec3& q, double mu) const;

  /// Canonical terms ordered lexicographically by (mu power, m, alpha).
  std::vector<RadialTerm> terms() const;
  std::string to_string() const;

 private:
  struct Branch {
    int m = 0;
    RadialNumerator num;
  };
  static void normalize(Branch& b);
  static void add_into(Branch& dst, const Branch& src, const GaussianRational& scale);

  Branch even_{0, {}};
  Branch odd_{1, {}};
};

/// beta_ij(q) = mu eps_ijk q^k / |q|^3 for i, j in {0,1,2}.
RadialFunction beta(int i, int j);

int levi_civita(int i, int j, int k);

}  // namespace monopole
