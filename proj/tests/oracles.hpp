#pragma once

// Independent reference computations shared by the unit tests and the acceptance binary.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <gmpxx.h>

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "monopole/representation.hpp"
#include "monopole/star_product.hpp"
#include "monopole/zassenhaus.hpp"

namespace oracle {

using monopole::CounterRng;

// ---- random symbolic elements ------------------------------------------------------------

inline mpq_class small_rational(CounterRng& rng) {
  const long num = static_cast<long>(rng.next() % 11) - 5;
  const long den = static_cast<long>(rng.next() % 4) + 1;
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

inline monopole::RadialFunction random_radial(CounterRng& rng, int terms = 3) {
  std::vector<monopole::RadialTerm> out;
  for (int t = 0; t < terms; ++t) {
    monopole::RadialTerm term;
    term.coeff = monopole::GaussianRational(small_rational(rng), small_rational(rng));
    term.mu_power = static_cast<int>(rng.next() % 2);
    for (int& a : term.alpha) a = static_cast<int>(rng.next() % 3);
    term.m = static_cast<int>(rng.next() % 5);
    out.push_back(term);
  }
  return monopole::RadialFunction::from_terms(out);
}

inline monopole::SymbolFunction random_symbol(CounterRng& rng, int terms = 3) {
  monopole::SymbolFunction f;
  for (int t = 0; t < terms; ++t) {
    monopole::SymbolFunction::Key k{};
    for (int& a : k) a = static_cast<int>(rng.next() % 2);
    f.add(k, random_radial(rng, 2));
  }
  return f;
}

// ---- nilpotent matrix realization of the free algebra ------------------------------------

constexpr int kDim = 7;
using Matrix = std::array<std::array<mpq_class, kDim>, kDim>;

inline Matrix zero_matrix() {
  Matrix m;
  for (auto& row : m)
    for (auto& v : row) v = 0;
  return m;
}

inline Matrix identity_matrix() {
  Matrix m = zero_matrix();
  for (int i = 0; i < kDim; ++i) m[i][i] = 1;
  return m;
}

inline Matrix operator*(const Matrix& a, const Matrix& b) {
  Matrix c = zero_matrix();
  for (int i = 0; i < kDim; ++i)
    for (int k = 0; k < kDim; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < kDim; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

inline Matrix operator+(const Matrix& a, const Matrix& b) {
  Matrix c = a;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) c[i][j] += b[i][j];
  return c;
}

inline Matrix scaled(const Matrix& a, const mpq_class& s) {
  Matrix c = a;
  for (auto& row : c)
    for (auto& v : row) v *= s;
  return c;
}

inline Matrix random_strictly_upper(CounterRng& rng) {
  Matrix m = zero_matrix();
  for (int i = 0; i < kDim; ++i)
    for (int j = i + 1; j < kDim; ++j) m[i][j] = small_rational(rng);
  return m;
}

/// Finite for nilpotent input: sum_{k < 7} A^k / k!.
inline Matrix exp_nilpotent(const Matrix& a) {
  Matrix result = identity_matrix();
  Matrix power = identity_matrix();
  for (int k = 1; k < kDim; ++k) {
    power = scaled(power * a, mpq_class(1, k));
    result = result + power;
  }
  return result;
}

/// Substitutes X, Y into a free-algebra element word by word.
inline Matrix evaluate(const monopole::FreeAlgebraElement& e, const Matrix& x, const Matrix& y) {
  Matrix out = zero_matrix();
  for (const auto& [word, c] : e.terms()) {
    Matrix w = identity_matrix();
    for (char z : word) w = w * (z == 'X' ? x : y);
    out = out + scaled(w, c);
  }
  return out;
}

/// e^X e^Y prod_n e^{C_n(X,Y)} == e^{X+Y}; words of length >= 7 vanish, so C_2..C_6 make it exact.
inline bool matrix_zassenhaus_identity(const std::vector<monopole::FreeAlgebraElement>& terms, const Matrix& x,
                                       const Matrix& y) {
  Matrix lhs = exp_nilpotent(x) * exp_nilpotent(y);
  for (const auto& c : terms) lhs = lhs * exp_nilpotent(evaluate(c, x, y));
  return lhs == exp_nilpotent(x + y);
}

// ---- geometric phase by quadrature -------------------------------------------------------

/// exp(1/2 (a x x).e * integral_0^1 ds / |x - s a|^2), integral by adaptive Gauss-Kronrod.
inline monopole::Quaternion phase_by_quadrature(const monopole::Vec3& a, const monopole::Vec3& x) {
  auto integrand = [&](double s) {
    const monopole::Vec3 d = x - a * s;
    return 1.0 / d.dot(d);
  };
  double error = 0.0;
  const double integral =
      boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, 0.0, 1.0, 20, 1e-14, &error);
  const monopole::Vec3 n = a.cross(x);
  const double len = n.norm();
  if (len == 0.0) return monopole::Quaternion::one();
  const double theta = 0.5 * len * integral;
  const monopole::Vec3 axis = n * (1.0 / len);
  return {std::cos(theta), axis.x * std::sin(theta), axis.y * std::sin(theta), axis.z * std::sin(theta)};
}

// ---- Moyal operators ---------------------------------------------------------------------

/// (1/n!) (i/2)^n (dq . dp' - dp . dq')^n as a bidifferential operator with constant coefficients.
inline monopole::BidiffOperator moyal_operator(int n) {
  using monopole::DerivKey;
  using monopole::GaussianRational;
  std::map<std::pair<DerivKey, DerivKey>, GaussianRational> current;
  current[{DerivKey{}, DerivKey{}}] = GaussianRational::integer(1);
  for (int step = 0; step < n; ++step) {
    std::map<std::pair<DerivKey, DerivKey>, GaussianRational> next;
    for (const auto& [key, c] : current) {
      for (int i = 0; i < 3; ++i) {
        auto a = key;
        ++a.first[3 + i];
        ++a.second[i];
        next[a] = next[a] + c;
        auto b = key;
        ++b.first[i];
        ++b.second[3 + i];
        next[b] = next[b] - c;
      }
    }
    current = std::move(next);
  }
  GaussianRational scale = GaussianRational::integer(1);
  for (int k = 1; k <= n; ++k) scale = scale * GaussianRational::i() * GaussianRational(1, 2 * k);
  monopole::BidiffOperator op;
  for (const auto& [key, c] : current) {
    if (!c.is_zero()) op.add(key.first, key.second, monopole::RadialFunction::constant(c * scale));
  }
  return op;
}

}  // namespace oracle
