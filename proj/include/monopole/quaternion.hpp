#pragma once

#include <cmath>
#include <complex>

namespace monopole {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3 operator*(double s) const { return {s * x, s * y, s * z}; }
  friend Vec3 operator*(double s, const Vec3& v) { return v * s; }

  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const { return std::sqrt(dot(*this)); }
};

/// w + x1 e1 + x2 e2 + x3 e3 with e_i e_j = -delta_ij + eps_ijk e_k.
struct Quaternion {
  double w = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  static Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
  static Quaternion pure(const Vec3& v) { return {0.0, v.x, v.y, v.z}; }

  Vec3 vec() const { return {x1, x2, x3}; }

  Quaternion operator+(const Quaternion& o) const {
    return {w + o.w, x1 + o.x1, x2 + o.x2, x3 + o.x3};
  }
  Quaternion operator-(const Quaternion& o) const {
    return {w - o.w, x1 - o.x1, x2 - o.x2, x3 - o.x3};
  }
  Quaternion operator*(double s) const { return {s * w, s * x1, s * x2, s * x3}; }
  friend Quaternion operator*(double s, const Quaternion& q) { return q * s; }
  Quaternion operator*(const Quaternion& o) const;

  double norm() const { return std::sqrt(w * w + x1 * x1 + x2 * x2 + x3 * x3); }
};

Quaternion qmul(const Quaternion& a, const Quaternion& b);
Quaternion conj(const Quaternion& q);

/// Position-dependent imaginary unit j(x) = (x . e) / |x|.
Quaternion unit_radial(const Vec3& x);

/// exp of a pure quaternion: cos|v| + (v/|v|) sin|v|.
Quaternion exp_pure(const Quaternion& v);

struct ComplexProjection {
  std::complex<double> value;
  /// Norm of the part of q orthogonal to span{1, j(x)}.
  double residual = 0.0;
};

/// Reads q in the complex subalgebra span{1, j(x)}: Re = scalar part, Im = scalar part of -j(x) q.
ComplexProjection complex_project(const Quaternion& q, const Vec3& x);

/// Inverse of complex_project on the commutant: a + ib -> a + b j(x).
Quaternion complex_embed(std::complex<double> c, const Vec3& x);

inline constexpr double kZeroVectorEpsilon = 1e-300;

}  // namespace monopole
