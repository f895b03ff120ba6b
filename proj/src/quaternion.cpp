#include "monopole/quaternion.hpp"

#include "monopole/errors.hpp"

namespace monopole {

Quaternion Quaternion::operator*(const Quaternion& o) const { return qmul(*this, o); }

Quaternion qmul(const Quaternion& a, const Quaternion& b) {
  // (a0 + a)(b0 + b) = a0 b0 - a.b + a0 b + b0 a + a x b
  return {a.w * b.w - a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3,
          a.w * b.x1 + a.x1 * b.w + a.x2 * b.x3 - a.x3 * b.x2,
          a.w * b.x2 + a.x2 * b.w + a.x3 * b.x1 - a.x1 * b.x3,
          a.w * b.x3 + a.x3 * b.w + a.x1 * b.x2 - a.x2 * b.x1};
}

Quaternion conj(const Quaternion& q) { return {q.w, -q.x1, -q.x2, -q.x3}; }

Quaternion unit_radial(const Vec3& x) {
  const double r = x.norm();
  if (!(r > kZeroVectorEpsilon)) {
    throw ZeroVectorError("unit_radial: |x| vanishes");
  }
  return Quaternion::pure(x * (1.0 / r));
}

Quaternion exp_pure(const Quaternion& v) {
  if (std::abs(v.w) > 1e-12) {
    throw NotPureError("exp_pure: scalar part is nonzero");
  }
  const double theta = v.vec().norm();
  if (theta == 0.0) {
    return Quaternion::one();
  }
  const double s = std::sin(theta) / theta;
  return {std::cos(theta), s * v.x1, s * v.x2, s * v.x3};
}

ComplexProjection complex_project(const Quaternion& q, const Vec3& x) {
  const Vec3 n = unit_radial(x).vec();
  const Vec3 qv = q.vec();
  const double along = n.dot(qv);
  const Vec3 orth = qv - n * along;
  return {{q.w, along}, orth.norm()};
}

Quaternion complex_embed(std::complex<double> c, const Vec3& x) {
  const Vec3 n = unit_radial(x).vec();
  return {c.real(), c.imag() * n.x, c.imag() * n.y, c.imag() * n.z};
}

}  // namespace monopole
