#include <gtest/gtest.h>

#include <numbers>

#include "monopole/errors.hpp"
#include "monopole/quaternion.hpp"
#include "monopole/representation.hpp"

using namespace monopole;

namespace {

constexpr Quaternion e1{0, 1, 0, 0};
constexpr Quaternion e2{0, 0, 1, 0};
constexpr Quaternion e3{0, 0, 0, 1};

double dist(const Quaternion& a, const Quaternion& b) { return (a - b).norm(); }

Quaternion random_unit(CounterRng& rng) {
  Quaternion q{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
  return q * (1.0 / q.norm());
}

}  // namespace

TEST(Quaternion, HamiltonProductTable) {
  EXPECT_LT(dist(qmul(e1, e2), e3), 1e-15);
  EXPECT_LT(dist(qmul(e2, e3), e1), 1e-15);
  EXPECT_LT(dist(qmul(e3, e1), e2), 1e-15);
  EXPECT_LT(dist(qmul(e2, e1), e3 * -1.0), 1e-15);
  EXPECT_LT(dist(qmul(e1, e1), Quaternion::one() * -1.0), 1e-15);
  EXPECT_LT(dist(qmul(e3, e3), Quaternion::one() * -1.0), 1e-15);
}

TEST(Quaternion, IdentityAndAlgebraLaws) {
  CounterRng rng(7, 0);
  for (int t = 0; t < 200; ++t) {
    const Quaternion a = random_unit(rng);
    const Quaternion b = random_unit(rng);
    const Quaternion c = random_unit(rng);
    EXPECT_LT(dist(qmul(Quaternion::one(), a), a), 1e-15);
    EXPECT_LT(dist(qmul(a, qmul(b, c)), qmul(qmul(a, b), c)), 1e-12);
    EXPECT_LT(dist(conj(conj(a)), a), 1e-15);
    EXPECT_LT(dist(conj(qmul(a, b)), qmul(conj(b), conj(a))), 1e-12);
    EXPECT_NEAR(qmul(a, b).norm(), 1.0, 1e-12);
    EXPECT_LT(dist(qmul(a, b + c), qmul(a, b) + qmul(a, c)), 1e-12);
  }
}

TEST(Quaternion, UnitRadial) {
  EXPECT_LT(dist(unit_radial({0, 0, 1}), e3), 1e-15);
  EXPECT_LT(dist(unit_radial({3, 4, 0}), Quaternion{0, 0.6, 0.8, 0}), 1e-15);
  CounterRng rng(7, 1);
  for (int t = 0; t < 100; ++t) {
    const Vec3 x = rng.uniform_vec(-5, 5);
    const Quaternion j = unit_radial(x);
    EXPECT_EQ(j.w, 0.0);
    EXPECT_NEAR(j.norm(), 1.0, 1e-14);
    EXPECT_LT(dist(qmul(j, j), Quaternion::one() * -1.0), 1e-14);
  }
  EXPECT_THROW(unit_radial({0, 0, 0}), ZeroVectorError);
}

TEST(Quaternion, ExpPure) {
  EXPECT_LT(dist(exp_pure(e3 * (std::numbers::pi / 2)), e3), 1e-15);
  EXPECT_EQ(dist(exp_pure(Quaternion{}), Quaternion::one()), 0.0);
  CounterRng rng(7, 2);
  for (int t = 0; t < 100; ++t) {
    const Quaternion v = Quaternion::pure(rng.uniform_vec(-3, 3));
    EXPECT_LT(dist(qmul(exp_pure(v), exp_pure(v * -1.0)), Quaternion::one()), 1e-14);
  }
  EXPECT_THROW(exp_pure(Quaternion{0.1, 1, 0, 0}), NotPureError);
}

TEST(Quaternion, ComplexProjection) {
  const Vec3 x{1, -2, 0.5};
  const ComplexProjection one = complex_project(Quaternion::one(), x);
  EXPECT_EQ(one.value, std::complex<double>(1, 0));
  EXPECT_EQ(one.residual, 0.0);

  const ComplexProjection j = complex_project(unit_radial(x), x);
  EXPECT_NEAR(j.value.real(), 0.0, 1e-15);
  EXPECT_NEAR(j.value.imag(), 1.0, 1e-15);
  EXPECT_LT(j.residual, 1e-15);

  EXPECT_NEAR(complex_project(e1, {0, 0, 1}).residual, 1.0, 1e-15);

  CounterRng rng(7, 3);
  for (int t = 0; t < 100; ++t) {
    const Vec3 y = rng.uniform_vec(-2, 2);
    const double theta = rng.uniform(-4, 4);
    const ComplexProjection e = complex_project(exp_pure(unit_radial(y) * theta), y);
    EXPECT_LT(std::abs(e.value - std::polar(1.0, theta)), 1e-12);

    const std::complex<double> a{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const std::complex<double> b{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const Quaternion p = complex_embed(a, y);
    const Quaternion q = complex_embed(b, y);
    const ComplexProjection pq = complex_project(qmul(p, q), y);
    EXPECT_LT(std::abs(pq.value - a * b), 1e-12);
    EXPECT_LT(pq.residual, 1e-12);
  }
}

TEST(Quaternion, MultiplierLiesInCommutant) {
  const AdmissibilityPolicy policy;
  int checked = 0;
  for (std::uint64_t i = 0; checked < 100; ++i) {
    CounterRng rng(11, i);
    const Vec3 a = rng.uniform_vec(-1, 1);
    const Vec3 b = rng.uniform_vec(-1, 1);
    const Vec3 x = rng.uniform_vec(-1, 1);
    if (!policy.admissible({{a + b, x}, {a, x - b}, {b, x}})) continue;
    ++checked;
    EXPECT_LT(complex_project(rep_multiplier(a, b, x), x).residual, 1e-12);
  }
}
