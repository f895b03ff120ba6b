#include <gtest/gtest.h>

#include <cstdlib>
#include <numbers>

#include "monopole/errors.hpp"
#include "monopole/representation.hpp"
#include "monopole/verification.hpp"
#include "oracles.hpp"

using namespace monopole;

namespace {

double dist(const Quaternion& a, const Quaternion& b) { return (a - b).norm(); }

const AdmissibilityPolicy policy;

std::pair<Vec3, Vec3> admissible_pair(std::uint64_t seed, std::uint64_t index) {
  CounterRng rng(seed, index);
  for (;;) {
    const Vec3 a = rng.uniform_vec(-1, 1);
    const Vec3 x = rng.uniform_vec(-1, 1);
    if (policy.admissible(a, x)) return {a, x};
  }
}

KernelPoint sample_kernel_point(CounterRng& rng, double spread) {
  KernelPoint k;
  k.p = rng.uniform_vec(-1, 1);
  k.p1 = rng.uniform_vec(-1, 1);
  k.p2 = rng.uniform_vec(-1, 1);
  k.q = rng.uniform_vec(0.5, 1.5);
  k.q1 = k.q + rng.uniform_vec(-spread, spread);
  k.q2 = k.q + rng.uniform_vec(-spread, spread);
  k.hbar = rng.uniform(0.3, 1.0);
  return k;
}

}  // namespace

TEST(Phase, ClosedFormMatchesQuadrature) {
  const Quaternion w = w_phase({1, 0, 0}, {0, 1, 0});
  EXPECT_LT(dist(w, oracle::phase_by_quadrature({1, 0, 0}, {0, 1, 0})), 1e-10);
  // angle between (0,1,0) and (-1,1,0) is pi/4, axis e3
  EXPECT_LT(dist(w, Quaternion{std::cos(std::numbers::pi / 8), 0, 0, std::sin(std::numbers::pi / 8)}), 1e-15);
  for (std::uint64_t i = 0; i < 100; ++i) {
    const auto [a, x] = admissible_pair(31, i);
    EXPECT_LT(dist(w_phase(a, x), oracle::phase_by_quadrature(a, x)), 1e-10);
  }
}

TEST(Phase, DegenerateCases) {
  const Vec3 x{0.3, -0.2, 0.9};
  EXPECT_EQ(dist(w_phase(x * 0.3, x), Quaternion::one()), 0.0);
  EXPECT_EQ(dist(w_phase({0, 0, 0}, x), Quaternion::one()), 0.0);
  EXPECT_THROW(w_phase(x * 2.0, x), SingularSegmentError);
  EXPECT_THROW(w_phase(x, x), ZeroVectorError);
  EXPECT_THROW(w_phase({1, 0, 0}, {0, 0, 0}), ZeroVectorError);
  // just above the collinearity threshold the closed form is used and stays continuous
  const Vec3 tilt = x * 0.3 + Vec3{1e-6, 0, 0};
  EXPECT_LT(dist(w_phase(tilt, x), Quaternion::one()), 1e-5);
  EXPECT_THROW(w_phase(x * 2.0 + Vec3{0, 1e-12, 0}, x, 1e-8), SingularSegmentError);
}

TEST(Phase, UnitNorm) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    const auto [a, x] = admissible_pair(32, i);
    EXPECT_NEAR(w_phase(a, x).norm(), 1.0, 1e-12);
  }
}

TEST(Multiplier, TrivialArguments) {
  const Vec3 a{0.4, -0.1, 0.2};
  const Vec3 x{0.5, 0.9, -0.3};
  EXPECT_LT(dist(rep_multiplier(a, {0, 0, 0}, x), Quaternion::one()), 1e-15);
  EXPECT_LT(dist(rep_multiplier({0, 0, 0}, a, x), Quaternion::one()), 1e-15);
  EXPECT_NEAR(rep_multiplier(a, {0.2, 0.3, -0.6}, x).norm(), 1.0, 1e-12);
}

TEST(Cocycle, TrivialAndRandom) {
  const Vec3 a{0.4, -0.1, 0.2}, b{-0.3, 0.5, 0.1};
  const Vec3 x{0.5, 0.9, -0.3};
  EXPECT_LT(cocycle_check(a, b, {0, 0, 0}, x), 1e-15);
  EXPECT_EQ(cocycle_check({0, 0, 0}, {0, 0, 0}, {0, 0, 0}, x), 0.0);
  const SampledReport r = verify_cocycle(0, 100, 1e-10);
  EXPECT_TRUE(r.pass);
  EXPECT_LT(r.max_primary, 1e-10);
  EXPECT_LT(r.max_secondary, 1e-10);
}

TEST(Cocycle, PointwiseFormAgreesWithOperatorComposition) {
  // A wrong conjugation order in the pointwise form is caught by the operator check.
  const Vec3 a{0.4, -0.1, 0.2}, b{-0.3, 0.5, 0.1}, c{0.2, 0.3, -0.4};
  const Vec3 x{0.5, 0.9, -0.3};
  ASSERT_TRUE(policy.admissible(cocycle_phase_arguments(a, b, c, x)));
  const Quaternion wc = w_phase(c, x);
  const Quaternion wrong = rep_multiplier(a + b, c, x) * (wc * rep_multiplier(a, b, x - c) * conj(wc));
  const Quaternion rhs = rep_multiplier(a, b + c, x) * rep_multiplier(b, c, x);
  EXPECT_GT(dist(wrong, rhs), 1e-6);
  EXPECT_LT(cocycle_check(a, b, c, x), 1e-12);
  EXPECT_LT(cocycle_operator_check(a, b, c, gaussian_test_wavefunction(), {x}), 1e-12);
}

TEST(Translations, Basics) {
  const TestWavefunction psi = gaussian_test_wavefunction();
  const Vec3 zero{0, 0, 0};
  const Vec3 a{0.3, -0.4, 0.2};
  CounterRng rng(33, 0);
  for (int t = 0; t < 50; ++t) {
    const Vec3 x = rng.uniform_vec(-1, 1);
    if (!policy.admissible(a, x + a) || !policy.admissible(-a, x)) continue;
    EXPECT_LT(dist(apply_V(zero, psi)(x), psi(x)), 1e-15);
    EXPECT_NEAR(apply_V(a, psi)(x).norm(), psi(x + a).norm(), 1e-14);
    // V(a)V(-a) = M(a,-a)
    const Quaternion round_trip = apply_V(a, apply_V(-a, psi))(x);
    EXPECT_LT(dist(round_trip, rep_multiplier(a, -a, x) * psi(x)), 1e-10);
    EXPECT_LT(dist(apply_V_inverse(a, apply_V(a, psi))(x), psi(x)), 1e-14);
  }
}

TEST(WeakRepresentation, Identities) {
  const TestWavefunction psi = gaussian_test_wavefunction();
  const Vec3 a{0.3, -0.4, 0.2}, b{-0.5, 0.1, 0.6};
  const std::vector<Vec3> points{{0.7, 0.2, -0.5}, {-0.4, 0.9, 0.3}, {0.6, -0.6, 0.8}};
  EXPECT_LT(weak_rep_check(a, {0, 0, 0}, psi, points), 1e-15);
  EXPECT_LT(weak_rep_check(a, b, psi, points), 1e-10);
  const SampledReport r = verify_weak_rep(0, 100, 1e-10);
  EXPECT_TRUE(r.pass);
}

TEST(WeakRepresentation, TOperators) {
  const TestWavefunction psi = gaussian_test_wavefunction();
  const Vec3 zero{0, 0, 0};
  const Vec3 u{0.3, -0.4, 0.2}, v{-0.5, 0.1, 0.6};
  const double hbar = 0.6;
  const Vec3 x{0.7, 0.2, -0.5};
  EXPECT_LT(dist(apply_T(zero, zero, psi, hbar)(x), psi(x)), 1e-15);
  EXPECT_LT(dist(apply_T(u, zero, psi, hbar)(x), apply_V(u * hbar, psi)(x)), 1e-15);
  EXPECT_THROW(apply_T(u, v, psi, 0.0), ConfigError);
  EXPECT_LT(t_product_check(u, v, {0.1, 0.5, -0.2}, {0.4, -0.3, 0.2}, psi, hbar, {x}), 1e-10);
}

TEST(MultiplierCrosscheck, Examples) {
  const Vec3 u{0.3, -0.5, 0.8}, x{0.9, 0.4, -0.7};
  const MultiplierComparison trivial = multiplier_crosscheck(u, {0, 0, 0}, x, 0.1, 2);
  EXPECT_LT(trivial.error, 1e-15);
  EXPECT_LT(std::abs(trivial.exact - 1.0), 1e-15);

  // parallel arguments: the first-order exponent vanishes, only the remainder survives
  const MultiplierComparison parallel = multiplier_crosscheck(u, u * 0.5, x, 0.05, 1);
  EXPECT_LT(parallel.error, 1e-5);

  EXPECT_THROW(multiplier_crosscheck(u, u, x, 0.1, 0), ConfigError);
}

TEST(MultiplierCrosscheck, ConvergenceOrder) {
  const MultiplierReport r = verify_multiplier(0, 10, {1, 2, 3}, {0.1, 0.05, 0.025}, 0.3);
  EXPECT_TRUE(r.pass);
  for (std::size_t k = 0; k < r.orders.size(); ++k) EXPECT_GE(r.min_slope[k], r.orders[k] + 0.7);
}

TEST(Kernel, ModulusAndDegeneratePoints) {
  CounterRng rng(40, 0);
  const double scale_tol = 1e-10;
  for (int t = 0; t < 100; ++t) {
    const KernelPoint k = sample_kernel_point(rng, 0.8);
    const Vec3 x = k.q - k.q1 + k.q2;
    if (!policy.admissible({{(k.q2 - k.q) * 2.0 + (k.q - k.q1) * 2.0, x}, {(k.q2 - k.q) * 2.0, x - (k.q - k.q1) * 2.0},
                            {(k.q - k.q1) * 2.0, x}}))
      continue;
    const double scale = std::pow(std::numbers::pi * k.hbar, -6);
    EXPECT_NEAR(std::abs(kernel_eval(k)) / scale, 1.0, scale_tol);
    // direct assembly
    const Quaternion m = rep_multiplier((k.q2 - k.q) * 2.0, (k.q - k.q1) * 2.0, x);
    const std::complex<double> by_hand = moyal_kernel(k) * complex_project(m, x).value;
    EXPECT_LT(std::abs(kernel_eval(k) - by_hand) / scale, 1e-14);
  }

  KernelPoint d = sample_kernel_point(rng, 0.0);
  d.q1 = d.q;
  d.q2 = d.q;
  EXPECT_LT(std::abs(kernel_eval(d) - moyal_kernel(d)) / std::abs(moyal_kernel(d)), 1e-15);
}

TEST(Kernel, ApproximateKernelVerbatim) {
  // coplanar q, q', q'' through the origin: the triple product vanishes
  KernelPoint k;
  k.p = {0.1, 0.2, 0.3};
  k.p1 = {-0.2, 0.4, 0.1};
  k.p2 = {0.5, -0.3, 0.2};
  k.q = {1.0, 0.5, 0.0};
  k.q1 = {0.8, 0.9, 0.0};
  k.q2 = {1.2, 0.1, 0.0};
  k.hbar = 0.7;
  EXPECT_LT(std::abs(kernel_approx_eval(k) - moyal_kernel(k)) / std::abs(moyal_kernel(k)), 1e-15);

  k.q2 = {1.2, 0.1, 0.3};
  const double t = k.q.dot(k.q1.cross(k.q2));
  const double r = (k.q - k.q1 + k.q2).norm();
  EXPECT_LT(std::abs(kernel_approx_eval(k) - moyal_kernel(k) * std::exp(-t / (r * r * r))), 1e-15);

  k.q = {1.0, 0.5, 0.0};
  k.q2 = {0.25, 0.5, 0.5};
  k.q1 = {1.25, 1.0, 0.5};
  EXPECT_THROW(kernel_approx_eval(k), ZeroVectorError);
}

TEST(Kernel, ApproximatePhaseConventionIsFlagged) {
  // The C_2 term of the multiplier exponent is i times the verbatim magnetic exponent.
  CounterRng rng(41, 0);
  for (int t = 0; t < 20; ++t) {
    const KernelPoint k = sample_kernel_point(rng, 0.5);
    const KernelPhaseComparison c = compare_kernel_phases(k);
    EXPECT_LT(std::abs(c.approx_log_ratio.imag()), 1e-12);
    EXPECT_LT(std::abs(c.c2_term - std::complex<double>(0, 1) * c.approx_log_ratio), 1e-12 * (1 + std::abs(c.c2_term)));
  }
}

TEST(Kernel, SmallSeparationFixesMultiplierNotConjugate) {
  // arg m follows the C_2 term (same sign, relative deviation shrinking with the separation);
  // the conjugate would have the opposite sign.
  const Vec3 q{0.8, -0.3, 0.6};
  const Vec3 d1{0.3, 0.7, -0.2};
  const Vec3 d2{-0.5, 0.2, 0.4};
  double previous = 1.0;
  for (double eps : {0.005, 0.0025, 0.00125}) {
    KernelPoint k;
    k.q = q;
    k.q1 = q + d1 * eps;
    k.q2 = q + d2 * eps;
    k.hbar = 0.5;
    const KernelPhaseComparison c = compare_kernel_phases(k);
    const double rel = std::abs(c.exact_log_ratio.imag() - c.c2_term.imag()) / std::abs(c.c2_term.imag());
    EXPECT_GT(c.exact_log_ratio.imag() * c.c2_term.imag(), 0.0);
    EXPECT_LT(rel, previous);
    EXPECT_LT(rel, 1e-3);
    previous = rel;
  }
}

TEST(Sampling, DeterministicAcrossThreadCounts) {
  setenv("MONOPOLE_STAR_THREADS", "1", 1);
  const SampledReport one = verify_cocycle(5, 40, 1e-10);
  setenv("MONOPOLE_STAR_THREADS", "4", 1);
  const SampledReport four = verify_cocycle(5, 40, 1e-10);
  unsetenv("MONOPOLE_STAR_THREADS");
  ASSERT_EQ(one.samples.size(), four.samples.size());
  for (std::size_t i = 0; i < one.samples.size(); ++i) {
    EXPECT_EQ(one.samples[i].primary, four.samples[i].primary);
    EXPECT_EQ(one.samples[i].secondary, four.samples[i].secondary);
    EXPECT_EQ(one.samples[i].rejected, four.samples[i].rejected);
  }
  CounterRng a(1, 2), b(1, 2), c(1, 3);
  const std::uint64_t first = a.next();
  EXPECT_EQ(first, b.next());
  EXPECT_NE(first, c.next());
}
