#include "monopole/representation.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "monopole/errors.hpp"
#include "monopole/outer_poly.hpp"
#include "monopole/zassenhaus.hpp"

namespace monopole {

namespace {

Quaternion exp_radial(const Vec3& x, double angle) {
  return exp_pure(unit_radial(x) * angle);
}

double distance(const Quaternion& a, const Quaternion& b) { return (a - b).norm(); }

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

const FourierPolynomial& exponent_coefficient(int order, int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<HbarSeries<FourierPolynomial>>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[order];
  if (!slot) slot = std::make_unique<HbarSeries<FourierPolynomial>>(multiplier_exponent(order));
  return (*slot)[n];
}

std::array<double, 12> fourier_point(const Vec3& u, const Vec3& u_right) {
  std::array<double, 12> vars{};
  for (int i = 0; i < 3; ++i) {
    vars[fourier::u(i)] = u[i];
    vars[fourier::u_right(i)] = u_right[i];
  }
  return vars;
}

}  // namespace

Quaternion w_phase(const Vec3& a, const Vec3& x, double collinear_epsilon) {
  const Vec3 xa = x - a;
  const double nx = x.norm();
  const double nxa = xa.norm();
  if (nx <= kZeroVectorEpsilon || nxa <= kZeroVectorEpsilon) {
    throw ZeroVectorError("w_phase: x or x - a vanishes");
  }
  const double na = a.norm();
  if (na == 0.0) return Quaternion::one();
  const Vec3 cr = a.cross(x);
  const double ncr = cr.norm();
  const double c = x.dot(xa);
  if (ncr < collinear_epsilon * na * nx) {
    if (c > 0.0) return Quaternion::one();
    throw SingularSegmentError("w_phase: segment from x to x - a passes through the origin");
  }
  const double alpha = std::atan2(ncr, c);
  return Quaternion::one() * std::cos(alpha / 2) + Quaternion::pure(cr * (std::sin(alpha / 2) / ncr));
}

Quaternion rep_multiplier(const Vec3& a, const Vec3& b, const Vec3& x) {
  return conj(w_phase(a + b, x)) * w_phase(a, x - b) * w_phase(b, x);
}

double cocycle_check(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& x) {
  const Quaternion wc = w_phase(c, x);
  const Quaternion lhs = rep_multiplier(a + b, c, x) * (conj(wc) * rep_multiplier(a, b, x - c) * wc);
  const Quaternion rhs = rep_multiplier(a, b + c, x) * rep_multiplier(b, c, x);
  return distance(lhs, rhs);
}

TestWavefunction apply_V(const Vec3& a, TestWavefunction psi) {
  return [a, psi = std::move(psi)](const Vec3& x) {
    const Vec3 y = x + a;
    return w_phase(a, y) * psi(y);
  };
}

TestWavefunction apply_V_inverse(const Vec3& c, TestWavefunction phi) {
  return [c, phi = std::move(phi)](const Vec3& x) { return conj(w_phase(c, x)) * phi(x - c); };
}

TestWavefunction apply_M(const Vec3& a, const Vec3& b, TestWavefunction psi) {
  return [a, b, psi = std::move(psi)](const Vec3& x) { return rep_multiplier(a, b, x) * psi(x); };
}

double cocycle_operator_check(const Vec3& a, const Vec3& b, const Vec3& c, const TestWavefunction& psi,
                              const std::vector<Vec3>& samples) {
  const TestWavefunction left = apply_V(a, apply_V(b, apply_V(c, psi)));
  const TestWavefunction inner = apply_V_inverse(c, apply_M(a, b, apply_V(c, psi)));
  const TestWavefunction right = apply_V(a + b + c, apply_M(a + b, c, inner));
  double worst = 0.0;
  for (const Vec3& x : samples) {
    const Vec3 y = x - a - b - c;
    worst = std::max(worst, distance(left(y), right(y)));
  }
  return worst;
}

double weak_rep_check(const Vec3& a, const Vec3& b, const TestWavefunction& psi, const std::vector<Vec3>& samples) {
  const TestWavefunction left = apply_V(a, apply_V(b, psi));
  const TestWavefunction right = apply_V(a + b, apply_M(a, b, psi));
  double worst = 0.0;
  for (const Vec3& x : samples) worst = std::max(worst, distance(left(x), right(x)));
  return worst;
}

TestWavefunction apply_T(const Vec3& u, const Vec3& v, TestWavefunction psi, double hbar) {
  if (!(hbar > 0.0)) throw ConfigError("apply_T: hbar must be positive");
  const double uv = u.dot(v);
  TestWavefunction phased = [v, uv, hbar, psi = std::move(psi)](const Vec3& x) {
    if (v.norm() == 0.0) return psi(x);
    return exp_radial(x, v.dot(x)) * exp_radial(x, -hbar * uv / 2) * psi(x);
  };
  return apply_V(u * hbar, std::move(phased));
}

Quaternion composite_multiplier(const Vec3& u, const Vec3& v, const Vec3& u_right, const Vec3& v_right,
                                const Vec3& x, double hbar) {
  const double symplectic = u.dot(v_right) - v.dot(u_right);
  const Quaternion m = rep_multiplier(u * hbar, u_right * hbar, x);
  if (symplectic == 0.0) return m;
  return m * exp_radial(x, hbar * symplectic / 2);
}

double t_product_check(const Vec3& u, const Vec3& v, const Vec3& u_right, const Vec3& v_right,
                       const TestWavefunction& psi, double hbar, const std::vector<Vec3>& samples) {
  const TestWavefunction left = apply_T(u, v, apply_T(u_right, v_right, psi, hbar), hbar);
  TestWavefunction twisted = [=](const Vec3& x) {
    return composite_multiplier(u, v, u_right, v_right, x, hbar) * psi(x);
  };
  const TestWavefunction right = apply_T(u + u_right, v + v_right, std::move(twisted), hbar);
  double worst = 0.0;
  for (const Vec3& x : samples) worst = std::max(worst, distance(left(x), right(x)));
  return worst;
}

MultiplierComparison multiplier_crosscheck(const Vec3& u, const Vec3& u_right, const Vec3& x, double hbar,
                                           int order) {
  if (order < 1) throw ConfigError("multiplier_crosscheck: order must be at least 1");
  if (!(hbar > 0.0)) throw ConfigError("multiplier_crosscheck: hbar must be positive");
  MultiplierComparison out;
  out.exact = complex_project(rep_multiplier(u * hbar, u_right * hbar, x), x).value;
  const std::array<double, 12> vars = fourier_point(u, u_right);
  std::complex<double> s = 0.0;
  double power = 1.0;
  for (int n = 1; n <= order; ++n) {
    power *= hbar;
    s += power * evaluate(exponent_coefficient(order, n), vars, x, hbar / 2);
  }
  out.series = std::exp(std::complex<double>(0.0, 1.0) * s);
  out.error = std::abs(out.exact - out.series);
  return out;
}

std::complex<double> moyal_kernel(const KernelPoint& k) {
  if (!(k.hbar > 0.0)) throw ConfigError("kernel: hbar must be positive");
  const double phase = -(2.0 / k.hbar) * ((k.p - k.p1).dot(k.q - k.q2) - (k.p - k.p2).dot(k.q - k.q1));
  const double scale = std::pow(std::numbers::pi * k.hbar, -6);
  return scale * std::polar(1.0, phase);
}

std::complex<double> kernel_eval(const KernelPoint& k) {
  const Vec3 x = k.q - k.q1 + k.q2;
  const Quaternion m = rep_multiplier((k.q2 - k.q) * 2.0, (k.q - k.q1) * 2.0, x);
  return moyal_kernel(k) * complex_project(m, x).value;
}

std::complex<double> kernel_approx_eval(const KernelPoint& k) {
  const Vec3 x = k.q - k.q1 + k.q2;
  const double r = x.norm();
  if (r <= kZeroVectorEpsilon) throw ZeroVectorError("kernel_approx_eval: q - q' + q'' vanishes");
  const double magnetic = -k.q.dot(k.q1.cross(k.q2)) / (r * r * r);
  return moyal_kernel(k) * std::exp(magnetic);
}

KernelPhaseComparison compare_kernel_phases(const KernelPoint& k) {
  KernelPhaseComparison out;
  const Vec3 x = k.q - k.q1 + k.q2;
  out.exact_log_ratio = std::log(kernel_eval(k) / moyal_kernel(k));
  out.approx_log_ratio = std::log(kernel_approx_eval(k) / moyal_kernel(k));
  const Vec3 u = (k.q2 - k.q) * (2.0 / k.hbar);
  const Vec3 u_right = (k.q - k.q1) * (2.0 / k.hbar);
  const std::complex<double> s1 = evaluate(exponent_coefficient(1, 1), fourier_point(u, u_right), x, k.hbar / 2);
  out.c2_term = std::complex<double>(0.0, 1.0) * k.hbar * s1;
  return out;
}

TestWavefunction gaussian_test_wavefunction() {
  return [](const Vec3& x) {
    const double envelope = std::exp(-x.dot(x) / 4);
    return Quaternion{std::cos(x.x), std::sin(x.y), x.z / 2, x.x * x.y / 2} * envelope;
  };
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : state_(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL)) {}

std::uint64_t CounterRng::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  return splitmix64(state_);
}

double CounterRng::uniform(double lo, double hi) {
  const double unit = static_cast<double>(next() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

Vec3 CounterRng::uniform_vec(double lo, double hi) {
  const double a = uniform(lo, hi);
  const double b = uniform(lo, hi);
  const double c = uniform(lo, hi);
  return {a, b, c};
}

bool AdmissibilityPolicy::admissible(const Vec3& a, const Vec3& x) const {
  if (x.norm() < min_radius || (x - a).norm() < min_radius) return false;
  const double na = a.norm();
  if (na == 0.0) return true;
  return a.cross(x).norm() >= min_sine * na * x.norm();
}

bool AdmissibilityPolicy::admissible(const std::vector<std::pair<Vec3, Vec3>>& phase_arguments) const {
  for (const auto& [a, x] : phase_arguments) {
    if (!admissible(a, x)) return false;
  }
  return true;
}

std::vector<std::pair<Vec3, Vec3>> cocycle_phase_arguments(const Vec3& a, const Vec3& b, const Vec3& c,
                                                           const Vec3& x) {
  return {
      {a + b + c, x}, {a + b, x - c}, {c, x}, {a, x - c - b}, {b, x - c},
      {a, x - b - c}, {b + c, x},     {b, x - c},
  };
}

std::vector<std::pair<Vec3, Vec3>> weak_rep_phase_arguments(const Vec3& a, const Vec3& b, const Vec3& x) {
  const Vec3 y = x + a + b;
  return {{a, x + a}, {b, y}, {a + b, y}};
}

std::vector<std::pair<Vec3, Vec3>> t_product_phase_arguments(const Vec3& u, const Vec3& u_right, const Vec3& x,
                                                             double hbar) {
  const Vec3 a = u * hbar;
  const Vec3 b = u_right * hbar;
  return {{a, x + a}, {b, x + a + b}, {a + b, x + a + b}};
}

}  // namespace monopole
