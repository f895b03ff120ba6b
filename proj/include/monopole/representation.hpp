#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "monopole/quaternion.hpp"

namespace monopole {

inline constexpr double kDefaultCollinearEpsilon = 1e-8;

/// Pointwise-evaluable quaternion wave function.
using TestWavefunction = std::function<Quaternion(const Vec3&)>;

/// w(a, x) = cos(alpha/2) + j(a x x) sin(alpha/2), alpha the angle between x and x - a.
/// Returns 1 for (near-)collinear a and x on the same side of the origin; throws
/// SingularSegmentError when the segment from x to x - a crosses the origin.
Quaternion w_phase(const Vec3& a, const Vec3& x, double collinear_epsilon = kDefaultCollinearEpsilon);

/// m(a, b; x) = w(a+b, x)^* w(a, x-b) w(b, x).
Quaternion rep_multiplier(const Vec3& a, const Vec3& b, const Vec3& x);

/// |m(a+b,c;x) [w(c,x)^* m(a,b;x-c) w(c,x)] - m(a,b+c;x) m(b,c;x)|.
double cocycle_check(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& x);

/// (V(a) psi)(x) = w(a, x+a) psi(x+a)
TestWavefunction apply_V(const Vec3& a, TestWavefunction psi);

/// (V(c)^{-1} phi)(x) = w(c, x)^* phi(x - c)
TestWavefunction apply_V_inverse(const Vec3& c, TestWavefunction phi);

/// (M(a, b) psi)(x) = m(a, b; x) psi(x)
TestWavefunction apply_M(const Vec3& a, const Vec3& b, TestWavefunction psi);

/// Operator form of the cocycle identity at the sample points x:
/// max |(V(a)V(b)V(c)psi)(y) - (V(a+b+c) M(a+b,c) V(c)^{-1} M(a,b) V(c) psi)(y)|, y = x - a - b - c.
double cocycle_operator_check(const Vec3& a, const Vec3& b, const Vec3& c, const TestWavefunction& psi,
                              const std::vector<Vec3>& samples);

/// max over samples of |V(a)V(b)psi - V(a+b)M(a,b)psi|.
double weak_rep_check(const Vec3& a, const Vec3& b, const TestWavefunction& psi, const std::vector<Vec3>& samples);

/// T(u, v) = e^{J u.P} e^{J v.Q} e^{-J hbar u.v/2} applied pointwise:
/// (T psi)(x) = w(hbar u, y) exp(j(y) v.y) exp(-j(y) hbar u.v/2) psi(y) with y = x + hbar u.
TestWavefunction apply_T(const Vec3& u, const Vec3& v, TestWavefunction psi, double hbar);

/// Composite multiplier M_hbar(w, w') at x: m(hbar u, hbar u'; x) exp(j(x) hbar (u.v' - v.u')/2).
Quaternion composite_multiplier(const Vec3& u, const Vec3& v, const Vec3& u_right, const Vec3& v_right,
                                const Vec3& x, double hbar);

/// max over samples of |T(w)T(w')psi - T(w+w') M_hbar(w,w') psi|.
double t_product_check(const Vec3& u, const Vec3& v, const Vec3& u_right, const Vec3& v_right,
                       const TestWavefunction& psi, double hbar, const std::vector<Vec3>& samples);

struct MultiplierComparison {
  std::complex<double> exact;
  std::complex<double> series;
  double error = 0.0;
};

/// Exact complexified m(hbar u, hbar u'; x) against exp(i s_N) with s_N the truncated
/// Zassenhaus exponent evaluated at mu = hbar/2.
MultiplierComparison multiplier_crosscheck(const Vec3& u, const Vec3& u_right, const Vec3& x, double hbar, int order);

/// Arguments of the integral kernel K(p', q', p'', q''; p, q).
struct KernelPoint {
  Vec3 p1, q1;  // p', q'
  Vec3 p2, q2;  // p'', q''
  Vec3 p, q;
  double hbar = 1.0;
};

/// (pi hbar)^-6 exp{-(2i/hbar)[(p-p').(q-q'') - (p-p'').(q-q')]}
std::complex<double> moyal_kernel(const KernelPoint& k);

/// Moyal kernel times m(2(q''-q), 2(q-q'); q - q' + q'').
std::complex<double> kernel_eval(const KernelPoint& k);

/// Moyal exponent plus the real term -q.(q' x q'')/|q - q' + q''|^3, as printed for the
/// C_2-truncated kernel.
std::complex<double> kernel_approx_eval(const KernelPoint& k);

/// Logarithms of kernel / Moyal kernel next to the C_2 exponent term i hbar s_1 evaluated
/// at u = 2(q''-q)/hbar, u' = 2(q-q')/hbar, x = q - q' + q'', mu = hbar/2.
struct KernelPhaseComparison {
  std::complex<double> exact_log_ratio;
  std::complex<double> approx_log_ratio;
  std::complex<double> c2_term;
};
KernelPhaseComparison compare_kernel_phases(const KernelPoint& k);

/// exp(-|x|^2/4) (cos x1 + sin x2 e1 + x3/2 e2 + x1 x2/2 e3)
TestWavefunction gaussian_test_wavefunction();

/// Counter-based generator: stream (seed, index) is reproducible independent of thread layout.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);
  std::uint64_t next();
  double uniform(double lo, double hi);
  Vec3 uniform_vec(double lo, double hi);

 private:
  std::uint64_t state_;
};

/// Sampling policy shared by the randomized checks: |x| and |x - a| at least min_radius and,
/// for a != 0, |a x x| >= min_sine |a| |x|.
struct AdmissibilityPolicy {
  double min_radius = 0.1;
  double min_sine = 0.05;
  bool admissible(const Vec3& a, const Vec3& x) const;
  bool admissible(const std::vector<std::pair<Vec3, Vec3>>& phase_arguments) const;
};

/// Every (a, x) handed to w_phase by cocycle_check and the matching operator composition.
std::vector<std::pair<Vec3, Vec3>> cocycle_phase_arguments(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& x);
/// Every (a, x) used by weak_rep_check at the sample point.
std::vector<std::pair<Vec3, Vec3>> weak_rep_phase_arguments(const Vec3& a, const Vec3& b, const Vec3& x);
/// Every (a, x) used by t_product_check at the sample point.
std::vector<std::pair<Vec3, Vec3>> t_product_phase_arguments(const Vec3& u, const Vec3& u_right, const Vec3& x,
                                                             double hbar);

}  // namespace monopole
