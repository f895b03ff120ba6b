#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monopole/representation.hpp"
#include "monopole/zassenhaus.hpp"

namespace monopole {

/// One seeded configuration of a randomized identity check.
struct SampleResidual {
  std::size_t index = 0;
  /// rejected draws before an admissible configuration was found
  std::size_t rejected = 0;
  /// pointwise identity (cocycle) or V-form identity (weak representation)
  double primary = 0.0;
  /// operator composition (cocycle) or T-product identity (weak representation)
  double secondary = 0.0;
};

struct SampledReport {
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  std::vector<SampleResidual> samples;
  double max_primary = 0.0;
  double max_secondary = 0.0;
  bool pass = true;
};

/// Cocycle identity in pointwise form and by operator composition on the Gaussian test
/// function, over `samples` admissible (a, b, c, x) with components in [-1, 1].
SampledReport verify_cocycle(std::uint64_t seed, std::size_t samples, double tolerance);

/// V(a)V(b) = V(a+b)M(a,b) and T(w)T(w') = T(w+w')M_hbar(w,w') at admissible random points;
/// hbar is drawn from [0.2, 1].
SampledReport verify_weak_rep(std::uint64_t seed, std::size_t samples, double tolerance);

struct MultiplierConfigResult {
  std::size_t index = 0;
  Vec3 u, u_right, x;
  int order = 0;
  std::vector<double> errors;  // one per hbar
  double slope = 0.0;
  bool pass = true;
};

struct MultiplierReport {
  std::uint64_t seed = 0;
  std::vector<int> orders;
  std::vector<double> hbars;
  double slope_margin = 0.3;
  std::vector<MultiplierConfigResult> results;
  /// per order: smallest fitted slope over configurations
  std::vector<double> min_slope;
  bool pass = true;
};

/// Least-squares slope of log(error) against log(hbar); required slope is N + 1 - margin.
MultiplierReport verify_multiplier(std::uint64_t seed, std::size_t configs, const std::vector<int>& orders,
                                   const std::vector<double>& hbars, double slope_margin);

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

struct ZassenhausReport {
  int max_degree = 0;
  std::vector<FreeAlgebraElement> terms;  // C_2 .. C_N
  std::vector<NestedCommutatorCombo> brackets;
  bool c2_matches = false;
  bool c3_matches = false;
  /// e^X e^Y prod e^{C_n} == e^{X+Y} mod degree N+1
  bool free_identity = false;
  bool specialized_c2_matches = false;
  bool specialized_c3_matches = false;
  bool exponent_matches = false;
  bool pass = false;
};

/// Ground-truth checks of the Zassenhaus terms and their monopole specialization.
ZassenhausReport verify_zassenhaus(int max_degree);

/// (u.d) applied to the coefficients: sum_k w_k d_k f with w the Fourier block starting at `first`.
FourierPolynomial directional_q_derivative(const FourierPolynomial& f, std::size_t first);

}  // namespace monopole
