#include "monopole/verification.hpp"

#include <cmath>

#include "monopole/errors.hpp"
#include "monopole/parallel.hpp"

namespace monopole {

namespace {

constexpr std::size_t kMaxDraws = 100000;

template <class Draw, class Accept>
std::size_t draw_admissible(CounterRng& rng, Draw&& draw, Accept&& accept) {
  for (std::size_t rejected = 0; rejected < kMaxDraws; ++rejected) {
    draw(rng);
    if (accept()) return rejected;
  }
  throw Error("no admissible configuration after " + std::to_string(kMaxDraws) + " draws");
}

void summarize(SampledReport& r) {
  for (const SampleResidual& s : r.samples) {
    r.max_primary = std::max(r.max_primary, s.primary);
    r.max_secondary = std::max(r.max_secondary, s.secondary);
  }
  r.pass = r.max_primary < r.tolerance && r.max_secondary < r.tolerance;
}

}  // namespace

SampledReport verify_cocycle(std::uint64_t seed, std::size_t samples, double tolerance) {
  SampledReport report;
  report.seed = seed;
  report.tolerance = tolerance;
  report.samples.resize(samples);
  const AdmissibilityPolicy policy;
  const TestWavefunction psi = gaussian_test_wavefunction();
  parallel_for(samples, [&](std::size_t i) {
    CounterRng rng(seed, i);
    Vec3 a, b, c, x;
    SampleResidual& out = report.samples[i];
    out.index = i;
    out.rejected = draw_admissible(
        rng,
        [&](CounterRng& r) {
          a = r.uniform_vec(-1, 1);
          b = r.uniform_vec(-1, 1);
          c = r.uniform_vec(-1, 1);
          x = r.uniform_vec(-1, 1);
        },
        [&] { return policy.admissible(cocycle_phase_arguments(a, b, c, x)); });
    out.primary = cocycle_check(a, b, c, x);
    out.secondary = cocycle_operator_check(a, b, c, psi, {x});
  });
  summarize(report);
  return report;
}

SampledReport verify_weak_rep(std::uint64_t seed, std::size_t samples, double tolerance) {
  SampledReport report;
  report.seed = seed;
  report.tolerance = tolerance;
  report.samples.resize(samples);
  const AdmissibilityPolicy policy;
  const TestWavefunction psi = gaussian_test_wavefunction();
  parallel_for(samples, [&](std::size_t i) {
    CounterRng rng(seed, i);
    Vec3 a, b, x, u, v, u_right, v_right;
    double hbar = 1.0;
    SampleResidual& out = report.samples[i];
    out.index = i;
    out.rejected = draw_admissible(
        rng,
        [&](CounterRng& r) {
          a = r.uniform_vec(-1, 1);
          b = r.uniform_vec(-1, 1);
          x = r.uniform_vec(-1, 1);
          u = r.uniform_vec(-1, 1);
          v = r.uniform_vec(-1, 1);
          u_right = r.uniform_vec(-1, 1);
          v_right = r.uniform_vec(-1, 1);
          hbar = r.uniform(0.2, 1.0);
        },
        [&] {
          return policy.admissible(weak_rep_phase_arguments(a, b, x)) &&
                 policy.admissible(t_product_phase_arguments(u, u_right, x, hbar));
        });
    out.primary = weak_rep_check(a, b, psi, {x});
    out.secondary = t_product_check(u, v, u_right, v_right, psi, hbar, {x});
  });
  summarize(report);
  return report;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw ConfigError("loglog_slope: need at least two points");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double lx = std::log(x[k]);
    const double ly = std::log(y[k]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

MultiplierReport verify_multiplier(std::uint64_t seed, std::size_t configs, const std::vector<int>& orders,
                                   const std::vector<double>& hbars, double slope_margin) {
  if (hbars.size() < 2) throw ConfigError("verify multiplier: need at least two hbar values");
  for (double h : hbars) {
    if (!(h > 0.0)) throw ConfigError("verify multiplier: hbar values must be positive");
  }
  for (int n : orders) {
    if (n < 1) throw ConfigError("verify multiplier: orders must be at least 1");
  }
  MultiplierReport report;
  report.seed = seed;
  report.orders = orders;
  report.hbars = hbars;
  report.slope_margin = slope_margin;

  const double hbar_max = *std::max_element(hbars.begin(), hbars.end());
  const AdmissibilityPolicy policy;
  std::vector<std::array<Vec3, 3>> points(configs);
  for (std::size_t i = 0; i < configs; ++i) {
    CounterRng rng(seed, i);
    Vec3& u = points[i][0];
    Vec3& u_right = points[i][1];
    Vec3& x = points[i][2];
    draw_admissible(
        rng,
        [&](CounterRng& r) {
          u = r.uniform_vec(-1, 1);
          u_right = r.uniform_vec(-1, 1);
          x = r.uniform_vec(-1, 1);
        },
        [&] {
          const Vec3 a = u * hbar_max;
          const Vec3 b = u_right * hbar_max;
          return x.norm() >= 0.5 && policy.admissible({{a + b, x}, {a, x - b}, {b, x}});
        });
  }

  report.results.resize(configs * orders.size());
  parallel_for(report.results.size(), [&](std::size_t k) {
    const std::size_t i = k / orders.size();
    MultiplierConfigResult& r = report.results[k];
    r.index = i;
    r.u = points[i][0];
    r.u_right = points[i][1];
    r.x = points[i][2];
    r.order = orders[k % orders.size()];
    for (double h : hbars) r.errors.push_back(multiplier_crosscheck(r.u, r.u_right, r.x, h, r.order).error);
    r.slope = loglog_slope(hbars, r.errors);
    r.pass = std::isfinite(r.slope) && r.slope >= r.order + 1 - slope_margin;
  });

  report.min_slope.assign(orders.size(), INFINITY);
  for (std::size_t k = 0; k < report.results.size(); ++k) {
    double& m = report.min_slope[k % orders.size()];
    m = std::min(m, report.results[k].slope);
    report.pass = report.pass && report.results[k].pass;
  }
  return report;
}

FourierPolynomial directional_q_derivative(const FourierPolynomial& f, std::size_t first) {
  FourierPolynomial out;
  for (int k = 0; k < 3; ++k) out += f.diff_q(k).times_variable(first + static_cast<std::size_t>(k));
  return out;
}

ZassenhausReport verify_zassenhaus(int max_degree) {
  if (max_degree < 3) throw ConfigError("verify zassenhaus: max degree must be at least 3");
  ZassenhausReport r;
  r.max_degree = max_degree;
  r.terms = zassenhaus_terms(max_degree);
  for (int n = 2; n <= max_degree; ++n) {
    r.brackets.push_back(dynkin_project(r.terms[static_cast<std::size_t>(n - 2)], n));
  }

  const FreeAlgebraElement x = FreeAlgebraElement::letter('X', max_degree);
  const FreeAlgebraElement y = FreeAlgebraElement::letter('Y', max_degree);
  r.c2_matches = r.terms[0] == commutator(x, y) * mpq_class(-1, 2);
  r.c3_matches = r.terms[1] == commutator(x, commutator(x, y)) * mpq_class(1, 6) +
                                   commutator(y, commutator(x, y)) * mpq_class(1, 3);

  FreeAlgebraElement lhs = x.exp() * y.exp();
  for (const FreeAlgebraElement& c : r.terms) lhs = lhs * c.exp();
  r.free_identity = lhs == (x + y).exp();

  // Closed forms: C_2 -> (hbar/2) u.beta u', C_3 -> -(hbar^2/6)[u.(u.d)beta u' + 2 u.(u'.d)beta u'].
  const FourierPolynomial ubu = u_beta_u_right();
  const FourierPolynomial third = directional_q_derivative(ubu, fourier::u(0)) +
                                  directional_q_derivative(ubu, fourier::u_right(0)) * GaussianRational::integer(2);
  const auto specialized = specialized_zassenhaus_terms(2);
  HbarSeries<FourierPolynomial> expected_c2(2);
  expected_c2[1] = ubu * GaussianRational(1, 2);
  HbarSeries<FourierPolynomial> expected_c3(2);
  expected_c3[2] = third * GaussianRational(-1, 6);
  r.specialized_c2_matches = specialized.size() >= 1 && specialized[0] == expected_c2;
  r.specialized_c3_matches = specialized.size() >= 2 && specialized[1] == expected_c3;

  HbarSeries<FourierPolynomial> expected_s(2);
  expected_s[1] = ubu * GaussianRational(-1, 2);
  expected_s[2] = third * GaussianRational(1, 6);
  r.exponent_matches = multiplier_exponent(2) == expected_s;

  r.pass = r.c2_matches && r.c3_matches && r.free_identity && r.specialized_c2_matches &&
           r.specialized_c3_matches && r.exponent_matches;
  return r;
}

}  // namespace monopole
