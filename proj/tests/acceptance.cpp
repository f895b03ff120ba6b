// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "monopole/cli.hpp"
#include "monopole/families.hpp"
#include "monopole/kontsevich.hpp"
#include "monopole/reference.hpp"
#include "monopole/representation.hpp"
#include "monopole/star_product.hpp"
#include "monopole/verification.hpp"
#include "oracles.hpp"

using namespace monopole;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;  // <= 0: none
  std::function<Outcome()> body;
};

Outcome eq84_reproduction() {
  cli::RunConfig c;
  c.command = "expand";
  c.order = 2;
  const cli::RunResult r = cli::run(c);
  const auto& ref = r.report["reference"];
  std::ostringstream os;
  os << "B0/B1/B2 terms " << r.report["operators"][0]["term_count"] << "/" << r.report["operators"][1]["term_count"]
     << "/" << r.report["operators"][2]["term_count"] << ", exact match with stored table: "
     << (ref["match"].get<bool>() ? "yes" : "no");
  return {r.exit_code == cli::kPass && ref["match"].get<bool>(), os.str()};
}

Outcome zassenhaus_ground_truth() {
  const ZassenhausReport z = verify_zassenhaus(6);
  int matrix_ok = 0;
  for (std::uint64_t t = 0; t < 20; ++t) {
    CounterRng rng(2024, t);
    const oracle::Matrix x = oracle::random_strictly_upper(rng);
    const oracle::Matrix y = oracle::random_strictly_upper(rng);
    if (oracle::matrix_zassenhaus_identity(z.terms, x, y)) ++matrix_ok;
  }
  std::ostringstream os;
  os << "C2 " << (z.c2_matches ? "ok" : "MISMATCH") << ", C3 " << (z.c3_matches ? "ok" : "MISMATCH")
     << ", free-algebra identity to degree 6 " << (z.free_identity ? "ok" : "FAILED") << ", matrix oracle "
     << matrix_ok << "/20";
  return {z.c2_matches && z.c3_matches && z.free_identity && matrix_ok == 20, os.str()};
}

Outcome specialization_ground_truth() {
  const ZassenhausReport z = verify_zassenhaus(3);
  std::ostringstream os;
  os << "specialized C2 " << (z.specialized_c2_matches ? "ok" : "MISMATCH") << ", specialized C3 "
     << (z.specialized_c3_matches ? "ok" : "MISMATCH") << ", exponent through hbar^2 "
     << (z.exponent_matches ? "ok" : "MISMATCH");
  return {z.specialized_c2_matches && z.specialized_c3_matches && z.exponent_matches, os.str()};
}

std::string failing_summary(const AssociativityReport& r) {
  std::ostringstream os;
  for (std::size_t n = 0; n < r.failing_triples.size(); ++n) {
    if (n) os << ",";
    os << r.failing_triples[n];
  }
  return os.str();
}

Outcome associativity() {
  const auto family = acceptance_family();
  const AssociativityReport r = check_associativity(2, family);
  const auto t0 = std::chrono::steady_clock::now();
  const AssociativityReport stretch = check_associativity(3, family);
  const double stretch_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream os;
  os << r.triples << " triples, failing per hbar order [" << failing_summary(r) << "]"
     << "; stretch hbar^3 (non-blocking): " << (stretch.pass ? "PASS" : "FAIL") << " [" << failing_summary(stretch)
     << "] in " << stretch_s << " s";
  return {r.pass, os.str()};
}

Outcome kontsevich_equivalence() {
  const EquivalenceReport r = check_equivalence(acceptance_family());
  std::ostringstream os;
  os << r.pairs << " pairs, failing per order [" << r.failing_pairs[0] << "," << r.failing_pairs[1] << ","
     << r.failing_pairs[2] << "]";
  return {r.pass, os.str()};
}

Outcome coordinate_products() {
  const GaussianRational half_i = GaussianRational::i() * GaussianRational(1, 2);
  bool coords = true;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      StarSeries qp(1);
      qp[0] = symbol::q(i) * symbol::p(j);
      if (i == j) qp[1] = SymbolFunction(RadialFunction::constant(half_i));
      StarSeries pp(1);
      pp[0] = symbol::p(i) * symbol::p(j);
      pp[1] = SymbolFunction(beta(i, j) * half_i);
      coords = coords && star(symbol::q(i), symbol::p(j), 1) == qp && star(symbol::p(i), symbol::p(j), 1) == pp;
    }
  }
  bool antisym = true;
  const auto family = acceptance_family();
  for (const auto& f : family) {
    for (const auto& g : family) {
      const SymbolFunction lhs = star(f.f, g.f, 1)[1] - star(g.f, f.f, 1)[1];
      antisym = antisym && lhs == poisson_bracket(f.f, g.f) * GaussianRational::i();
    }
  }
  const SymbolFunction p1 = symbol::p(0), p2 = symbol::p(1), p3 = symbol::p(2);
  const bool jacobi = (poisson_bracket(p1, poisson_bracket(p2, p3)) + poisson_bracket(p2, poisson_bracket(p3, p1)) +
                       poisson_bracket(p3, poisson_bracket(p1, p2)))
                          .is_zero();
  std::ostringstream os;
  os << "q*p and p*p " << (coords ? "exact" : "MISMATCH") << ", B1 antisymmetrization = i{,} on "
     << family.size() * family.size() << " pairs " << (antisym ? "ok" : "FAILED") << ", Jacobi "
     << (jacobi ? "zero" : "NONZERO");
  return {coords && antisym && jacobi, os.str()};
}

Outcome phase_oracle() {
  const AdmissibilityPolicy policy;
  double worst = 0.0;
  int n = 0;
  for (std::uint64_t i = 0; n < 100; ++i) {
    CounterRng rng(0, i);
    const Vec3 a = rng.uniform_vec(-1, 1);
    const Vec3 x = rng.uniform_vec(-1, 1);
    if (!policy.admissible(a, x)) continue;
    ++n;
    worst = std::max(worst, (w_phase(a, x) - oracle::phase_by_quadrature(a, x)).norm());
  }
  std::ostringstream os;
  os << n << " pairs, max |w - w_quad| = " << worst << " (tol 1e-10)";
  return {worst < 1e-10, os.str()};
}

Outcome cocycle_and_weak_rep() {
  const SampledReport c = verify_cocycle(0, 100, 1e-10);
  const SampledReport w = verify_weak_rep(0, 100, 1e-10);
  std::ostringstream os;
  os << "cocycle max " << c.max_primary << " (operator form " << c.max_secondary << "), V-product max "
     << w.max_primary << ", T-product max " << w.max_secondary << " over 100 configurations each (tol 1e-10)";
  return {c.pass && w.pass, os.str()};
}

Outcome multiplier_convergence() {
  const MultiplierReport r = verify_multiplier(0, 10, {1, 2}, {0.1, 0.05, 0.025}, 0.3);
  std::ostringstream os;
  os << "min fitted slope N=1: " << r.min_slope[0] << " (need >= 1.7), N=2: " << r.min_slope[1]
     << " (need >= 2.7) over 10 configurations";
  return {r.pass, os.str()};
}

Outcome kernel_consistency() {
  const AdmissibilityPolicy policy;
  double worst_modulus = 0.0;
  int n = 0;
  for (std::uint64_t i = 0; n < 100; ++i) {
    CounterRng rng(0, i);
    KernelPoint k;
    k.p = rng.uniform_vec(-1, 1);
    k.p1 = rng.uniform_vec(-1, 1);
    k.p2 = rng.uniform_vec(-1, 1);
    k.q = rng.uniform_vec(-1, 1);
    k.q1 = rng.uniform_vec(-1, 1);
    k.q2 = rng.uniform_vec(-1, 1);
    k.hbar = rng.uniform(0.2, 1.0);
    const Vec3 a = (k.q2 - k.q) * 2.0;
    const Vec3 b = (k.q - k.q1) * 2.0;
    const Vec3 x = k.q - k.q1 + k.q2;
    if (!policy.admissible({{a + b, x}, {a, x - b}, {b, x}})) continue;
    ++n;
    const double scale = std::pow(std::numbers::pi * k.hbar, -6);
    worst_modulus = std::max(worst_modulus, std::abs(std::abs(kernel_eval(k)) - scale) / scale);
  }

  KernelPoint d;
  d.p = {0.3, -0.2, 0.5};
  d.p1 = {0.1, 0.4, -0.3};
  d.p2 = {-0.6, 0.2, 0.1};
  d.q = d.q1 = d.q2 = {0.7, -0.4, 0.9};
  d.hbar = 0.6;
  const double degenerate = std::abs(kernel_eval(d) - moyal_kernel(d)) / std::abs(moyal_kernel(d));

  KernelPoint cp = d;
  cp.q = {1.0, 0.5, 0.0};
  cp.q1 = {0.8, 0.9, 0.0};
  cp.q2 = {1.2, 0.1, 0.0};
  const double coplanar = std::abs(kernel_approx_eval(cp) - moyal_kernel(cp)) / std::abs(moyal_kernel(cp));

  std::ostringstream os;
  os << n << " points, max relative modulus deviation " << worst_modulus << "; degenerate point vs Moyal "
     << degenerate << "; coplanar approx kernel vs Moyal " << coplanar;
  return {worst_modulus < 1e-10 && degenerate < 1e-10 && coplanar < 1e-10, os.str()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "second-order star product reproduces the stored reference", 5, eq84_reproduction},
      {2, "Zassenhaus terms and free-algebra identity", 30, zassenhaus_ground_truth},
      {3, "monopole specialization of C2, C3 and the multiplier exponent", 0, specialization_ground_truth},
      {4, "associativity through hbar^2 on the acceptance family", 120, associativity},
      {5, "Kontsevich second-order equivalence", 60, kontsevich_equivalence},
      {6, "coordinate star products, Poisson bracket, Jacobi", 0, coordinate_products},
      {7, "geometric phase against quadrature", 10, phase_oracle},
      {8, "cocycle and weak-representation identities", 0, cocycle_and_weak_rep},
      {9, "multiplier convergence order", 0, multiplier_convergence},
      {10, "kernel modulus and degenerate limits", 0, kernel_consistency},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      out = c.body();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.time_limit_s <= 0 || seconds < c.time_limit_s;
    const bool pass = out.pass && in_time;
    if (!pass) ++failed;
    std::printf("[%s] criterion %2d: %s -- %s; %.2f s", pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                out.detail.c_str(), seconds);
    if (c.time_limit_s > 0) std::printf(" (limit %.0f s)", c.time_limit_s);
    std::printf("\n");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
