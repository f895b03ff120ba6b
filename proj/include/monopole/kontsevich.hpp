#pragma once

#include <array>
#include <string>
#include <vector>

#include "monopole/star_product.hpp"

namespace monopole {

/// Antisymmetric Poisson matrix over phase-space coordinates ordered (p1, p2, p3, q1, q2, q3).
class PoissonMatrix {
 public:
  static constexpr int kDimension = 6;

  PoissonMatrix() = default;
  /// Entries must be antisymmetric; the dimension is fixed at 6.
  explicit PoissonMatrix(std::array<std::array<SymbolFunction, 6>, 6> entries);

  const SymbolFunction& operator()(int a, int b) const { return entries_[a][b]; }

  bool is_antisymmetric() const;
  /// P^{ad} d_d P^{bc} + P^{bd} d_d P^{ca} + P^{cd} d_d P^{ab} for the given (a, b, c).
  SymbolFunction jacobiator(int a, int b, int c) const;

 private:
  std::array<std::array<SymbolFunction, 6>, 6> entries_{};
};

/// [[beta(q), -I], [I, 0]]
PoissonMatrix block_poisson();

/// [[0, -I], [I, 0]]
PoissonMatrix canonical_poisson();

/// Second-order Kontsevich product with the expansion parameter i hbar / 2:
///   fg + (i hbar/2) P^{ab} d_a f d_b g - (hbar^2/8) P^{a1 b1} P^{a2 b2} d_a1 d_a2 f d_b1 d_b2 g
///      - (hbar^2/12) P^{a1 b1} d_b1 P^{a2 b2} (d_a1 d_a2 f d_b2 g - d_a2 f d_a1 d_b2 g).
StarSeries kontsevich_star2(const SymbolFunction& f, const SymbolFunction& g, const PoissonMatrix& p);

struct EquivalenceFailure {
  std::string f, g;
  int order = 0;
  std::string residual;
};

struct EquivalenceReport {
  std::size_t pairs = 0;
  /// per hbar order
  std::array<std::size_t, 3> failing_pairs{};
  std::vector<EquivalenceFailure> failures;
  bool pass = true;
};

/// kontsevich_star2(f, g, block_poisson()) - star(f, g, 2) over all ordered pairs.
EquivalenceReport check_equivalence(const std::vector<NamedSymbol>& family,
                                    std::size_t max_failures_recorded = 16);

}  // namespace monopole
