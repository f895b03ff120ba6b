#include "monopole/kontsevich.hpp"

#include <stdexcept>

#include "monopole/parallel.hpp"

namespace monopole {

namespace {

using Table = std::array<SymbolFunction, 6>;
using Table2 = std::array<std::array<SymbolFunction, 6>, 6>;

Table first_derivatives(const SymbolFunction& f) {
  Table d;
  for (int a = 0; a < 6; ++a) d[a] = symbol::diff(f, a);
  return d;
}

Table2 second_derivatives(const Table& d1) {
  Table2 d;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) d[a][b] = symbol::diff(d1[a], b);
  return d;
}

}  // namespace

PoissonMatrix::PoissonMatrix(std::array<std::array<SymbolFunction, 6>, 6> entries)
    : entries_(std::move(entries)) {
  if (!is_antisymmetric()) throw std::invalid_argument("PoissonMatrix: entries are not antisymmetric");
}

bool PoissonMatrix::is_antisymmetric() const {
  for (int a = 0; a < kDimension; ++a)
    for (int b = 0; b < kDimension; ++b)
      if (entries_[a][b] != -entries_[b][a]) return false;
  return true;
}

SymbolFunction PoissonMatrix::jacobiator(int a, int b, int c) const {
  SymbolFunction out;
  for (int d = 0; d < kDimension; ++d) {
    out += entries_[a][d] * symbol::diff(entries_[b][c], d);
    out += entries_[b][d] * symbol::diff(entries_[c][a], d);
    out += entries_[c][d] * symbol::diff(entries_[a][b], d);
  }
  return out;
}

PoissonMatrix block_poisson() {
  Table2 e{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j)
      if (i != j) e[i][j] = SymbolFunction(beta(i, j));
    e[i][3 + i] = SymbolFunction::constant(-1);
    e[3 + i][i] = SymbolFunction::constant(1);
  }
  return PoissonMatrix(e);
}

PoissonMatrix canonical_poisson() {
  Table2 e{};
  for (int i = 0; i < 3; ++i) {
    e[i][3 + i] = SymbolFunction::constant(-1);
    e[3 + i][i] = SymbolFunction::constant(1);
  }
  return PoissonMatrix(e);
}

StarSeries kontsevich_star2(const SymbolFunction& f, const SymbolFunction& g, const PoissonMatrix& p) {
  const Table df = first_derivatives(f);
  const Table dg = first_derivatives(g);
  const Table2 ddf = second_derivatives(df);
  const Table2 ddg = second_derivatives(dg);

  // d_c P^{ab}
  std::array<Table2, 6> dp{};
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      for (int c = 0; c < 6; ++c) dp[c][a][b] = symbol::diff(p(a, b), c);

  StarSeries out(2);
  out[0] = f * g;

  SymbolFunction first;
  for (int a = 0; a < 6; ++a) {
    if (df[a].is_zero()) continue;
    for (int b = 0; b < 6; ++b) {
      if (p(a, b).is_zero() || dg[b].is_zero()) continue;
      first += p(a, b) * (df[a] * dg[b]);
    }
  }
  out[1] = first * GaussianRational(0, mpq_class(1, 2));

  SymbolFunction quadratic;
  SymbolFunction gradient;
  for (int a1 = 0; a1 < 6; ++a1) {
    for (int b1 = 0; b1 < 6; ++b1) {
      const SymbolFunction& p1 = p(a1, b1);
      if (p1.is_zero()) continue;
      for (int a2 = 0; a2 < 6; ++a2) {
        for (int b2 = 0; b2 < 6; ++b2) {
          const SymbolFunction& p2 = p(a2, b2);
          if (!p2.is_zero() && !ddf[a1][a2].is_zero() && !ddg[b1][b2].is_zero()) {
            quadratic += (p1 * p2) * (ddf[a1][a2] * ddg[b1][b2]);
          }
          const SymbolFunction& grad = dp[b1][a2][b2];
          if (grad.is_zero()) continue;
          SymbolFunction bracket;
          if (!ddf[a1][a2].is_zero() && !dg[b2].is_zero()) bracket += ddf[a1][a2] * dg[b2];
          if (!df[a2].is_zero() && !ddg[a1][b2].is_zero()) bracket -= df[a2] * ddg[a1][b2];
          if (!bracket.is_zero()) gradient += (p1 * grad) * bracket;
        }
      }
    }
  }
  out[2] = quadratic * GaussianRational(-1, 8) - gradient * GaussianRational(1, 12);
  return out;
}

EquivalenceReport check_equivalence(const std::vector<NamedSymbol>& family,
                                    std::size_t max_failures_recorded) {
  const PoissonMatrix p = block_poisson();
  star_operators(2);
  const std::size_t n = family.size();
  std::vector<StarSeries> residuals(n * n, StarSeries(2));
  parallel_for(n * n, [&](std::size_t idx) {
    const auto& f = family[idx / n].f;
    const auto& g = family[idx % n].f;
    residuals[idx] = kontsevich_star2(f, g, p) - star(f, g, 2);
  });

  EquivalenceReport report;
  report.pairs = n * n;
  for (std::size_t idx = 0; idx < n * n; ++idx) {
    for (int t = 0; t <= 2; ++t) {
      if (residuals[idx][t].is_zero()) continue;
      report.pass = false;
      ++report.failing_pairs[static_cast<std::size_t>(t)];
      if (report.failures.size() < max_failures_recorded) {
        report.failures.push_back({family[idx / n].name, family[idx % n].name, t, to_string(residuals[idx][t])});
      }
    }
  }
  return report;
}

}  // namespace monopole
