#include <gtest/gtest.h>

#include "monopole/families.hpp"
#include "monopole/kontsevich.hpp"
#include "oracles.hpp"

using namespace monopole;

TEST(BlockPoisson, Entries) {
  const PoissonMatrix p = block_poisson();
  EXPECT_EQ(p(0, 1), SymbolFunction(beta(0, 1)));
  EXPECT_EQ(p(0, 3), symbol::constant(-1));
  EXPECT_EQ(p(3, 0), symbol::constant(1));
  EXPECT_TRUE(p(0, 4).is_zero());
  EXPECT_TRUE(p(3, 4).is_zero());
  EXPECT_TRUE(p.is_antisymmetric());
}

TEST(BlockPoisson, RejectsNonAntisymmetricEntries) {
  std::array<std::array<SymbolFunction, 6>, 6> entries{};
  entries[0][1] = symbol::constant(1);
  EXPECT_THROW(PoissonMatrix{entries}, std::exception);
}

TEST(BlockPoisson, JacobiatorVanishes) {
  const PoissonMatrix p = block_poisson();
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      for (int c = 0; c < 6; ++c) EXPECT_TRUE(p.jacobiator(a, b, c).is_zero()) << a << b << c;
}

TEST(Kontsevich, MomentumProduct) {
  const StarSeries s = kontsevich_star2(symbol::p(0), symbol::p(1), block_poisson());
  EXPECT_EQ(s[0], symbol::p(0) * symbol::p(1));
  EXPECT_EQ(s[1], SymbolFunction(beta(0, 1) * GaussianRational::i() * GaussianRational(1, 2)));
  EXPECT_TRUE(s[2].is_zero());
}

TEST(Kontsevich, ConstantPoissonGivesMoyal) {
  for (std::uint64_t t = 0; t < 20; ++t) {
    CounterRng rng(13, t);
    const SymbolFunction f = oracle::random_symbol(rng);
    const SymbolFunction g = oracle::random_symbol(rng);
    const StarSeries k = kontsevich_star2(f, g, canonical_poisson());
    for (int n = 0; n <= 2; ++n) EXPECT_EQ(k[n], oracle::moyal_operator(n).apply(f, g));
  }
}

TEST(Kontsevich, FirstOrderAntisymmetrization) {
  const PoissonMatrix p = block_poisson();
  for (std::uint64_t t = 0; t < 20; ++t) {
    CounterRng rng(13, 100 + t);
    const SymbolFunction f = oracle::random_symbol(rng);
    const SymbolFunction g = oracle::random_symbol(rng);
    SymbolFunction pfg, pgf;
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b) {
        pfg += p(a, b) * symbol::diff(f, a) * symbol::diff(g, b);
        pgf += p(a, b) * symbol::diff(g, a) * symbol::diff(f, b);
      }
    const SymbolFunction lhs = kontsevich_star2(f, g, p)[1] - kontsevich_star2(g, f, p)[1];
    EXPECT_EQ(lhs * GaussianRational::integer(2), (pfg - pgf) * GaussianRational::i());
    EXPECT_EQ(pfg, poisson_bracket(f, g));
  }
}

TEST(Kontsevich, EquivalentToStarProduct) {
  EXPECT_TRUE(check_equivalence(coordinate_family()).pass);
  EXPECT_TRUE(check_equivalence(constant_family()).pass);
  const EquivalenceReport r = check_equivalence(radial_family());
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.pairs, radial_family().size() * radial_family().size());
}
