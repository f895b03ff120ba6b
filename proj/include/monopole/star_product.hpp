#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "monopole/hbar_series.hpp"
#include "monopole/outer_poly.hpp"

namespace monopole {

/// Derivative orders along (p1, p2, p3, q1, q2, q3).
using DerivKey = std::array<int, 6>;

/// Memoized partial derivatives of one symbol function.
class DerivativeCache {
 public:
  DerivativeCache() = default;
  DerivativeCache(SymbolFunction f, const std::set<DerivKey>& keys);

  /// nullptr when the derivative vanishes.
  const SymbolFunction* find(const DerivKey& k) const;
  /// Computes and stores on demand.
  const SymbolFunction& get(const DerivKey& k);

 private:
  std::map<DerivKey, SymbolFunction> derivatives_;
};

/// sum coeff(q) * (d^left f) * (d^right g).
class BidiffOperator {
 public:
  using Key = std::pair<DerivKey, DerivKey>;

  void add(const DerivKey& left, const DerivKey& right, const RadialFunction& coeff);

  const std::map<Key, RadialFunction>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::set<DerivKey> left_keys() const;
  std::set<DerivKey> right_keys() const;

  SymbolFunction apply(const SymbolFunction& f, const SymbolFunction& g) const;
  /// Both caches must hold every derivative the operator asks for.
  SymbolFunction apply(const DerivativeCache& f, const DerivativeCache& g) const;

  BidiffOperator mu_component(int k) const;
  int max_mu_degree() const;

  BidiffOperator& operator+=(const BidiffOperator& o);
  friend BidiffOperator operator*(BidiffOperator a, const GaussianRational& s);
  friend bool operator==(const BidiffOperator& a, const BidiffOperator& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BidiffOperator& a, const BidiffOperator& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::map<Key, RadialFunction> terms_;
};

/// f * g as a truncated series in hbar.
using StarSeries = HbarSeries<SymbolFunction>;

/// Composite multiplier m(hbar u, hbar u'; q + hbar(u+u')/2) exp{i hbar (u.v' - v.u')/2}
/// through hbar^order, with j(x) replaced by i.
HbarSeries<FourierPolynomial> multiplier_full_expansion(int order);

/// u -> -i d_p (left), v -> -i d_q (left), u' -> -i d_p (right), v' -> -i d_q (right).
std::vector<BidiffOperator> to_bidiff(const HbarSeries<FourierPolynomial>& expansion);

/// B_0 .. B_order, built once per process and shared.
const std::vector<BidiffOperator>& star_operators(int order);

StarSeries star(const SymbolFunction& f, const SymbolFunction& g, int order);
/// Product of two series of the same order; coefficients are combined through B_n.
StarSeries star(const StarSeries& f, const StarSeries& g);

/// Magnetic Poisson bracket d_q f . d_p g - d_p f . d_q g + beta_ij d_pi f d_pj g.
SymbolFunction poisson_bracket(const SymbolFunction& f, const SymbolFunction& g);

struct NamedSymbol {
  std::string name;
  SymbolFunction f;
};

struct AssociativityFailure {
  std::string f, g, h;
  int order = 0;
  /// mu degree -> number of nonzero terms of the residual at that degree
  std::map<int, std::size_t> terms_by_mu_degree;
  std::string residual;
};

struct AssociativityReport {
  int order = 0;
  std::size_t family_size = 0;
  std::size_t triples = 0;
  /// per hbar order: triples whose residual is not canonical zero
  std::vector<std::size_t> failing_triples;
  /// per hbar order, per mu degree: failing triples
  std::vector<std::map<int, std::size_t>> failing_by_mu_degree;
  std::vector<AssociativityFailure> failures;  // capped sample
  bool pass = true;
};

/// (f*g)*h - f*(g*h) through hbar^order for every ordered triple from the family.
AssociativityReport check_associativity(int order, const std::vector<NamedSymbol>& family,
                                        std::size_t max_failures_recorded = 16);

}  // namespace monopole
