#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "monopole/hbar_series.hpp"
#include "monopole/outer_poly.hpp"

namespace monopole {

/// Element of the free associative algebra on {X, Y} over Q, truncated above max_degree.
/// Words are strings over the letters 'X' and 'Y'; the empty word is the unit.
class FreeAlgebraElement {
 public:
  explicit FreeAlgebraElement(int max_degree) : max_degree_(max_degree) {}

  static FreeAlgebraElement one(int max_degree);
  static FreeAlgebraElement letter(char z, int max_degree);

  int max_degree() const { return max_degree_; }
  const std::map<std::string, mpq_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const std::string& word, const mpq_class& c);

  FreeAlgebraElement homogeneous_part(int n) const;
  /// Lowest degree carrying a nonzero coefficient, -1 for zero.
  int lowest_degree() const;
  bool is_homogeneous(int n) const;

  /// Truncated exponential; the constant term must vanish.
  FreeAlgebraElement exp() const;

  FreeAlgebraElement& operator+=(const FreeAlgebraElement& o);
  FreeAlgebraElement& operator-=(const FreeAlgebraElement& o);
  friend FreeAlgebraElement operator+(FreeAlgebraElement a, const FreeAlgebraElement& b) { return a += b; }
  friend FreeAlgebraElement operator-(FreeAlgebraElement a, const FreeAlgebraElement& b) { return a -= b; }
  friend FreeAlgebraElement operator*(const FreeAlgebraElement& a, const FreeAlgebraElement& b);
  friend FreeAlgebraElement operator*(FreeAlgebraElement a, const mpq_class& s);
  FreeAlgebraElement operator-() const { return *this * mpq_class(-1); }

  friend bool operator==(const FreeAlgebraElement& a, const FreeAlgebraElement& b) {
    return a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  int max_degree_;
  std::map<std::string, mpq_class> terms_;
};

FreeAlgebraElement commutator(const FreeAlgebraElement& a, const FreeAlgebraElement& b);

/// [z1, [z2, ... [z_{n-1}, z_n] ...]] for word = z1 ... z_n.
FreeAlgebraElement nested_commutator(const std::string& word, int max_degree);

struct NestedCommutator {
  mpq_class coeff;
  std::string word;
};

/// Linear combination of right-nested commutators.
struct NestedCommutatorCombo {
  std::vector<NestedCommutator> terms;

  FreeAlgebraElement expand(int max_degree) const;
  /// e.g. "-1/2 [X,Y]".
  std::string to_string() const;
};

/// Zassenhaus terms C_2 .. C_N with e^{X+Y} = e^X e^Y e^{C_2} ... e^{C_N} mod degree N+1.
/// Element k of the result is C_{k+2}.
std::vector<FreeAlgebraElement> zassenhaus_terms(int max_degree);

/// Dynkin projection of a homogeneous Lie element of degree n onto right-nested commutators.
/// Throws NotLieElementError when the expansion does not reproduce e.
NestedCommutatorCombo dynkin_project(const FreeAlgebraElement& e, int n);

/// Element of the Lie algebra generated by X = J u.P and Y = J u'.P: a X + b Y + J f(q; u, u').
/// The J factor of the function sector is implicit.
struct MonopoleLieElement {
  mpq_class a;
  mpq_class b;
  HbarSeries<FourierPolynomial> f;

  static MonopoleLieElement x(int order);
  static MonopoleLieElement y(int order);
  static MonopoleLieElement function(const HbarSeries<FourierPolynomial>& f);
};

MonopoleLieElement operator+(const MonopoleLieElement& a, const MonopoleLieElement& b);
MonopoleLieElement operator*(const MonopoleLieElement& a, const mpq_class& s);

/// sum_ij u_i beta_ij(q) u'_j
FourierPolynomial u_beta_u_right();

/// Commutator in the monopole algebra:
///   [X, Y] = -hbar u.beta u',  [X, f] = hbar (u.grad) f,  [Y, f] = hbar (u'.grad) f,  [f, g] = 0.
MonopoleLieElement monopole_bracket(const MonopoleLieElement& a, const MonopoleLieElement& b);

/// Evaluates nested commutators of X and Y in the monopole algebra (series order `order`).
MonopoleLieElement specialize(const NestedCommutatorCombo& combo, int order);

/// Function sectors of C_2(X, Y) .. C_{order+1}(X, Y), each as an hbar series of order `order`.
std::vector<HbarSeries<FourierPolynomial>> specialized_zassenhaus_terms(int order);

/// s(u, u', q) with m(hbar u, hbar u'; x) = exp(j(x) s), s = -sum_n C_n(X, Y), through hbar^order.
HbarSeries<FourierPolynomial> multiplier_exponent(int order);

}  // namespace monopole
