#include "monopole/taylor.hpp"

namespace monopole {

FourierVector midpoint_shift() {
  FourierVector d;
  const GaussianRational half(1, 2);
  for (int i = 0; i < 3; ++i) {
    d[i] = (FourierPolynomial::variable(fourier::u(i)) +
            FourierPolynomial::variable(fourier::u_right(i))) *
           half;
  }
  return d;
}

FourierPolynomial directional_derivative(const FourierPolynomial& f, const FourierVector& d) {
  FourierPolynomial out;
  for (int i = 0; i < 3; ++i) {
    if (d[i].is_zero()) continue;
    FourierPolynomial partial = f.diff_q(i);
    if (!partial.is_zero()) out += d[i] * partial;
  }
  return out;
}

HbarSeries<FourierPolynomial> taylor_shift(const RadialFunction& f, int order) {
  HbarSeries<FourierPolynomial> s(order, FourierPolynomial(f));
  return taylor_shift(s, midpoint_shift());
}

HbarSeries<FourierPolynomial> taylor_shift(const HbarSeries<FourierPolynomial>& s,
                                           const FourierVector& d) {
  HbarSeries<FourierPolynomial> out(s.order());
  for (int n = 0; n <= s.order(); ++n) {
    FourierPolynomial term = s[n];
    for (int k = 0; n + k <= s.order() && !term.is_zero(); ++k) {
      out[n + k] += term;
      term = directional_derivative(term, d) * GaussianRational(1, k + 1);
    }
  }
  return out;
}

}  // namespace monopole
