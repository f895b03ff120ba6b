#pragma once

#include <array>

#include "monopole/hbar_series.hpp"
#include "monopole/outer_poly.hpp"

namespace monopole {

using FourierVector = std::array<FourierPolynomial, 3>;

/// (u + u') / 2, the displacement of the multiplier's base point per unit hbar.
FourierVector midpoint_shift();

/// (d . grad_q) F, with d constant in q.
FourierPolynomial directional_derivative(const FourierPolynomial& f, const FourierVector& d);

/// f(q + hbar d) = sum_k hbar^k (d . grad)^k f / k!, through hbar^order; d = (u + u')/2.
HbarSeries<FourierPolynomial> taylor_shift(const RadialFunction& f, int order);

/// Applies the same shift to every coefficient of a series and re-collects powers of hbar.
HbarSeries<FourierPolynomial> taylor_shift(const HbarSeries<FourierPolynomial>& s,
                                           const FourierVector& d);

}  // namespace monopole
