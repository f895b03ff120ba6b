#pragma once

#include <json.hpp>

#include <vector>

#include "monopole/hbar_series.hpp"
#include "monopole/outer_poly.hpp"
#include "monopole/star_product.hpp"
#include "monopole/zassenhaus.hpp"

/// Canonical JSON forms. Rationals are "num/den" strings; multi-indices are integer arrays.
///
///   GaussianRational   {"re": "1/2", "im": "0/1"}
///   RadialFunction     [{"re", "im", "mu": s, "q": [a1, a2, a3], "m": m}, ...]
///   SymbolFunction     [{"p": [a1, a2, a3], "coeff": RadialFunction}, ...]
///   FourierPolynomial  [{"u": [..], "v": [..], "u_right": [..], "v_right": [..], "coeff": RadialFunction}, ...]
///   BidiffOperator     [{"left": {"p": [..], "q": [..]}, "right": {"p": [..], "q": [..]}, "coeff": RadialFunction}, ...]
///   HbarSeries<T>      {"order": N, "coefficients": [T, ...]}
namespace monopole::io {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

json to_json(const GaussianRational& c);
GaussianRational gaussian_from_json(const json& j);

json to_json(const RadialFunction& f);
RadialFunction radial_from_json(const json& j);

json to_json(const SymbolFunction& f);
SymbolFunction symbol_from_json(const json& j);

json to_json(const FourierPolynomial& f);
FourierPolynomial fourier_from_json(const json& j);

json to_json(const BidiffOperator& op);
BidiffOperator bidiff_from_json(const json& j);

json to_json(const FreeAlgebraElement& e);
json to_json(const NestedCommutatorCombo& combo);

template <class T>
json to_json(const HbarSeries<T>& s) {
  json coeffs = json::array();
  for (int n = 0; n <= s.order(); ++n) coeffs.push_back(to_json(s[n]));
  return json{{"order", s.order()}, {"coefficients", coeffs}};
}

inline HbarSeries<SymbolFunction> symbol_series_from_json(const json& j) {
  HbarSeries<SymbolFunction> s(j.at("order").get<int>());
  for (int n = 0; n <= s.order(); ++n) s[n] = symbol_from_json(j.at("coefficients").at(static_cast<std::size_t>(n)));
  return s;
}

}  // namespace monopole::io
