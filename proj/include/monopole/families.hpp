#pragma once

#include <string>
#include <vector>

#include "monopole/star_product.hpp"

namespace monopole {

/// Parses expressions such as "p1*q2 - 1/2*mu*q3*rinv^3" into a symbol function.
/// Atoms: integers, rationals a/b, i, mu, p1..p3, q1..q3, rinv (= |q|^-1); operators + - * ^ and parentheses.
SymbolFunction parse_symbol(const std::string& text);

/// {1, p_i, q^i, p_i p_j, p_i q^j, q^i q^j, |q|^-1, q^i |q|^-1}
std::vector<NamedSymbol> acceptance_family();
/// {p1, p2, p3, q1, q2, q3}
std::vector<NamedSymbol> coordinate_family();
/// a few rational constants
std::vector<NamedSymbol> constant_family();
/// monomials in (p, q) of total degree <= 2 times |q|^-1
std::vector<NamedSymbol> radial_family();

/// "acceptance", "coords", "constants", "radial", or a ';'-separated list of expressions.
std::vector<NamedSymbol> parse_family(const std::string& spec);

}  // namespace monopole
