#include "monopole/io.hpp"

#include "monopole/errors.hpp"

namespace monopole::io {

namespace {

template <std::size_t N>
std::array<int, N> index_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.size() != N) {
    throw ConfigError(std::string("expected ") + std::to_string(N) + " exponents in '" + what + "'");
  }
  std::array<int, N> out{};
  for (std::size_t t = 0; t < N; ++t) {
    out[t] = j[t].get<int>();
    if (out[t] < 0) throw ConfigError(std::string("negative exponent in '") + what + "'");
  }
  return out;
}

json index_json(const int* first, std::size_t n) { return json(std::vector<int>(first, first + n)); }

json deriv_json(const DerivKey& k) {
  return json{{"p", index_json(k.data(), 3)}, {"q", index_json(k.data() + 3, 3)}};
}

DerivKey deriv_from_json(const json& j) {
  const auto p = index_from_json<3>(j.at("p"), "p");
  const auto q = index_from_json<3>(j.at("q"), "q");
  return {p[0], p[1], p[2], q[0], q[1], q[2]};
}

void require_array(const json& j, const char* what) {
  if (!j.is_array()) throw ConfigError(std::string(what) + ": expected a JSON array of terms");
}

}  // namespace

json to_json(const GaussianRational& c) {
  return json{{"re", rational_to_string(c.re())}, {"im", rational_to_string(c.im())}};
}

GaussianRational gaussian_from_json(const json& j) {
  return GaussianRational::parse(j.at("re").get<std::string>(), j.value("im", std::string("0")));
}

json to_json(const RadialFunction& f) {
  json out = json::array();
  for (const RadialTerm& t : f.terms()) {
    out.push_back(json{{"re", rational_to_string(t.coeff.re())},
                       {"im", rational_to_string(t.coeff.im())},
                       {"mu", t.mu_power},
                       {"q", index_json(t.alpha.data(), 3)},
                       {"m", t.m}});
  }
  return out;
}

RadialFunction radial_from_json(const json& j) {
  require_array(j, "RadialFunction");
  std::vector<RadialTerm> terms;
  for (const json& t : j) {
    RadialTerm term;
    term.coeff = gaussian_from_json(t);
    term.mu_power = t.value("mu", 0);
    if (term.mu_power < 0) throw ConfigError("negative mu power");
    term.alpha = index_from_json<3>(t.at("q"), "q");
    term.m = t.value("m", 0);
    terms.push_back(term);
  }
  return RadialFunction::from_terms(terms);
}

json to_json(const SymbolFunction& f) {
  json out = json::array();
  for (const auto& [k, c] : f.terms()) out.push_back(json{{"p", index_json(k.data(), 3)}, {"coeff", to_json(c)}});
  return out;
}

SymbolFunction symbol_from_json(const json& j) {
  require_array(j, "SymbolFunction");
  SymbolFunction f;
  for (const json& t : j) f.add(index_from_json<3>(t.at("p"), "p"), radial_from_json(t.at("coeff")));
  return f;
}

json to_json(const FourierPolynomial& f) {
  json out = json::array();
  for (const auto& [k, c] : f.terms()) {
    out.push_back(json{{"u", index_json(k.data(), 3)},
                       {"v", index_json(k.data() + 3, 3)},
                       {"u_right", index_json(k.data() + 6, 3)},
                       {"v_right", index_json(k.data() + 9, 3)},
                       {"coeff", to_json(c)}});
  }
  return out;
}

FourierPolynomial fourier_from_json(const json& j) {
  require_array(j, "FourierPolynomial");
  FourierPolynomial f;
  for (const json& t : j) {
    FourierPolynomial::Key k{};
    const char* names[] = {"u", "v", "u_right", "v_right"};
    for (std::size_t b = 0; b < 4; ++b) {
      const auto idx = index_from_json<3>(t.at(names[b]), names[b]);
      for (std::size_t i = 0; i < 3; ++i) k[3 * b + i] = idx[i];
    }
    f.add(k, radial_from_json(t.at("coeff")));
  }
  return f;
}

json to_json(const BidiffOperator& op) {
  json out = json::array();
  for (const auto& [key, c] : op.terms()) {
    out.push_back(json{{"left", deriv_json(key.first)}, {"right", deriv_json(key.second)}, {"coeff", to_json(c)}});
  }
  return out;
}

BidiffOperator bidiff_from_json(const json& j) {
  require_array(j, "BidiffOperator");
  BidiffOperator op;
  for (const json& t : j) op.add(deriv_from_json(t.at("left")), deriv_from_json(t.at("right")), radial_from_json(t.at("coeff")));
  return op;
}

json to_json(const FreeAlgebraElement& e) {
  json out = json::object();
  for (const auto& [word, c] : e.terms()) out[word.empty() ? "1" : word] = rational_to_string(c);
  return out;
}

json to_json(const NestedCommutatorCombo& combo) {
  json out = json::array();
  for (const NestedCommutator& t : combo.terms) {
    out.push_back(json{{"coeff", rational_to_string(t.coeff)}, {"word", t.word}});
  }
  return out;
}

}  // namespace monopole::io
