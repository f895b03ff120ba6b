#include "monopole/zassenhaus.hpp"

#include <sstream>
#include <stdexcept>

#include "monopole/errors.hpp"
#include "monopole/taylor.hpp"

namespace monopole {

FreeAlgebraElement FreeAlgebraElement::one(int max_degree) {
  FreeAlgebraElement e(max_degree);
  e.add("", 1);
  return e;
}

FreeAlgebraElement FreeAlgebraElement::letter(char z, int max_degree) {
  if (z != 'X' && z != 'Y') throw std::invalid_argument("letter must be X or Y");
  FreeAlgebraElement e(max_degree);
  e.add(std::string(1, z), 1);
  return e;
}

void FreeAlgebraElement::add(const std::string& word, const mpq_class& c) {
  if (static_cast<int>(word.size()) > max_degree_ || sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(word, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

FreeAlgebraElement FreeAlgebraElement::homogeneous_part(int n) const {
  FreeAlgebraElement out(max_degree_);
  for (const auto& [w, c] : terms_)
    if (static_cast<int>(w.size()) == n) out.terms_.emplace(w, c);
  return out;
}

int FreeAlgebraElement::lowest_degree() const {
  int d = -1;
  for (const auto& [w, c] : terms_) {
    const int n = static_cast<int>(w.size());
    if (d < 0 || n < d) d = n;
  }
  return d;
}

bool FreeAlgebraElement::is_homogeneous(int n) const {
  for (const auto& [w, c] : terms_)
    if (static_cast<int>(w.size()) != n) return false;
  return true;
}

FreeAlgebraElement FreeAlgebraElement::exp() const {
  if (terms_.count("") != 0) throw std::invalid_argument("exp: constant term must vanish");
  FreeAlgebraElement result = one(max_degree_);
  FreeAlgebraElement power = one(max_degree_);
  for (int k = 1; k <= max_degree_; ++k) {
    power = power * *this * mpq_class(1, k);
    if (power.is_zero()) break;
    result += power;
  }
  return result;
}

FreeAlgebraElement& FreeAlgebraElement::operator+=(const FreeAlgebraElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

FreeAlgebraElement& FreeAlgebraElement::operator-=(const FreeAlgebraElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

FreeAlgebraElement operator*(const FreeAlgebraElement& a, const FreeAlgebraElement& b) {
  FreeAlgebraElement out(std::min(a.max_degree_, b.max_degree_));
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      if (static_cast<int>(wa.size() + wb.size()) > out.max_degree_) continue;
      out.add(wa + wb, ca * cb);
    }
  }
  return out;
}

FreeAlgebraElement operator*(FreeAlgebraElement a, const mpq_class& s) {
  if (sgn(s) == 0) {
    a.terms_.clear();
    return a;
  }
  for (auto& [w, c] : a.terms_) c *= s;
  return a;
}

std::string FreeAlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str() << "*" << (w.empty() ? "1" : w);
  }
  return os.str();
}

FreeAlgebraElement commutator(const FreeAlgebraElement& a, const FreeAlgebraElement& b) {
  return a * b - b * a;
}

FreeAlgebraElement nested_commutator(const std::string& word, int max_degree) {
  if (word.empty()) throw std::invalid_argument("nested_commutator: empty word");
  FreeAlgebraElement acc = FreeAlgebraElement::letter(word.back(), max_degree);
  for (auto it = word.rbegin() + 1; it != word.rend(); ++it) {
    acc = commutator(FreeAlgebraElement::letter(*it, max_degree), acc);
  }
  return acc;
}

FreeAlgebraElement NestedCommutatorCombo::expand(int max_degree) const {
  FreeAlgebraElement out(max_degree);
  for (const auto& t : terms) out += nested_commutator(t.word, max_degree) * t.coeff;
  return out;
}

std::string NestedCommutatorCombo::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    if (!first) os << (sgn(t.coeff) < 0 ? " - " : " + ");
    mpq_class shown = first ? t.coeff : mpq_class(abs(t.coeff));
    first = false;
    os << shown.get_str() << " ";
    std::string bracket(1, t.word.back());
    for (auto it = t.word.rbegin() + 1; it != t.word.rend(); ++it) {
      bracket = std::string("[") + *it + "," + bracket + "]";
    }
    os << bracket;
  }
  return os.str();
}

std::vector<FreeAlgebraElement> zassenhaus_terms(int max_degree) {
  if (max_degree < 2) throw std::invalid_argument("zassenhaus_terms: degree must be >= 2");
  const auto x = FreeAlgebraElement::letter('X', max_degree);
  const auto y = FreeAlgebraElement::letter('Y', max_degree);
  // R = e^{-Y} e^{-X} e^{X+Y} = e^{C_2} e^{C_3} ...; peel the factors off from the left.
  FreeAlgebraElement rest = (-y).exp() * (-x).exp() * (x + y).exp();
  std::vector<FreeAlgebraElement> out;
  for (int n = 2; n <= max_degree; ++n) {
    const FreeAlgebraElement unit = FreeAlgebraElement::one(max_degree);
    const int low = (rest - unit).lowest_degree();
    if (low >= 0 && low < n) throw std::logic_error("zassenhaus_terms: extraction out of order");
    FreeAlgebraElement c = rest.homogeneous_part(n);
    rest = (-c).exp() * rest;
    out.push_back(std::move(c));
  }
  return out;
}

NestedCommutatorCombo dynkin_project(const FreeAlgebraElement& e, int n) {
  if (n < 1 || !e.is_homogeneous(n)) {
    throw std::invalid_argument("dynkin_project: element is not homogeneous of degree " +
                                std::to_string(n));
  }
  // word -> (1/n) [word]; brackets ending in a repeated letter vanish and [.., [Y, X]] = -[.., [X, Y]].
  std::map<std::string, mpq_class> combined;
  for (const auto& [w, c] : e.terms()) {
    std::string word = w;
    mpq_class coeff = c / n;
    if (n >= 2) {
      const char a = word[word.size() - 2];
      const char b = word.back();
      if (a == b) continue;
      if (a == 'Y') {
        std::swap(word[word.size() - 2], word.back());
        coeff = -coeff;
      }
    }
    combined[word] += coeff;
  }
  NestedCommutatorCombo combo;
  for (auto& [w, c] : combined)
    if (sgn(c) != 0) combo.terms.push_back({c, w});
  if (!(combo.expand(e.max_degree()) == e)) {
    throw NotLieElementError("dynkin_project: element is not a Lie polynomial");
  }
  return combo;
}

MonopoleLieElement MonopoleLieElement::x(int order) {
  return {1, 0, HbarSeries<FourierPolynomial>(order)};
}

MonopoleLieElement MonopoleLieElement::y(int order) {
  return {0, 1, HbarSeries<FourierPolynomial>(order)};
}

MonopoleLieElement MonopoleLieElement::function(const HbarSeries<FourierPolynomial>& f) {
  return {0, 0, f};
}

MonopoleLieElement operator+(const MonopoleLieElement& a, const MonopoleLieElement& b) {
  return {a.a + b.a, a.b + b.b, a.f + b.f};
}

MonopoleLieElement operator*(const MonopoleLieElement& a, const mpq_class& s) {
  return {a.a * s, a.b * s, a.f * GaussianRational(s)};
}

FourierPolynomial u_beta_u_right() {
  FourierPolynomial out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      FourierPolynomial::Key k{};
      k[fourier::u(i)] = 1;
      k[fourier::u_right(j)] = 1;
      out.add(k, beta(i, j));
    }
  }
  return out;
}

namespace {

FourierVector variables(std::size_t (*index)(int)) {
  FourierVector d;
  for (int i = 0; i < 3; ++i) d[i] = FourierPolynomial::variable(index(i));
  return d;
}

// hbar (d . grad) f
HbarSeries<FourierPolynomial> transport(const HbarSeries<FourierPolynomial>& f, const FourierVector& d) {
  HbarSeries<FourierPolynomial> out(f.order());
  for (int n = 0; n + 1 <= f.order(); ++n) out[n + 1] = directional_derivative(f[n], d);
  return out;
}

std::size_t u_index(int i) { return fourier::u(i); }
std::size_t u_right_index(int i) { return fourier::u_right(i); }

}  // namespace

MonopoleLieElement monopole_bracket(const MonopoleLieElement& a, const MonopoleLieElement& b) {
  const int order = a.f.order();
  if (b.f.order() != order) throw std::invalid_argument("monopole_bracket: order mismatch");
  static const FourierVector u = variables(u_index);
  static const FourierVector u_right = variables(u_right_index);

  HbarSeries<FourierPolynomial> f(order);
  const mpq_class xy = a.a * b.b - a.b * b.a;
  if (sgn(xy) != 0 && order >= 1) f[1] += u_beta_u_right() * GaussianRational(-xy);
  if (sgn(a.a) != 0) f += transport(b.f, u) * GaussianRational(a.a);
  if (sgn(a.b) != 0) f += transport(b.f, u_right) * GaussianRational(a.b);
  if (sgn(b.a) != 0) f -= transport(a.f, u) * GaussianRational(b.a);
  if (sgn(b.b) != 0) f -= transport(a.f, u_right) * GaussianRational(b.b);
  return {0, 0, f};
}

MonopoleLieElement specialize(const NestedCommutatorCombo& combo, int order) {
  MonopoleLieElement total{0, 0, HbarSeries<FourierPolynomial>(order)};
  auto generator = [order](char z) {
    return z == 'X' ? MonopoleLieElement::x(order) : MonopoleLieElement::y(order);
  };
  for (const auto& t : combo.terms) {
    MonopoleLieElement acc = generator(t.word.back());
    for (auto it = t.word.rbegin() + 1; it != t.word.rend(); ++it) {
      acc = monopole_bracket(generator(*it), acc);
    }
    total = total + acc * t.coeff;
  }
  return total;
}

std::vector<HbarSeries<FourierPolynomial>> specialized_zassenhaus_terms(int order) {
  std::vector<HbarSeries<FourierPolynomial>> out;
  const auto terms = zassenhaus_terms(order + 1);
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const int n = static_cast<int>(k) + 2;
    const MonopoleLieElement c = specialize(dynkin_project(terms[k], n), order);
    if (sgn(c.a) != 0 || sgn(c.b) != 0) {
      throw std::logic_error("specialized Zassenhaus term has a linear part");
    }
    out.push_back(c.f);
  }
  return out;
}

HbarSeries<FourierPolynomial> multiplier_exponent(int order) {
  if (order < 1) throw std::invalid_argument("multiplier_exponent: order must be >= 1");
  HbarSeries<FourierPolynomial> s(order);
  for (const auto& c : specialized_zassenhaus_terms(order)) s -= c;
  return s;
}

}  // namespace monopole
