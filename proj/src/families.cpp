#include "monopole/families.hpp"

#include <cctype>

#include "monopole/errors.hpp"

namespace monopole {

namespace {

class SymbolParser {
 public:
  explicit SymbolParser(const std::string& text) : text_(text) {}

  SymbolFunction parse() {
    SymbolFunction f = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigError("symbol expression '" + text_ + "': " + what + " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  long integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stol(text_.substr(start, pos_ - start));
  }

  SymbolFunction expression() {
    SymbolFunction f;
    bool negate = accept('-');
    if (!negate) accept('+');
    while (true) {
      SymbolFunction t = term();
      if (negate) f -= t;
      else f += t;
      if (accept('+')) negate = false;
      else if (accept('-')) negate = true;
      else break;
    }
    return f;
  }

  SymbolFunction term() {
    SymbolFunction f = factor();
    while (accept('*')) f = f * factor();
    return f;
  }

  SymbolFunction factor() {
    SymbolFunction base = atom();
    if (accept('^')) {
      const long e = integer();
      SymbolFunction out = SymbolFunction::constant(1);
      for (long k = 0; k < e; ++k) out = out * base;
      return out;
    }
    return base;
  }

  SymbolFunction atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end");
    if (accept('(')) {
      SymbolFunction f = expression();
      if (!accept(')')) fail("expected ')'");
      return f;
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const long num = integer();
      long den = 1;
      if (accept('/')) den = integer();
      if (den == 0) fail("zero denominator");
      return SymbolFunction(RadialFunction::constant(GaussianRational(num, den)));
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string word = text_.substr(start, pos_ - start);
    if (word == "i") return SymbolFunction(RadialFunction::constant(GaussianRational::i()));
    if (word == "mu") return SymbolFunction(RadialFunction::mu());
    if (word == "rinv") return symbol::inverse_radius(1);
    if (word.size() == 2 && (word[0] == 'p' || word[0] == 'q') && word[1] >= '1' && word[1] <= '3') {
      const int idx = word[1] - '1';
      return word[0] == 'p' ? symbol::p(idx) : symbol::q(idx);
    }
    pos_ = start;
    fail("unknown atom '" + word + "'");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

NamedSymbol named(const std::string& text) { return {text, parse_symbol(text)}; }

}  // namespace

SymbolFunction parse_symbol(const std::string& text) { return SymbolParser(text).parse(); }

std::vector<NamedSymbol> acceptance_family() {
  std::vector<NamedSymbol> out;
  out.push_back(named("1"));
  for (int i = 1; i <= 3; ++i) out.push_back(named("p" + std::to_string(i)));
  for (int i = 1; i <= 3; ++i) out.push_back(named("q" + std::to_string(i)));
  for (int i = 1; i <= 3; ++i)
    for (int j = i; j <= 3; ++j) out.push_back(named("p" + std::to_string(i) + "*p" + std::to_string(j)));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) out.push_back(named("p" + std::to_string(i) + "*q" + std::to_string(j)));
  for (int i = 1; i <= 3; ++i)
    for (int j = i; j <= 3; ++j) out.push_back(named("q" + std::to_string(i) + "*q" + std::to_string(j)));
  out.push_back(named("rinv"));
  for (int i = 1; i <= 3; ++i) out.push_back(named("q" + std::to_string(i) + "*rinv"));
  return out;
}

std::vector<NamedSymbol> coordinate_family() {
  std::vector<NamedSymbol> out;
  for (int i = 1; i <= 3; ++i) out.push_back(named("p" + std::to_string(i)));
  for (int i = 1; i <= 3; ++i) out.push_back(named("q" + std::to_string(i)));
  return out;
}

std::vector<NamedSymbol> constant_family() { return {named("1"), named("-3"), named("2/7")}; }

std::vector<NamedSymbol> radial_family() {
  const std::vector<std::string> vars = {"p1", "p2", "p3", "q1", "q2", "q3"};
  std::vector<NamedSymbol> out;
  out.push_back(named("rinv"));
  for (const auto& a : vars) out.push_back(named(a + "*rinv"));
  for (std::size_t a = 0; a < vars.size(); ++a)
    for (std::size_t b = a; b < vars.size(); ++b) out.push_back(named(vars[a] + "*" + vars[b] + "*rinv"));
  return out;
}

std::vector<NamedSymbol> parse_family(const std::string& spec) {
  if (spec == "acceptance") return acceptance_family();
  if (spec == "coords") return coordinate_family();
  if (spec == "constants") return constant_family();
  if (spec == "radial") return radial_family();
  std::vector<NamedSymbol> out;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const std::size_t end = spec.find(';', start);
    const std::string item = spec.substr(start, end == std::string::npos ? std::string::npos : end - start);
    if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(named(item));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  if (out.empty()) throw ConfigError("empty family spec");
  return out;
}

}  // namespace monopole
