#include "monopole/outer_poly.hpp"

#include <sstream>

namespace monopole {

namespace {

template <class Poly>
std::string render(const Poly& f, const char* const* names) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : f.terms()) {
    if (!first) os << " + ";
    first = false;
    std::string mono;
    for (std::size_t j = 0; j < k.size(); ++j) {
      if (k[j] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[j];
      if (k[j] > 1) mono += "^" + std::to_string(k[j]);
    }
    os << "(" << c.to_string() << ")";
    if (!mono.empty()) os << "*" << mono;
  }
  return os.str();
}

constexpr const char* kSymbolNames[] = {"p1", "p2", "p3"};
constexpr const char* kFourierNames[] = {"u1", "u2", "u3", "v1", "v2", "v3",
                                         "u'1", "u'2", "u'3", "v'1", "v'2", "v'3"};

}  // namespace

std::string to_string(const SymbolFunction& f) { return render(f, kSymbolNames); }
std::string to_string(const FourierPolynomial& f) { return render(f, kFourierNames); }

}  // namespace monopole
