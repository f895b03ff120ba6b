#include "monopole/radial_function.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace monopole {

namespace {

void accumulate(RadialNumerator& n, const RadialKey& k, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = n.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) n.erase(it);
  }
}

RadialNumerator multiply(const RadialNumerator& a, const RadialNumerator& b) {
  RadialNumerator out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      RadialKey k;
      for (int t = 0; t < 4; ++t) k[t] = ka[t] + kb[t];
      accumulate(out, k, ca * cb);
    }
  }
  return out;
}

// Multiplies by (q1^2 + q2^2 + q3^2)^power.
RadialNumerator times_radius_squared(RadialNumerator n, int power) {
  for (int step = 0; step < power; ++step) {
    RadialNumerator next;
    for (const auto& [k, c] : n) {
      for (int axis = 1; axis <= 3; ++axis) {
        RadialKey kk = k;
        kk[axis] += 2;
        accumulate(next, kk, c);
      }
    }
    n = std::move(next);
  }
  return n;
}

// Exact division by q1^2 + q2^2 + q3^2 using q1^2 as leading term; false if not divisible.
bool divide_by_radius_squared(RadialNumerator& n) {
  RadialNumerator rem = n;
  RadialNumerator quot;
  while (true) {
    auto best = rem.end();
    for (auto it = rem.begin(); it != rem.end(); ++it) {
      if (it->first[1] >= 2 && (best == rem.end() || it->first[1] > best->first[1])) best = it;
    }
    if (best == rem.end()) break;
    RadialKey k = best->first;
    const GaussianRational c = best->second;
    k[1] -= 2;
    accumulate(quot, k, c);
    for (int axis = 1; axis <= 3; ++axis) {
      RadialKey kk = k;
      kk[axis] += 2;
      accumulate(rem, kk, -c);
    }
  }
  if (!rem.empty()) return false;
  n = std::move(quot);
  return true;
}

std::string monomial_text(const RadialKey& k, int m) {
  std::ostringstream os;
  bool first = true;
  auto put = [&](const std::string& s) {
    if (!first) os << '*';
    os << s;
    first = false;
  };
  if (k[0] == 1) put("mu");
  if (k[0] > 1) put("mu^" + std::to_string(k[0]));
  for (int i = 1; i <= 3; ++i) {
    if (k[i] == 1) put("q" + std::to_string(i));
    if (k[i] > 1) put("q" + std::to_string(i) + "^" + std::to_string(k[i]));
  }
  if (m != 0) put("|q|^" + std::to_string(-m));
  return first ? std::string("1") : os.str();
}

}  // namespace

int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  // even permutations of (0,1,2)
  if ((i == 0 && j == 1) || (i == 1 && j == 2) || (i == 2 && j == 0)) return 1;
  return -1;
}

void RadialFunction::normalize(Branch& b) {
  if (b.num.empty()) {
    b.m %= 2;
    return;
  }
  while (b.m >= 2 && divide_by_radius_squared(b.num)) b.m -= 2;
}

void RadialFunction::add_into(Branch& dst, const Branch& src, const GaussianRational& scale) {
  if (src.num.empty()) return;
  if (dst.num.empty()) {
    dst.m = src.m;
    for (const auto& [k, c] : src.num) accumulate(dst.num, k, c * scale);
    normalize(dst);
    return;
  }
  const int target = std::max(dst.m, src.m);
  if (dst.m < target) {
    dst.num = times_radius_squared(std::move(dst.num), (target - dst.m) / 2);
    dst.m = target;
  }
  if (src.m < target) {
    for (const auto& [k, c] : times_radius_squared(src.num, (target - src.m) / 2)) {
      accumulate(dst.num, k, c * scale);
    }
  } else {
    for (const auto& [k, c] : src.num) accumulate(dst.num, k, c * scale);
  }
  normalize(dst);
}

RadialFunction RadialFunction::constant(const GaussianRational& c) {
  RadialFunction f;
  accumulate(f.even_.num, RadialKey{0, 0, 0, 0}, c);
  return f;
}

RadialFunction RadialFunction::mu() {
  return term({GaussianRational::integer(1), 1, {0, 0, 0}, 0});
}

RadialFunction RadialFunction::coordinate(int i) {
  std::array<int, 3> alpha{};
  alpha[i] = 1;
  return term({GaussianRational::integer(1), 0, alpha, 0});
}

RadialFunction RadialFunction::inverse_radius(int m) {
  return term({GaussianRational::integer(1), 0, {0, 0, 0}, m});
}

RadialFunction RadialFunction::term(const RadialTerm& t) {
  RadialFunction f;
  if (t.coeff.is_zero()) return f;
  const RadialKey key{t.mu_power, t.alpha[0], t.alpha[1], t.alpha[2]};
  Branch& b = (t.m % 2 == 0) ? f.even_ : f.odd_;
  if (t.m >= 0) {
    b.m = t.m;
    accumulate(b.num, key, t.coeff);
  } else {
    // |q|^k = (|q|^2)^((k+1)/2) / |q| for odd k
    const int k = -t.m;
    b.m = k % 2;
    b.num.emplace(key, t.coeff);
    b.num = times_radius_squared(std::move(b.num), (k + 1) / 2);
  }
  normalize(b);
  return f;
}

RadialFunction RadialFunction::from_terms(const std::vector<RadialTerm>& terms) {
  RadialFunction f;
  for (const auto& t : terms) f += term(t);
  return f;
}

bool RadialFunction::is_constant() const {
  if (!odd_.num.empty()) return false;
  if (even_.num.empty()) return true;
  return even_.m == 0 && even_.num.size() == 1 && even_.num.begin()->first == RadialKey{0, 0, 0, 0};
}

RadialFunction& RadialFunction::operator+=(const RadialFunction& o) {
  const GaussianRational one = GaussianRational::integer(1);
  add_into(even_, o.even_, one);
  add_into(odd_, o.odd_, one);
  return *this;
}

RadialFunction& RadialFunction::operator-=(const RadialFunction& o) {
  const GaussianRational minus_one = GaussianRational::integer(-1);
  add_into(even_, o.even_, minus_one);
  add_into(odd_, o.odd_, minus_one);
  return *this;
}

RadialFunction& RadialFunction::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    *this = RadialFunction();
    return *this;
  }
  for (auto& [k, v] : even_.num) v *= c;
  for (auto& [k, v] : odd_.num) v *= c;
  return *this;
}

RadialFunction RadialFunction::operator-() const {
  RadialFunction f = *this;
  f *= GaussianRational::integer(-1);
  return f;
}

RadialFunction operator*(const RadialFunction& a, const RadialFunction& b) {
  RadialFunction out;
  const GaussianRational one = GaussianRational::integer(1);
  const RadialFunction::Branch* as[2] = {&a.even_, &a.odd_};
  const RadialFunction::Branch* bs[2] = {&b.even_, &b.odd_};
  for (int pa = 0; pa < 2; ++pa) {
    for (int pb = 0; pb < 2; ++pb) {
      if (as[pa]->num.empty() || bs[pb]->num.empty()) continue;
      RadialFunction::Branch prod{as[pa]->m + bs[pb]->m, multiply(as[pa]->num, bs[pb]->num)};
      RadialFunction::normalize(prod);
      RadialFunction::add_into((pa + pb) % 2 == 0 ? out.even_ : out.odd_, prod, one);
    }
  }
  return out;
}

bool operator==(const RadialFunction& a, const RadialFunction& b) {
  return a.even_.m == b.even_.m && a.odd_.m == b.odd_.m && a.even_.num == b.even_.num &&
         a.odd_.num == b.odd_.num;
}

RadialFunction RadialFunction::diff(int i) const {
  const int axis = i + 1;
  RadialFunction out;
  const Branch* branches[2] = {&even_, &odd_};
  Branch* targets[2] = {&out.even_, &out.odd_};
  for (int parity = 0; parity < 2; ++parity) {
    const Branch& b = *branches[parity];
    if (b.num.empty()) continue;
    // d(N / r^m) = (r^2 dN - m q_i N) / r^(m+2)
    RadialNumerator dn;
    for (const auto& [k, c] : b.num) {
      if (k[axis] == 0) continue;
      RadialKey kk = k;
      kk[axis] -= 1;
      accumulate(dn, kk, c * GaussianRational::integer(k[axis]));
    }
    Branch res;
    if (b.m == 0) {
      res = Branch{0, std::move(dn)};
    } else {
      res.m = b.m + 2;
      res.num = times_radius_squared(std::move(dn), 1);
      const GaussianRational factor = GaussianRational::integer(-b.m);
      for (const auto& [k, c] : b.num) {
        RadialKey kk = k;
        kk[axis] += 1;
        accumulate(res.num, kk, c * factor);
      }
    }
    normalize(res);
    *targets[parity] = std::move(res);
  }
  return out;
}

int RadialFunction::max_mu_degree() const {
  int d = -1;
  for (const auto& [k, c] : even_.num) d = std::max(d, k[0]);
  for (const auto& [k, c] : odd_.num) d = std::max(d, k[0]);
  return d;
}

RadialFunction RadialFunction::mu_component(int k) const {
  RadialFunction out;
  const Branch* branches[2] = {&even_, &odd_};
  Branch* targets[2] = {&out.even_, &out.odd_};
  for (int parity = 0; parity < 2; ++parity) {
    Branch res{branches[parity]->m, {}};
    for (const auto& [key, c] : branches[parity]->num) {
      if (key[0] != k) continue;
      RadialKey kk = key;
      kk[0] = 0;
      res.num.emplace(kk, c);
    }
    normalize(res);
    *targets[parity] = std::move(res);
  }
  return out;
}

RadialFunction RadialFunction::bind_mu(const GaussianRational& value) const {
  RadialFunction out;
  const int top = max_mu_degree();
  GaussianRational power = GaussianRational::integer(1);
  for (int k = 0; k <= top; ++k) {
    out += mu_component(k) * power;
    power *= value;
  }
  return out;
}

std::complex<double> RadialFunction::evaluate(const Vec3& q, double mu) const {
  const double r = q.norm();
  std::complex<double> total = 0.0;
  for (const Branch* b : {&even_, &odd_}) {
    std::complex<double> sum = 0.0;
    for (const auto& [k, c] : b->num) {
      const double mono = std::pow(mu, k[0]) * std::pow(q.x, k[1]) * std::pow(q.y, k[2]) *
                          std::pow(q.z, k[3]);
      sum += c.to_complex() * mono;
    }
    total += sum / std::pow(r, b->m);
  }
  return total;
}

std::vector<RadialTerm> RadialFunction::terms() const {
  std::vector<RadialTerm> out;
  for (const Branch* b : {&even_, &odd_}) {
    for (const auto& [k, c] : b->num) {
      out.push_back({c, k[0], {k[1], k[2], k[3]}, b->m});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const RadialTerm& a, const RadialTerm& b) {
    if (a.mu_power != b.mu_power) return a.mu_power < b.mu_power;
    if (a.m != b.m) return a.m < b.m;
    return a.alpha < b.alpha;
  });
  return out;
}

std::string RadialFunction::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms()) {
    const std::string mono = monomial_text({t.mu_power, t.alpha[0], t.alpha[1], t.alpha[2]}, t.m);
    std::string c = t.coeff.to_string();
    if (!first) {
      if (c.front() == '-') {
        os << " - ";
        c.erase(0, 1);
      } else {
        os << " + ";
      }
    }
    first = false;
    os << c;
    if (mono != "1") os << '*' << mono;
  }
  return os.str();
}

RadialFunction beta(int i, int j) {
  RadialFunction out;
  for (int k = 0; k < 3; ++k) {
    const int e = levi_civita(i, j, k);
    if (e == 0) continue;
    std::array<int, 3> alpha{};
    alpha[k] = 1;
    out += RadialFunction::term({GaussianRational::integer(e), 1, alpha, 3});
  }
  return out;
}

}  // namespace monopole
