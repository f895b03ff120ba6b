#include "monopole/star_product.hpp"

#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "monopole/parallel.hpp"
#include "monopole/taylor.hpp"
#include "monopole/zassenhaus.hpp"

namespace monopole {

namespace {

std::string deriv_text(const DerivKey& k) {
  static constexpr const char* names[] = {"dp1", "dp2", "dp3", "dq1", "dq2", "dq3"};
  std::string s;
  for (int a = 0; a < 6; ++a) {
    for (int t = 0; t < k[a]; ++t) {
      if (!s.empty()) s += " ";
      s += names[a];
    }
  }
  return s.empty() ? "1" : s;
}

std::set<DerivKey> union_keys(const std::set<DerivKey>& a, const std::set<DerivKey>& b) {
  std::set<DerivKey> out = a;
  out.insert(b.begin(), b.end());
  return out;
}

std::set<DerivKey> all_left_keys(const std::vector<BidiffOperator>& ops) {
  std::set<DerivKey> out;
  for (const auto& op : ops) {
    auto k = op.left_keys();
    out.insert(k.begin(), k.end());
  }
  return out;
}

std::set<DerivKey> all_right_keys(const std::vector<BidiffOperator>& ops) {
  std::set<DerivKey> out;
  for (const auto& op : ops) {
    auto k = op.right_keys();
    out.insert(k.begin(), k.end());
  }
  return out;
}

}  // namespace

DerivativeCache::DerivativeCache(SymbolFunction f, const std::set<DerivKey>& keys) {
  derivatives_.emplace(DerivKey{}, std::move(f));
  for (const auto& k : keys) get(k);
}

const SymbolFunction* DerivativeCache::find(const DerivKey& k) const {
  auto it = derivatives_.find(k);
  if (it == derivatives_.end()) throw std::logic_error("DerivativeCache: derivative not prepared");
  return it->second.is_zero() ? nullptr : &it->second;
}

const SymbolFunction& DerivativeCache::get(const DerivKey& k) {
  if (auto it = derivatives_.find(k); it != derivatives_.end()) return it->second;
  int axis = 0;
  while (k[axis] == 0) ++axis;
  DerivKey lower = k;
  lower[axis] -= 1;
  const SymbolFunction& base = get(lower);
  SymbolFunction d = base.is_zero() ? SymbolFunction() : symbol::diff(base, axis);
  return derivatives_.emplace(k, std::move(d)).first->second;
}

void BidiffOperator::add(const DerivKey& left, const DerivKey& right, const RadialFunction& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({left, right}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::set<DerivKey> BidiffOperator::left_keys() const {
  std::set<DerivKey> out;
  for (const auto& [k, c] : terms_) out.insert(k.first);
  return out;
}

std::set<DerivKey> BidiffOperator::right_keys() const {
  std::set<DerivKey> out;
  for (const auto& [k, c] : terms_) out.insert(k.second);
  return out;
}

SymbolFunction BidiffOperator::apply(const SymbolFunction& f, const SymbolFunction& g) const {
  const DerivativeCache fc(f, left_keys());
  const DerivativeCache gc(g, right_keys());
  return apply(fc, gc);
}

SymbolFunction BidiffOperator::apply(const DerivativeCache& f, const DerivativeCache& g) const {
  SymbolFunction out;
  for (const auto& [k, c] : terms_) {
    const SymbolFunction* df = f.find(k.first);
    if (df == nullptr) continue;
    const SymbolFunction* dg = g.find(k.second);
    if (dg == nullptr) continue;
    out += c * (*df * *dg);
  }
  return out;
}

BidiffOperator BidiffOperator::mu_component(int k) const {
  BidiffOperator out;
  for (const auto& [key, c] : terms_) out.add(key.first, key.second, c.mu_component(k));
  return out;
}

int BidiffOperator::max_mu_degree() const {
  int d = -1;
  for (const auto& [key, c] : terms_) d = std::max(d, c.max_mu_degree());
  return d;
}

BidiffOperator& BidiffOperator::operator+=(const BidiffOperator& o) {
  for (const auto& [key, c] : o.terms_) add(key.first, key.second, c);
  return *this;
}

BidiffOperator operator*(BidiffOperator a, const GaussianRational& s) {
  BidiffOperator out;
  for (const auto& [key, c] : a.terms_) out.add(key.first, key.second, c * s);
  return out;
}

std::string BidiffOperator::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << "\n";
    first = false;
    os << "(" << c.to_string() << ") [" << deriv_text(k.first) << " | " << deriv_text(k.second) << "]";
  }
  return os.str();
}

HbarSeries<FourierPolynomial> multiplier_full_expansion(int order) {
  if (order < 0) throw std::invalid_argument("multiplier_full_expansion: negative order");
  const FourierPolynomial one = FourierPolynomial::constant(1);
  if (order == 0) return HbarSeries<FourierPolynomial>(0, one);

  // step 1: Zassenhaus exponent, j(x) -> i
  const HbarSeries<FourierPolynomial> exponent = multiplier_exponent(order) * GaussianRational::i();
  HbarSeries<FourierPolynomial> multiplier = exp_series(exponent, one);

  // step 2: x -> q + hbar (u + u')/2, expanded about q
  multiplier = taylor_shift(multiplier, midpoint_shift());

  // symplectic phase exp{i hbar (u.v' - v.u')/2}
  FourierPolynomial symplectic;
  for (int i = 0; i < 3; ++i) {
    symplectic += FourierPolynomial::variable(fourier::u(i)) * FourierPolynomial::variable(fourier::v_right(i));
    symplectic -= FourierPolynomial::variable(fourier::v(i)) * FourierPolynomial::variable(fourier::u_right(i));
  }
  HbarSeries<FourierPolynomial> phase_exponent(order);
  phase_exponent[1] = symplectic * GaussianRational(0, mpq_class(1, 2));
  return multiplier * exp_series(phase_exponent, one);
}

std::vector<BidiffOperator> to_bidiff(const HbarSeries<FourierPolynomial>& expansion) {
  std::vector<BidiffOperator> ops(static_cast<std::size_t>(expansion.order() + 1));
  for (int n = 0; n <= expansion.order(); ++n) {
    for (const auto& [k, c] : expansion[n].terms()) {
      DerivKey left{};
      DerivKey right{};
      for (int i = 0; i < 3; ++i) {
        left[i] = k[fourier::u(i)];
        left[3 + i] = k[fourier::v(i)];
        right[i] = k[fourier::u_right(i)];
        right[3 + i] = k[fourier::v_right(i)];
      }
      const int total = std::accumulate(k.begin(), k.end(), 0);
      ops[static_cast<std::size_t>(n)].add(left, right, c * GaussianRational::minus_i_power(total));
    }
  }
  return ops;
}

const std::vector<BidiffOperator>& star_operators(int order) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const std::vector<BidiffOperator>>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(order); it != cache.end()) return *it->second;
  auto larger = cache.lower_bound(order);
  std::vector<BidiffOperator> ops;
  if (larger != cache.end()) {
    ops.assign(larger->second->begin(), larger->second->begin() + order + 1);
  } else {
    ops = to_bidiff(multiplier_full_expansion(order));
  }
  auto& slot = cache[order];
  slot = std::make_unique<const std::vector<BidiffOperator>>(std::move(ops));
  return *slot;
}

StarSeries star(const SymbolFunction& f, const SymbolFunction& g, int order) {
  const auto& ops = star_operators(order);
  const DerivativeCache fc(f, all_left_keys(ops));
  const DerivativeCache gc(g, all_right_keys(ops));
  StarSeries out(order);
  for (int n = 0; n <= order; ++n) out[n] = ops[static_cast<std::size_t>(n)].apply(fc, gc);
  return out;
}

StarSeries star(const StarSeries& f, const StarSeries& g) {
  const int order = f.order();
  if (g.order() != order) throw std::invalid_argument("star: series order mismatch");
  const auto& ops = star_operators(order);
  const auto left = all_left_keys(ops);
  const auto right = all_right_keys(ops);
  std::vector<DerivativeCache> fc;
  std::vector<DerivativeCache> gc;
  for (int n = 0; n <= order; ++n) {
    fc.emplace_back(f[n], left);
    gc.emplace_back(g[n], right);
  }
  StarSeries out(order);
  for (int a = 0; a <= order; ++a) {
    if (f[a].is_zero()) continue;
    for (int b = 0; a + b <= order; ++b) {
      if (g[b].is_zero()) continue;
      for (int c = 0; a + b + c <= order; ++c) {
        out[a + b + c] += ops[static_cast<std::size_t>(c)].apply(fc[a], gc[b]);
      }
    }
  }
  return out;
}

SymbolFunction poisson_bracket(const SymbolFunction& f, const SymbolFunction& g) {
  SymbolFunction out;
  for (int i = 0; i < 3; ++i) {
    out += f.diff_q(i) * g.diff_outer(i);
    out -= f.diff_outer(i) * g.diff_q(i);
  }
  for (int i = 0; i < 3; ++i) {
    const SymbolFunction dfi = f.diff_outer(i);
    if (dfi.is_zero()) continue;
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      out += beta(i, j) * (dfi * g.diff_outer(j));
    }
  }
  return out;
}

AssociativityReport check_associativity(int order, const std::vector<NamedSymbol>& family,
                                        std::size_t max_failures_recorded) {
  if (order < 0) throw std::invalid_argument("check_associativity: negative order");
  const auto& ops = star_operators(order);
  const auto keys = union_keys(all_left_keys(ops), all_right_keys(ops));
  const std::size_t n = family.size();

  std::vector<DerivativeCache> single(n);
  parallel_for(n, [&](std::size_t i) { single[i] = DerivativeCache(family[i].f, keys); });

  // pair products f_i * f_j and their derivative tables
  std::vector<std::vector<DerivativeCache>> pair(n * n);
  std::vector<StarSeries> pair_series(n * n);
  parallel_for(n * n, [&](std::size_t idx) {
    const std::size_t i = idx / n;
    const std::size_t j = idx % n;
    StarSeries s(order);
    for (int c = 0; c <= order; ++c) s[c] = ops[static_cast<std::size_t>(c)].apply(single[i], single[j]);
    std::vector<DerivativeCache> caches;
    for (int c = 0; c <= order; ++c) caches.emplace_back(s[c], keys);
    pair[idx] = std::move(caches);
    pair_series[idx] = std::move(s);
  });

  const std::size_t triples = n * n * n;
  std::vector<std::vector<SymbolFunction>> residuals(triples);
  parallel_for(triples, [&](std::size_t idx) {
    const std::size_t i = idx / (n * n);
    const std::size_t j = (idx / n) % n;
    const std::size_t k = idx % n;
    const auto& left_pair = pair[i * n + j];
    const auto& right_pair = pair[j * n + k];
    std::vector<SymbolFunction> res(static_cast<std::size_t>(order + 1));
    bool any = false;
    for (int total = 0; total <= order; ++total) {
      SymbolFunction r;
      for (int a = 0; a <= total; ++a) {
        const auto& op = ops[static_cast<std::size_t>(total - a)];
        if (!pair_series[i * n + j][a].is_zero()) r += op.apply(left_pair[a], single[k]);
        if (!pair_series[j * n + k][a].is_zero()) r -= op.apply(single[i], right_pair[a]);
      }
      any = any || !r.is_zero();
      res[static_cast<std::size_t>(total)] = std::move(r);
    }
    if (any) residuals[idx] = std::move(res);
  });

  AssociativityReport report;
  report.order = order;
  report.family_size = n;
  report.triples = triples;
  report.failing_triples.assign(static_cast<std::size_t>(order + 1), 0);
  report.failing_by_mu_degree.assign(static_cast<std::size_t>(order + 1), {});
  for (std::size_t idx = 0; idx < triples; ++idx) {
    if (residuals[idx].empty()) continue;
    for (int t = 0; t <= order; ++t) {
      const SymbolFunction& r = residuals[idx][static_cast<std::size_t>(t)];
      if (r.is_zero()) continue;
      report.pass = false;
      ++report.failing_triples[static_cast<std::size_t>(t)];
      AssociativityFailure failure;
      failure.f = family[idx / (n * n)].name;
      failure.g = family[(idx / n) % n].name;
      failure.h = family[idx % n].name;
      failure.order = t;
      for (int d = 0; d <= r.max_mu_degree(); ++d) {
        const SymbolFunction part = r.mu_component(d);
        if (part.is_zero()) continue;
        failure.terms_by_mu_degree[d] = part.size();
        ++report.failing_by_mu_degree[static_cast<std::size_t>(t)][d];
      }
      failure.residual = to_string(r);
      if (report.failures.size() < max_failures_recorded) report.failures.push_back(std::move(failure));
    }
  }
  return report;
}

}  // namespace monopole
