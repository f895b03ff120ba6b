#include "monopole/gaussian_rational.hpp"

#include "monopole/errors.hpp"

namespace monopole {

namespace {

mpq_class parse_rational(const std::string& s) {
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) {
    throw ConfigError("not a rational number: '" + s + "'");
  }
  if (q.get_den() == 0) {
    throw ConfigError("zero denominator: '" + s + "'");
  }
  q.canonicalize();
  return q;
}

std::string q_text(const mpq_class& q) { return q.get_str(); }

}  // namespace

GaussianRational GaussianRational::minus_i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return integer(1);
    case 1: return GaussianRational(0, mpq_class(-1));
    case 2: return integer(-1);
    default: return i();
  }
}

GaussianRational GaussianRational::parse(const std::string& re, const std::string& im) {
  return GaussianRational(parse_rational(re), parse_rational(im));
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const mpq_class den = o.re_ * o.re_ + o.im_ * o.im_;
  if (sgn(den) == 0) {
    throw std::domain_error("GaussianRational: division by zero");
  }
  *this *= o.conj();
  re_ /= den;
  im_ /= den;
  return *this;
}

std::string rational_to_string(const mpq_class& q) {
  if (q.get_den() == 1) {
    return q.get_num().get_str() + "/1";
  }
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return q_text(re_);
  if (sgn(re_) == 0) return q_text(im_) + "*i";
  return "(" + q_text(re_) + (sgn(im_) > 0 ? "+" : "") + q_text(im_) + "*i)";
}

}  // namespace monopole
