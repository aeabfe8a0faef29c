#include "eigpert/gaussian_rational.hpp"

#include <cctype>

#include "eigpert/errors.hpp"

namespace eigpert {

bool GaussianRational::is_gaussian_integer() const {
  return re_.get_den() == 1 && im_.get_den() == 1;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
  if (sgn(im_) == 0 && sgn(rhs.im_) == 0) {
    re_ *= rhs.re_;
    return *this;
  }
  Rational re = re_ * rhs.re_ - im_ * rhs.im_;
  Rational im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
  if (rhs.is_zero()) throw InputError("division of a Gaussian rational by zero");
  if (sgn(rhs.im_) == 0) {
    re_ /= rhs.re_;
    im_ /= rhs.re_;
    return *this;
  }
  // (a+bi)/(c+di) = (a+bi)(c-di)/(c^2+d^2)
  Rational n = rhs.norm();
  Rational re = (re_ * rhs.re_ + im_ * rhs.im_) / n;
  Rational im = (im_ * rhs.re_ - re_ * rhs.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
  int c = cmp(a.re_, b.re_);
  if (c == 0) c = cmp(a.im_, b.im_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string GaussianRational::str() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string out;
  if (sgn(re_) != 0) out = re_.get_str();
  if (im_ == 1) {
    out += sgn(re_) != 0 ? "+i" : "i";
  } else if (im_ == -1) {
    out += "-i";
  } else {
    if (sgn(im_) > 0 && sgn(re_) != 0) out += "+";
    out += im_.get_str() + "i";
  }
  return out;
}

std::string GaussianRational::token() const {
  if (sgn(im_) == 0) return re_.get_str();
  return re_.get_str() + "," + im_.get_str();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

bool parse_rational(std::string_view text, Rational& out, bool& zero_denominator) {
  zero_denominator = false;
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
    if (!digits(den)) return false;
  }
  if (!digits(num)) return false;

  mpz_class n(std::string(num), 10);
  mpz_class d = 1;
  if (!den.empty()) {
    d = mpz_class(std::string(den), 10);
    if (d == 0) {
      zero_denominator = true;
      return false;
    }
  }
  if (negative) n = -n;
  out = Rational(n, d);
  out.canonicalize();
  return true;
}

mpz_class common_denominator(const GaussianRational& z) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), z.re().get_den_mpz_t(), z.im().get_den_mpz_t());
  return l;
}

}  // namespace eigpert
