#include "eigpert/poly.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <sstream>

#include "eigpert/errors.hpp"

namespace eigpert {

Poly::Poly(std::initializer_list<GaussianRational> coeffs) : coeffs_(coeffs) { trim(); }

Poly::Poly(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(GaussianRational c) { return Poly(std::vector<GaussianRational>{std::move(c)}); }

Poly Poly::x() { return Poly{0, 1}; }

Poly Poly::linear(const GaussianRational& root) { return Poly{-root, 1}; }

Poly Poly::monomial(GaussianRational c, std::size_t k) {
  std::vector<GaussianRational> v(k + 1);
  v[k] = std::move(c);
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GaussianRational Poly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : GaussianRational{};
}

const GaussianRational& Poly::leading() const {
  if (is_zero()) throw InputError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Poly Poly::monic() const {
  if (is_zero() || leading().is_one()) return *this;
  GaussianRational inv = GaussianRational(1) / leading();
  Poly out = *this;
  for (auto& c : out.coeffs_) c *= inv;
  return out;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<GaussianRational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * GaussianRational(static_cast<long>(k));
  return Poly(std::move(d));
}

GaussianRational Poly::operator()(const GaussianRational& at) const {
  GaussianRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& k : coeffs_) k *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const GaussianRational& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string body;
    bool negative = false;
    if (c.is_real()) {
      negative = sgn(c.re()) < 0;
      GaussianRational mag = negative ? -c : c;
      if (k == 0 || !mag.is_one()) body = mag.str();
    } else if (sgn(c.re()) == 0) {
      negative = sgn(c.im()) < 0;
      body = (negative ? -c : c).str();
    } else {
      body = "(" + c.str() + ")";
    }
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    os << body;
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

Poly pow(const Poly& p, unsigned k) {
  Poly result = Poly::constant(1);
  Poly base = p;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

DivMod poly_divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw InputError("polynomial division by the zero polynomial");
  if (a.degree() < b.degree()) return {Poly{}, a};

  std::vector<GaussianRational> rem = a.coeffs();
  const auto& den = b.coeffs();
  const std::size_t db = den.size() - 1;
  const GaussianRational inv_lead = GaussianRational(1) / den.back();
  const bool monic = den.back().is_one();
  std::vector<GaussianRational> quot(rem.size() - db);

  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k].is_zero()) continue;
    GaussianRational q = monic ? rem[k] : rem[k] * inv_lead;
    const std::size_t shift = k - db;
    for (std::size_t j = 0; j < db; ++j) {
      if (!den[j].is_zero()) rem[shift + j] -= q * den[j];
    }
    rem[k] = GaussianRational{};
    quot[shift] = std::move(q);
  }
  rem.resize(db);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

bool divides(const Poly& b, const Poly& a) { return poly_divmod(a, b).remainder.is_zero(); }

Poly exact_quotient(const Poly& a, const Poly& b) {
  auto [q, r] = poly_divmod(a, b);
  if (!r.is_zero()) throw VerificationViolation("inexact polynomial division: " + a.str() + " / " + b.str());
  return q;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw InputError("gcd of two zero polynomials");
  Poly u = a.monic();
  Poly v = b.monic();
  while (!v.is_zero()) {
    Poly r = poly_divmod(u, v).remainder.monic();
    u = std::move(v);
    v = std::move(r);
  }
  return u;
}

Poly SquarefreeDecomposition::squarefree_part() const {
  Poly out = Poly::constant(1);
  for (const auto& part : parts) out *= part.factor;
  return out;
}

Poly SquarefreeDecomposition::expand() const {
  Poly out = Poly::constant(unit);
  for (const auto& part : parts) out *= pow(part.factor, part.multiplicity);
  return out;
}

SquarefreeDecomposition squarefree_decompose(const Poly& p) {
  if (p.is_zero()) throw InputError("squarefree decomposition of the zero polynomial");
  SquarefreeDecomposition out;
  out.unit = p.leading();
  Poly f = p.monic();
  if (f.degree() == 0) return out;

  // Yun: b_1 = f/gcd(f,f'), d_1 = f'/gcd(f,f') - b_1'; a_i = gcd(b_i, d_i).
  Poly df = f.derivative();
  Poly a0 = poly_gcd(f, df);
  Poly b = exact_quotient(f, a0);
  Poly c = exact_quotient(df, a0);
  Poly d = c - b.derivative();
  for (unsigned k = 1; b.degree() > 0; ++k) {
    Poly a = poly_gcd(b, d);
    if (a.degree() > 0) out.parts.push_back({a, k});
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = c - b.derivative();
  }
  return out;
}

std::size_t distinct_root_count(const Poly& p) {
  Poly f = p.monic();
  if (f.degree() <= 0) return 0;
  return static_cast<std::size_t>(exact_quotient(f, poly_gcd(f, f.derivative())).degree());
}

namespace {

using Complex = std::complex<long double>;

Complex to_complex(const GaussianRational& z) {
  return {static_cast<long double>(z.re().get_d()), static_cast<long double>(z.im().get_d())};
}

// Simultaneous (Aberth-Ehrlich) iteration for all roots of a squarefree
// polynomial. Only used to propose candidates.
std::vector<Complex> approximate_roots(const Poly& p) {
  const int deg = p.degree();
  std::vector<Complex> a(p.coeffs().size());
  for (std::size_t k = 0; k < a.size(); ++k) a[k] = to_complex(p.coeffs()[k]);
  const Complex lead = a.back();
  for (auto& c : a) c /= lead;

  long double bound = 0;
  for (int k = 0; k < deg; ++k) bound = std::max(bound, std::abs(a[k]));
  const long double radius = std::max<long double>(0.5L, std::pow(std::abs(a[0]) + 1e-30L, 1.0L / deg));

  std::vector<Complex> z(deg);
  for (int k = 0; k < deg; ++k) {
    long double theta = 2 * std::numbers::pi_v<long double> * k / deg + 0.7L;
    z[k] = std::polar(std::min(radius, 1 + bound), theta);
  }

  auto eval = [&](Complex at, Complex& dp) {
    Complex v = a.back();
    dp = 0;
    for (int k = deg - 1; k >= 0; --k) {
      dp = dp * at + v;
      v = v * at + a[k];
    }
    return v;
  };

  for (int iter = 0; iter < 800; ++iter) {
    long double worst = 0;
    for (int k = 0; k < deg; ++k) {
      Complex dp;
      Complex v = eval(z[k], dp);
      if (v == Complex(0)) continue;
      Complex ratio = dp == Complex(0) ? Complex(1e-3L) : v / dp;
      Complex repulsion = 0;
      for (int j = 0; j < deg; ++j)
        if (j != k && z[j] != z[k]) repulsion += 1.0L / (z[k] - z[j]);
      Complex step = ratio / (1.0L - ratio * repulsion);
      z[k] -= step;
      worst = std::max(worst, std::abs(step) / std::max<long double>(1, std::abs(z[k])));
    }
    if (worst < 1e-17L) break;
  }
  return z;
}

std::vector<GaussianRational> roots_of_squarefree(const Poly& g) {
  std::vector<GaussianRational> found;
  if (g.degree() <= 0) return found;
  if (g.degree() == 1) {
    found.push_back(-g.coeff(0) / g.coeff(1));
    return found;
  }
  // Every root in Q(i) of a monic g times L (the lcm of all coefficient
  // denominators) is a Gaussian integer.
  mpz_class scale = 1;
  for (const auto& c : g.coeffs()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), common_denominator(c).get_mpz_t());
  const long double lscale = static_cast<long double>(scale.get_d());

  Poly rest = g;
  for (int round = 0; round < 3 && rest.degree() > 0; ++round) {
    if (rest.degree() == 1) {
      found.push_back(-rest.coeff(0) / rest.coeff(1));
      break;
    }
    auto snap = [&](const Complex& approx) -> std::optional<GaussianRational> {
      const long double sre = approx.real() * lscale;
      const long double sim = approx.imag() * lscale;
      for (long double re : {std::nearbyint(sre), std::floor(sre), std::ceil(sre)}) {
        for (long double im : {std::nearbyint(sim), std::floor(sim), std::ceil(sim)}) {
          mpz_class nre(static_cast<double>(re));
          mpz_class nim(static_cast<double>(im));
          GaussianRational cand(Rational(nre, scale), Rational(nim, scale));
          if (rest(cand).is_zero()) return cand;
        }
      }
      return std::nullopt;
    };
    bool progress = false;
    for (const Complex& approx : approximate_roots(rest)) {
      if (auto root = snap(approx)) {
        found.push_back(*root);
        rest = exact_quotient(rest, Poly::linear(*root));
        progress = true;
        if (rest.degree() <= 0) break;
      }
    }
    if (!progress) break;
  }
  return found;
}

}  // namespace

std::vector<GaussianRational> gaussian_rational_roots(const Poly& p) {
  if (p.is_zero()) throw InputError("roots of the zero polynomial");
  std::vector<GaussianRational> roots;
  for (const auto& part : squarefree_decompose(p).parts) {
    auto r = roots_of_squarefree(part.factor);
    roots.insert(roots.end(), r.begin(), r.end());
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace eigpert
