#include "pvs/rational.hpp"

#include <cctype>

namespace pvs {

Rational::Rational(long num, long den) {
  if (den == 0) throw Error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("division by zero");
  v_ /= o.v_;
  return *this;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_integer(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!valid_integer(num, true) || !valid_integer(den, false))
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  mpz_class zn(n, 10);
  mpz_class zd(std::string(den), 10);
  if (zd == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  mpq_class q(zn, zd);
  q.canonicalize();
  return Rational(q);
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) return pow(Rational(1) / base, -exponent);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(n, d));
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

bool rational_sqrt(const Rational& r, Rational& root) {
  if (r.sign() < 0) return false;
  const mpz_class n = r.numerator();
  const mpz_class d = r.denominator();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  root = Rational(mpq_class(sn, sd));
  return true;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw Error("division by zero");
  const Rational n = o.norm();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string GaussianRational::str() const {
  if (im_.is_zero()) return re_.str();
  std::string imag;
  if (im_ == Rational(1)) imag = "i";
  else if (im_ == Rational(-1)) imag = "-i";
  else imag = im_.str() + "*i";
  if (re_.is_zero()) return imag;
  if (imag[0] == '-') return re_.str() + imag;
  return re_.str() + "+" + imag;
}

GaussianRational pow(const GaussianRational& base, int exponent) {
  if (exponent < 0) return pow(GaussianRational(1) / base, -exponent);
  GaussianRational result(1), b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

bool gaussian_sqrt(const GaussianRational& z, GaussianRational& root) {
  if (z.is_zero()) {
    root = GaussianRational();
    return true;
  }
  // (a+bi)^2 = z  =>  a^2 = (re + |z|)/2, b^2 = (|z| - re)/2, 2ab = im.
  Rational modulus;
  if (!rational_sqrt(z.norm(), modulus)) return false;
  Rational a2 = (z.re() + modulus) / Rational(2);
  Rational b2 = (modulus - z.re()) / Rational(2);
  Rational a, b;
  if (!rational_sqrt(a2, a) || !rational_sqrt(b2, b)) return false;
  if (!(Rational(2) * a * b == z.im())) b = -b;
  GaussianRational r(a, b);
  if (!(r * r == z)) return false;
  if (!is_positive_normal(r)) r = -r;
  root = r;
  return true;
}

Rational require_real(const GaussianRational& z) {
  if (!z.im().is_zero()) throw Error("expected a real value, got " + z.str());
  return z.re();
}

}  // namespace pvs

std::size_t std::hash<pvs::Rational>::operator()(const pvs::Rational& r) const noexcept {
  const auto* num = r.raw().get_num_mpz_t();
  const auto* den = r.raw().get_den_mpz_t();
  std::size_t h = mpz_size(num) ? mpz_getlimbn(num, 0) : 0;
  h ^= (mpz_size(den) ? mpz_getlimbn(den, 0) : 0) * 0x9e3779b97f4a7c15ULL;
  return h ^ static_cast<std::size_t>(mpz_sgn(num) + 1);
}
