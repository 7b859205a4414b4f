#include "phf/scalar.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace phf {

const char* mode_name(Mode m) { return m == Mode::Exact ? "exact" : "float"; }

Scalar Scalar::integer(long v, Mode m) {
  if (m == Mode::Exact) return Scalar(v);
  return Scalar(std::complex<double>(double(v), 0.0));
}

Scalar Scalar::rational(long p, long q) {
  if (q == 0) throw PreconditionError("zero denominator");
  return Scalar(mpq_class(p, q));
}

static bool parse_decimal(const std::string& s, mpq_class& out) {
  // [-+]digits[.digits][e[-+]digits]
  size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
  std::string digits;
  long scale = 0;
  bool any = false;
  while (i < s.size() && std::isdigit((unsigned char)s[i])) { digits += s[i++]; any = true; }
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) { digits += s[i++]; --scale; any = true; }
  }
  if (!any) return false;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    std::string ex;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ex += s[i++];
    bool anyex = false;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) { ex += s[i++]; anyex = true; }
    if (!anyex) return false;
    scale += std::stol(ex);
  }
  if (i != s.size()) return false;
  mpz_class num(digits, 10);
  mpz_class pw;
  mpz_ui_pow_ui(pw.get_mpz_t(), 10, (unsigned long)std::labs(scale));
  if (scale >= 0)
    out = mpq_class(num * pw);
  else
    out = mpq_class(num, pw);
  out.canonicalize();
  if (neg) out = -out;
  return true;
}

Scalar Scalar::parse(const std::string& raw, Mode m) {
  std::string s;
  for (char ch : raw)
    if (!std::isspace((unsigned char)ch)) s += ch;
  if (s.empty()) throw ParseError("empty number");
  mpq_class q;
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    mpz_class p, d;
    std::string ps = s.substr(0, slash), ds = s.substr(slash + 1);
    if (ps.empty() || ds.empty()) throw ParseError("malformed rational '" + raw + "'");
    if (ps[0] == '+') ps = ps.substr(1);
    if (p.set_str(ps, 10) != 0 || d.set_str(ds, 10) != 0 || ds[0] == '-' || ds[0] == '+')
      throw ParseError("malformed rational '" + raw + "'");
    if (d == 0) throw ParseError("zero denominator in '" + raw + "'");
    q = mpq_class(p, d);
    q.canonicalize();
  } else if (!parse_decimal(s, q)) {
    throw ParseError("malformed number '" + raw + "'");
  }
  Scalar r(q);
  return r.as(m);
}

const mpq_class& Scalar::q() const {
  if (mode_ != Mode::Exact) throw ModeMismatch("rational value requested from a float scalar");
  return q_;
}

std::complex<double> Scalar::to_complex() const {
  if (mode_ == Mode::Exact) return {q_.get_d(), 0.0};
  return c_;
}

bool Scalar::is_zero() const {
  if (mode_ == Mode::Exact) return sgn(q_) == 0;
  return c_ == std::complex<double>(0.0, 0.0);
}

bool Scalar::is_integer() const {
  if (mode_ == Mode::Exact) return q_.get_den() == 1;
  return c_.imag() == 0.0 && std::floor(c_.real()) == c_.real();
}

double Scalar::abs() const {
  if (mode_ == Mode::Exact) return std::fabs(q_.get_d());
  return std::abs(c_);
}

Scalar Scalar::as(Mode m) const {
  if (m == mode_) return *this;
  if (m == Mode::Float) return Scalar(to_complex());
  throw ModeMismatch("cannot convert a float scalar to an exact rational");
}

std::string Scalar::str() const {
  if (mode_ == Mode::Exact) {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }
  std::ostringstream os;
  os.precision(17);
  os << c_.real();
  if (c_.imag() != 0.0) os << (c_.imag() < 0 ? "-" : "+") << std::fabs(c_.imag()) << "i";
  return os.str();
}

void Scalar::check(const Scalar& o) const {
  if (mode_ != o.mode_) throw ModeMismatch("exact and float scalars mixed in one operation");
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check(o);
  if (mode_ == Mode::Exact) q_ += o.q_; else c_ += o.c_;
  return *this;
}
Scalar& Scalar::operator-=(const Scalar& o) {
  check(o);
  if (mode_ == Mode::Exact) q_ -= o.q_; else c_ -= o.c_;
  return *this;
}
Scalar& Scalar::operator*=(const Scalar& o) {
  check(o);
  if (mode_ == Mode::Exact) q_ *= o.q_; else c_ *= o.c_;
  return *this;
}
Scalar& Scalar::operator/=(const Scalar& o) {
  check(o);
  if (o.is_zero()) throw PreconditionError("division by zero");
  if (mode_ == Mode::Exact) q_ /= o.q_; else c_ /= o.c_;
  return *this;
}
Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (mode_ == Mode::Exact) r.q_ = -q_; else r.c_ = -c_;
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check(b);
  if (a.mode_ == Mode::Exact) return a.q_ == b.q_;
  return a.c_ == b.c_;
}

Scalar pow(const Scalar& base, long e) {
  if (e < 0) return Scalar::one(base.mode()) / pow(base, -e);
  Scalar r = Scalar::one(base.mode()), b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Scalar rising(const Scalar& c, long i) {
  Scalar r = Scalar::one(c.mode());
  for (long k = 0; k < i; ++k) r *= c + k;
  return r;
}

Scalar falling(const Scalar& c, long i) {
  Scalar r = Scalar::one(c.mode());
  for (long k = 0; k < i; ++k) r *= c - k;
  return r;
}

Scalar factorial(long i, Mode m) {
  Scalar r = Scalar::one(m);
  for (long k = 2; k <= i; ++k) r *= Scalar::integer(k, m);
  return r;
}

}  // namespace phf
