#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace phf {

enum class Mode { Exact, Float };

const char* mode_name(Mode m);

// Raised when an exact and a float value meet in one operation.
struct ModeMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

// A mathematical precondition failed (pole, bad parameter region, ...).
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed user input.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Scalar {
 public:
  Scalar() : mode_(Mode::Exact), q_(0) {}
  Scalar(long v) : mode_(Mode::Exact), q_(v) {}
  Scalar(int v) : mode_(Mode::Exact), q_(v) {}
  explicit Scalar(const mpq_class& q) : mode_(Mode::Exact), q_(q) { q_.canonicalize(); }
  explicit Scalar(std::complex<double> c) : mode_(Mode::Float), c_(c) {}
  explicit Scalar(double x) : mode_(Mode::Float), c_(x, 0.0) {}

  static Scalar zero(Mode m) { return integer(0, m); }
  static Scalar one(Mode m) { return integer(1, m); }
  static Scalar integer(long v, Mode m);
  static Scalar rational(long p, long q);
  // "p/q", "p", or a decimal; decimals are exact in Exact mode.
  static Scalar parse(const std::string& s, Mode m);

  Mode mode() const { return mode_; }
  bool is_exact() const { return mode_ == Mode::Exact; }
  const mpq_class& q() const;
  std::complex<double> to_complex() const;
  double real() const { return to_complex().real(); }
  bool is_zero() const;
  bool is_integer() const;
  double abs() const;
  // The same value converted to `m` (exact -> float only).
  Scalar as(Mode m) const;

  std::string str() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  void check(const Scalar& o) const;
  Mode mode_;
  mpq_class q_;
  std::complex<double> c_{};
};

inline Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
inline Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
inline Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
inline Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

// Integer operands adopt the mode of the scalar they meet.
inline Scalar operator+(const Scalar& a, long b) { return a + Scalar::integer(b, a.mode()); }
inline Scalar operator-(const Scalar& a, long b) { return a - Scalar::integer(b, a.mode()); }
inline Scalar operator*(const Scalar& a, long b) { return a * Scalar::integer(b, a.mode()); }
inline Scalar operator/(const Scalar& a, long b) { return a / Scalar::integer(b, a.mode()); }
inline Scalar operator+(long a, const Scalar& b) { return Scalar::integer(a, b.mode()) + b; }
inline Scalar operator-(long a, const Scalar& b) { return Scalar::integer(a, b.mode()) - b; }
inline Scalar operator*(long a, const Scalar& b) { return Scalar::integer(a, b.mode()) * b; }
inline Scalar operator/(long a, const Scalar& b) { return Scalar::integer(a, b.mode()) / b; }
inline Scalar operator+(const Scalar& a, int b) { return a + long(b); }
inline Scalar operator-(const Scalar& a, int b) { return a - long(b); }
inline Scalar operator*(const Scalar& a, int b) { return a * long(b); }
inline Scalar operator/(const Scalar& a, int b) { return a / long(b); }
inline Scalar operator+(int a, const Scalar& b) { return long(a) + b; }
inline Scalar operator-(int a, const Scalar& b) { return long(a) - b; }
inline Scalar operator*(int a, const Scalar& b) { return long(a) * b; }
inline Scalar operator/(int a, const Scalar& b) { return long(a) / b; }

Scalar pow(const Scalar& base, long e);

// (c)_i = c(c+1)...(c+i-1)
Scalar rising(const Scalar& c, long i);
// <c>_i = c(c-1)...(c-i+1)
Scalar falling(const Scalar& c, long i);
Scalar factorial(long i, Mode m);

}  // namespace phf
