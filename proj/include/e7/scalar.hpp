#ifndef E7_SCALAR_HPP
#define E7_SCALAR_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace e7 {

using Rational = mpq_class;
using cd = std::complex<double>;

/// mpq_class(n, d) does not canonicalize; this does.
inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

/// Exact complex scalar over arbitrary-precision rationals.
struct ExactComplex {
  Rational re, im;

  ExactComplex() : re(0), im(0) {}
  ExactComplex(Rational r) : re(std::move(r)), im(0) {}
  ExactComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  explicit ExactComplex(long n) : re(n), im(0) {}

  friend ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ExactComplex operator-(const ExactComplex& a, const ExactComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ExactComplex operator-(const ExactComplex& a) { return {-a.re, -a.im}; }
  friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ExactComplex operator/(const ExactComplex& a, const ExactComplex& b) {
    Rational n2 = b.re * b.re + b.im * b.im;
    if (n2 == 0) throw std::domain_error("division by zero ExactComplex");
    return {(a.re * b.re + a.im * b.im) / n2, (a.im * b.re - a.re * b.im) / n2};
  }
  ExactComplex& operator+=(const ExactComplex& b) { re += b.re; im += b.im; return *this; }
  ExactComplex& operator-=(const ExactComplex& b) { re -= b.re; im -= b.im; return *this; }
  ExactComplex& operator*=(const ExactComplex& b) { *this = *this * b; return *this; }
  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const ExactComplex& a, const ExactComplex& b) { return !(a == b); }
};

/// Uniform access to the two scalar backends.  RealType is the coordinate
/// field of the real forms (exact rationals resp. doubles).
template <class F>
struct ScalarOps;

template <>
struct ScalarOps<ExactComplex> {
  using Real = Rational;
  static ExactComplex zero() { return ExactComplex(); }
  static ExactComplex one() { return ExactComplex(1); }
  static ExactComplex from_int(long n) { return ExactComplex(n); }
  static ExactComplex from_ratio(long n, long d) { return ExactComplex(make_rational(n, d)); }
  static ExactComplex imaginary_unit() { return {Rational(0), Rational(1)}; }
  static ExactComplex conj(const ExactComplex& x) { return {x.re, -x.im}; }
  static Rational real(const ExactComplex& x) { return x.re; }
  static Rational imag(const ExactComplex& x) { return x.im; }
  static Rational abs2(const ExactComplex& x) { return x.re * x.re + x.im * x.im; }
  static bool is_zero(const ExactComplex& x) { return x.re == 0 && x.im == 0; }
  static cd to_cd(const ExactComplex& x) { return {x.re.get_d(), x.im.get_d()}; }
};

template <>
struct ScalarOps<cd> {
  using Real = double;
  static cd zero() { return {0.0, 0.0}; }
  static cd one() { return {1.0, 0.0}; }
  static cd from_int(long n) { return {double(n), 0.0}; }
  static cd from_ratio(long n, long d) { return {double(n) / double(d), 0.0}; }
  static cd imaginary_unit() { return {0.0, 1.0}; }
  static cd conj(const cd& x) { return std::conj(x); }
  static double real(const cd& x) { return x.real(); }
  static double imag(const cd& x) { return x.imag(); }
  static double abs2(const cd& x) { return std::norm(x); }
  static bool is_zero(const cd& x) { return x == cd(0.0, 0.0); }
  static cd to_cd(const cd& x) { return x; }
};

}  // namespace e7

#endif
