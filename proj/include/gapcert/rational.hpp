#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <ostream>
#include <string>

namespace gapcert {

using Rational = boost::multiprecision::mpq_rational;

/// Exact complex number with rational real and imaginary parts.
/// All algebra in the symbolic layers runs on this type; doubles appear
/// only at the SDP boundary.
struct ExactComplex {
  Rational re;
  Rational im;

  ExactComplex() : re(0), im(0) {}
  ExactComplex(long r) : re(r), im(0) {}
  ExactComplex(Rational r) : re(std::move(r)), im(0) {}
  ExactComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static ExactComplex i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  ExactComplex conj() const { return {re, -im}; }

  ExactComplex operator-() const { return {-re, -im}; }

  ExactComplex& operator+=(const ExactComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ExactComplex& operator-=(const ExactComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  ExactComplex& operator*=(const ExactComplex& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }

  friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
  friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
  friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }

  ExactComplex inverse() const {
    Rational n = re * re + im * im;
    return {re / n, -im / n};
  }
  friend ExactComplex operator/(const ExactComplex& a, const ExactComplex& b) {
    return a * b.inverse();
  }

  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const ExactComplex& a, const ExactComplex& b) { return !(a == b); }

  double re_d() const { return re.convert_to<double>(); }
  double im_d() const { return im.convert_to<double>(); }

  std::string str() const {
    if (im == 0) return re.str();
    if (re == 0) return im.str() + "i";
    return re.str() + (im > 0 ? "+" : "") + im.str() + "i";
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactComplex& c) {
    return os << c.str();
  }
};

/// Exact rational from a double (doubles are dyadic, so this is lossless).
inline Rational rational_from_double(double x) {
  Rational r(x);
  return r;
}

}  // namespace gapcert
