#pragma once

#include <zetakit/real.hpp>

namespace zetakit {

/// Complex number over Real. Elementary functions use the principal branch.
struct Complex {
  Real re;
  Real im;

  Complex() = default;
  Complex(Real r) : re(std::move(r)), im(0) {}
  Complex(int r) : re(r), im(0) {}
  Complex(long r) : re(r), im(0) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  bool is_real() const { return im.is_zero(); }

  Complex operator-() const { return {-re, -im}; }
  Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
  Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
  Complex& operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator/=(const Complex& o);
};

inline Complex operator+(Complex a, const Complex& b) { return a += b; }
inline Complex operator-(Complex a, const Complex& b) { return a -= b; }
inline Complex operator*(Complex a, const Complex& b) { return a *= b; }
inline Complex operator*(const Complex& a, const Real& b) { return {a.re * b, a.im * b}; }
inline Complex operator*(const Real& b, const Complex& a) { return {a.re * b, a.im * b}; }
inline Complex operator*(const Complex& a, long b) { return {a.re * b, a.im * b}; }
inline Complex operator*(long b, const Complex& a) { return {a.re * b, a.im * b}; }
inline Complex operator/(const Complex& a, const Real& b) { return {a.re / b, a.im / b}; }
inline Complex operator/(const Complex& a, long b) { return {a.re / b, a.im / b}; }
inline Complex operator+(const Complex& a, long b) { return {a.re + b, a.im}; }
inline Complex operator-(const Complex& a, long b) { return {a.re - b, a.im}; }
inline Complex operator-(long b, const Complex& a) { return {b - a.re, -a.im}; }

inline Complex& Complex::operator/=(const Complex& o) {
  if (o.im.is_zero()) {
    re /= o.re;
    im /= o.re;
    return *this;
  }
  // Smith's algorithm
  if (abs(o.re) >= abs(o.im)) {
    Real r = o.im / o.re;
    Real d = o.re + o.im * r;
    Real nr = (re + im * r) / d;
    im = (im - re * r) / d;
    re = std::move(nr);
  } else {
    Real r = o.re / o.im;
    Real d = o.re * r + o.im;
    Real nr = (re * r + im) / d;
    im = (im * r - re) / d;
    re = std::move(nr);
  }
  return *this;
}
inline Complex operator/(Complex a, const Complex& b) { return a /= b; }
inline Complex operator/(long a, const Complex& b) { return Complex(a) / b; }

inline Real abs(const Complex& z) { return hypot(z.re, z.im); }
inline Real arg(const Complex& z) { return atan2(z.im, z.re); }
inline Complex conj(const Complex& z) { return {z.re, -z.im}; }

inline Complex exp(const Complex& z) {
  if (z.is_real()) return Complex(exp(z.re));
  Real m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}
inline Complex log(const Complex& z) {
  if (z.is_real() && z.re.sign() > 0) return Complex(log(z.re));
  return {log(abs(z)), arg(z)};
}
inline Complex pow(const Complex& z, const Complex& w) {
  if (z.is_real() && w.is_real() && z.re.sign() > 0) return Complex(pow(z.re, w.re));
  if (z.re.is_zero() && z.im.is_zero()) return Complex(0);
  return exp(w * log(z));
}
inline Complex pow(const Complex& z, long n) {
  if (z.is_real()) return Complex(pow(z.re, n));
  Complex r(1), b = z;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return n < 0 ? Complex(1) / r : r;
}
inline Complex sin(const Complex& z) {
  if (z.is_real()) return Complex(sin(z.re));
  return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}
inline Complex cos(const Complex& z) {
  if (z.is_real()) return Complex(cos(z.re));
  return {cos(z.re) * cosh(z.im), -(sin(z.re) * sinh(z.im))};
}

/// Real part accessor shared by Real and Complex so templates can use one spelling.
inline const Real& real_part(const Real& x) { return x; }
inline const Real& real_part(const Complex& z) { return z.re; }

}  // namespace zetakit
