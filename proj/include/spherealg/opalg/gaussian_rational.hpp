#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace spherealg {

using Rational = mpq_class;

// Exact rational p/q in lowest terms.
inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p", "p/q" or a plain decimal such as "-0.25" into an exact rational.
Rational parse_rational(const std::string& text);

std::string rational_to_string(const Rational& r);

// Complex number with exact rational real and imaginary parts.  This is the
// coefficient field of the whole symbolic layer: closed under +, -, *, exact
// division and conjugation.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(long r) : re(make_rational(r)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  GaussianRational conj() const { return {re, -im}; }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational nre = re * o.re - im * o.im;
    Rational nim = re * o.im + im * o.re;
    re = std::move(nre);
    im = std::move(nim);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }

  // Exact division; throws on division by zero.
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    Rational n2 = b.re * b.re + b.im * b.im;
    if (sgn(n2) == 0) throw std::domain_error("division by zero GaussianRational");
    return {(a.re * b.re + a.im * b.im) / n2, (a.im * b.re - a.re * b.im) / n2};
  }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
  // Lexicographic (re, im) order; used only to order containers deterministically.
  friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
    if (int c = cmp(a.re, b.re); c != 0) return c < 0;
    return cmp(a.im, b.im) < 0;
  }
};

// Canonical text for a Gaussian rational, e.g. "3/2", "i", "-2*i", "1/2-3/4*i".
std::string to_string(const GaussianRational& g);

// Inverse of to_string; accepts every form the printer emits.
GaussianRational parse_gaussian_rational(const std::string& text);

}  // namespace spherealg
