#include "spherealg/opalg/gaussian_rational.hpp"

#include <cctype>
#include <cstdlib>

namespace spherealg {

namespace {

// Exact conversion of a decimal literal like "-0.25" to a rational.
Rational decimal_to_rational(const std::string& text) {
  auto dot = text.find('.');
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  std::size_t frac_len = text.size() - dot - 1;
  if (digits.empty() || digits == "-" || digits == "+")
    throw std::invalid_argument("bad decimal literal: " + text);
  mpz_class num(digits, 10);
  mpz_class den(1);
  for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

Rational parse_rational(const std::string& raw) {
  std::string text = (!raw.empty() && raw[0] == '+') ? raw.substr(1) : raw;
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  if (text.find('.') != std::string::npos) return decimal_to_rational(text);
  try {
    Rational r(text, 10);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad rational literal: " + text);
  }
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const GaussianRational& g) {
  auto imag_part = [](const Rational& im) -> std::string {
    if (im == 1) return "i";
    if (im == -1) return "-i";
    return rational_to_string(im) + "*i";
  };
  if (sgn(g.im) == 0) return rational_to_string(g.re);
  if (sgn(g.re) == 0) return imag_part(g.im);
  if (sgn(g.im) > 0) return rational_to_string(g.re) + "+" + imag_part(g.im);
  return rational_to_string(g.re) + "-" + imag_part(-g.im);
}

GaussianRational parse_gaussian_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty gaussian rational literal");
  // Split off an imaginary tail at the last top-level sign (not at index 0).
  std::size_t split = std::string::npos;
  for (std::size_t k = text.size(); k-- > 1;) {
    if ((text[k] == '+' || text[k] == '-') && text[k - 1] != '/' && text[k - 1] != '+' &&
        text[k - 1] != '-') {
      split = k;
      break;
    }
  }
  auto parse_imag = [](std::string s) -> Rational {
    // s is e.g. "i", "-i", "3/4*i", "-2*i"
    if (s.empty() || s.back() != 'i') throw std::invalid_argument("bad imaginary literal");
    s.pop_back();
    if (!s.empty() && s.back() == '*') s.pop_back();
    if (s.empty() || s == "+") return Rational(1);
    if (s == "-") return Rational(-1);
    return parse_rational(s);
  };
  if (text.back() == 'i') {
    if (split == std::string::npos) return {Rational(0), parse_imag(text)};
    return {parse_rational(text.substr(0, split)), parse_imag(text.substr(split))};
  }
  return {parse_rational(text), Rational(0)};
}

}  // namespace spherealg
