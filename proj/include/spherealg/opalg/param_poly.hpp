#pragma once

#include <array>
#include <compare>
#include <complex>
#include <map>
#include <set>
#include <string>

#include "spherealg/opalg/gaussian_rational.hpp"

namespace spherealg {

// The four real scalar parameters of the operator families.
enum class Param : int { A = 0, B = 1, C = 2, D = 3 };

inline constexpr std::array<char, 4> kParamNames = {'a', 'b', 'c', 'd'};

inline char param_name(Param p) { return kParamNames[static_cast<int>(p)]; }

// Exponent tuple (deg_a, deg_b, deg_c, deg_d), ordered graded-lexicographically.
struct ParamExponents {
  std::array<std::uint8_t, 4> e{0, 0, 0, 0};

  int total_degree() const { return e[0] + e[1] + e[2] + e[3]; }

  friend std::strong_ordering operator<=>(const ParamExponents& x, const ParamExponents& y) {
    if (auto c = x.total_degree() <=> y.total_degree(); c != 0) return c;
    return x.e <=> y.e;
  }
  friend bool operator==(const ParamExponents& x, const ParamExponents& y) = default;
};

// Polynomial in the parameters a, b, c, d with Gaussian-rational coefficients.
// All arithmetic is exact; zero coefficients are never stored, so structural
// equality of the term maps is polynomial equality.
class ParamPoly {
 public:
  using TermMap = std::map<ParamExponents, GaussianRational>;

  ParamPoly() = default;

  static ParamPoly zero() { return {}; }
  static ParamPoly constant(GaussianRational v);
  static ParamPoly one() { return constant(GaussianRational(1)); }
  static ParamPoly imaginary_unit() { return constant(GaussianRational::i()); }
  static ParamPoly parameter(Param p);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // The constant term (zero if absent).
  GaussianRational constant_term() const;

  const TermMap& terms() const { return terms_; }

  void add_term(const ParamExponents& e, const GaussianRational& coeff);

  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator-(const ParamPoly& a);
  ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }

  friend ParamPoly operator*(const ParamPoly& a, const GaussianRational& s);
  friend ParamPoly operator*(const GaussianRational& s, const ParamPoly& a) { return a * s; }

  // Complex conjugation: i -> -i, parameters fixed (they are real symbols).
  ParamPoly conj() const;

  // Exact substitution of every listed parameter by a Gaussian rational.
  // Parameters not listed are left symbolic.
  ParamPoly substituted(const std::map<Param, GaussianRational>& values) const;

  // Replaces every occurrence of `from` by the polynomial `value`.
  ParamPoly substituted_poly(Param from, const ParamPoly& value) const;

  std::set<Param> parameters_used() const;

  int total_degree() const;
  int degree_in(Param p) const;

  // Coefficients of this polynomial viewed as univariate in `p` (index = power).
  std::vector<ParamPoly> univariate_coefficients(Param p) const;

  std::complex<double> eval(const std::array<std::complex<double>, 4>& values) const;
  GaussianRational eval_exact(const std::array<GaussianRational, 4>& values) const;

  // Leading coefficient under the graded-lex term order.
  GaussianRational leading_coefficient() const;
  // Scales so the leading coefficient is 1 (exact division).  Zero stays zero.
  ParamPoly monic() const;

  friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }
  // Graded-lex comparison of the term maps; gives report output a stable order.
  friend bool operator<(const ParamPoly& a, const ParamPoly& b) { return a.terms_ < b.terms_; }

  std::string to_string() const;
  static ParamPoly parse(const std::string& text);

 private:
  TermMap terms_;
};

// Convenience builders for the common symbols.
inline ParamPoly poly_a() { return ParamPoly::parameter(Param::A); }
inline ParamPoly poly_b() { return ParamPoly::parameter(Param::B); }
inline ParamPoly poly_c() { return ParamPoly::parameter(Param::C); }
inline ParamPoly poly_d() { return ParamPoly::parameter(Param::D); }
inline ParamPoly poly_const(long n, long d = 1) {
  return ParamPoly::constant(GaussianRational(make_rational(n, d)));
}

}  // namespace spherealg
