#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "spherealg/opalg/generator.hpp"
#include "spherealg/opalg/param_poly.hpp"

namespace spherealg {

// Exponent vector (p1,p2,p3,q1,q2,q3) of the normal-ordered word
// N_x^p1 N_y^p2 N_z^p3 L_x^q1 L_y^q2 L_z^q3, ordered graded-lexicographically.
// Canonical monomials additionally satisfy p3 <= 1 (N_z^2 is always rewritten
// through the unit-norm relation N_z^2 = 1 - N_x^2 - N_y^2).
struct Monomial {
  std::array<std::uint8_t, 6> exp{0, 0, 0, 0, 0, 0};

  static Monomial unit() { return {}; }
  static Monomial generator(Generator g) {
    Monomial m;
    m.exp[static_cast<int>(g)] = 1;
    return m;
  }

  int total_degree() const;
  int position_degree() const { return exp[0] + exp[1] + exp[2]; }
  int angular_degree() const { return exp[3] + exp[4] + exp[5]; }
  bool is_canonical() const { return exp[2] <= 1; }
  bool is_unit() const { return total_degree() == 0; }

  // The normal-ordered letter sequence of this monomial.
  std::vector<Generator> word() const;

  friend std::strong_ordering operator<=>(const Monomial& x, const Monomial& y) {
    if (auto c = x.total_degree() <=> y.total_degree(); c != 0) return c;
    return x.exp <=> y.exp;
  }
  friend bool operator==(const Monomial& x, const Monomial& y) = default;

  std::string to_string() const;  // "1", "N_x^2*L_z", ...
};

// One raw (pre-normalization) term: an exact coefficient and a generator word
// in arbitrary order.
struct RawTerm {
  ParamPoly coeff;
  std::vector<Generator> word;
};

class MissingParameterError : public std::runtime_error {
 public:
  MissingParameterError(Param p)
      : std::runtime_error(std::string("unbound parameter: ") + param_name(p)), param(p) {}
  Param param;
};

// Noncommutative polynomial in the six generators with ParamPoly coefficients,
// stored in normal-ordered canonical form.  Values are immutable in spirit:
// every operation returns a fresh, fully normalized expression, so structural
// equality of term maps decides operator equality (modulo the physical
// relation dot(N,L) = 0, which normal ordering deliberately does not use).
class OperatorExpr {
 public:
  using TermMap = std::map<Monomial, ParamPoly>;

  OperatorExpr() = default;

  static OperatorExpr zero() { return {}; }
  static OperatorExpr unit() { return from_coeff_monomial(ParamPoly::one(), Monomial::unit()); }
  static OperatorExpr generator(Generator g) {
    return from_coeff_monomial(ParamPoly::one(), Monomial::generator(g));
  }
  static OperatorExpr scalar(ParamPoly p) { return from_coeff_monomial(std::move(p), Monomial::unit()); }
  static OperatorExpr from_coeff_monomial(ParamPoly coeff, const Monomial& m);

  // Normal form of a sum of raw terms: sorts every word with the commutation
  // axioms, eliminates N_z^2 via the unit-norm relation and collects terms.
  static OperatorExpr normal_form(std::span<const RawTerm> raw);
  static OperatorExpr normal_form(const ParamPoly& coeff, std::span<const Generator> word);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // Largest total N-exponent over all terms; 0 for pure-L or constant values.
  int degree_N() const;
  int degree_L() const;

  // Exact coefficient of a canonical monomial; zero if absent.
  const ParamPoly& coefficient(const Monomial& m) const;

  // Coefficient in the pre-elimination convention: the expression is rewritten
  // with explicit N_z powers (re-substituting N_x^2 + N_y^2 = 1 - N_z^2 in the
  // position prefix) and the coefficient of `m` is read off that form.  Only
  // the group of terms sharing m's angular part is reconstructed; throws
  // PreEliminationError when that group is not a polynomial in N_z alone.
  ParamPoly coefficient_pre_elimination(const Monomial& m) const;

  // Full pre-elimination rewrite, used by report rendering.  Groups that do
  // not reconstruct are returned verbatim and listed in `unreconstructed`.
  struct PreElimination {
    std::map<Monomial, ParamPoly> terms;  // monomials may carry N_z^k, k >= 2
    std::vector<Monomial> unreconstructed;
    bool complete() const { return unreconstructed.empty(); }
  };
  PreElimination pre_elimination() const;

  OperatorExpr& operator+=(const OperatorExpr& o);
  OperatorExpr& operator-=(const OperatorExpr& o);
  friend OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b) { return a += b; }
  friend OperatorExpr operator-(OperatorExpr a, const OperatorExpr& b) { return a -= b; }
  friend OperatorExpr operator-(const OperatorExpr& a);
  friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b);
  friend OperatorExpr operator*(const ParamPoly& s, const OperatorExpr& a);
  friend OperatorExpr operator*(const OperatorExpr& a, const ParamPoly& s) { return s * a; }

  friend bool operator==(const OperatorExpr& a, const OperatorExpr& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const OperatorExpr& a, const OperatorExpr& b) { return !(a == b); }

  // Exact substitution of parameters by Gaussian rationals.  `values` must
  // bind every parameter occurring in the expression (MissingParameterError
  // names the first unbound symbol otherwise).
  OperatorExpr substituted(const std::map<Param, GaussianRational>& values) const;

  // Identifies parameter `from` with parameter `to` (exact rename).
  OperatorExpr with_param_identified(Param from, Param to) const;

  std::set<Param> parameters_used() const;

  // Canonical text form: monomials in ascending graded-lex order, exact
  // rational coefficients, `i` as the imaginary token.  Round-trips exactly
  // through parse_text.
  std::string to_text() const;
  static OperatorExpr parse_text(const std::string& text);

 private:
  void add_term(const Monomial& m, const ParamPoly& coeff);

  TermMap terms_;
};

// [A, B] = normal_form(AB - BA).
OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b);

// Hermitian conjugate: reverses every word, conjugates every coefficient
// (generators are self-adjoint, parameters are real symbols).
OperatorExpr adjoint(const OperatorExpr& a);

class PreEliminationError : public std::runtime_error {
 public:
  explicit PreEliminationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace spherealg
