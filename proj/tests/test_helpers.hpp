#pragma once

// Shared test-side builders.  These construct the operator families directly
// from raw generator words, independent of the library's own builders, so the
// two routes check each other.

#include <random>
#include <vector>

#include "spherealg/opalg/operator_expr.hpp"

namespace testutil {

using spherealg::Generator;
using spherealg::GaussianRational;
using spherealg::OperatorExpr;
using spherealg::Param;
using spherealg::ParamPoly;
using spherealg::RawTerm;
using spherealg::Rational;

inline ParamPoly pc(long n, long d = 1) { return spherealg::poly_const(n, d); }
inline ParamPoly pi() { return ParamPoly::imaginary_unit(); }

inline OperatorExpr nf(const std::vector<RawTerm>& raw) { return OperatorExpr::normal_form(raw); }

constexpr Generator NX = Generator::NX;
constexpr Generator NY = Generator::NY;
constexpr Generator NZ = Generator::NZ;
constexpr Generator LX = Generator::LX;
constexpr Generator LY = Generator::LY;
constexpr Generator LZ = Generator::LZ;

// Components of the cross product of the position and angular families, in
// written operand order: (N x L)_x = N_y L_z - N_z L_y, etc.
inline std::vector<RawTerm> cross_component_raw(int axis, const ParamPoly& scale) {
  const Generator n[3] = {NX, NY, NZ};
  const Generator l[3] = {LX, LY, LZ};
  const int j = (axis + 1) % 3;
  const int k = (axis + 2) % 3;
  return {{scale, {n[j], l[k]}}, {-scale, {n[k], l[j]}}};
}

inline void append(std::vector<RawTerm>& out, const std::vector<RawTerm>& more) {
  out.insert(out.end(), more.begin(), more.end());
}

// K_plus(pa, pb) = i (N x L)_+ + pa N_+ + pb N_+ L_z, built from raw words.
inline OperatorExpr kplus_raw(const ParamPoly& pa, const ParamPoly& pb) {
  std::vector<RawTerm> raw;
  append(raw, cross_component_raw(0, pi()));         // i (N x L)_x
  append(raw, cross_component_raw(1, pi() * pi()));  // i * i (N x L)_y
  raw.push_back({pa, {NX}});
  raw.push_back({pa * pi(), {NY}});
  raw.push_back({pb, {NX, LZ}});
  raw.push_back({pb * pi(), {NY, LZ}});
  return nf(raw);
}

// K_minus(pc_, pd) = -i (N x L)_- + pc_ N_- + pd N_- L_z.
inline OperatorExpr kminus_raw(const ParamPoly& pc_, const ParamPoly& pd) {
  std::vector<RawTerm> raw;
  append(raw, cross_component_raw(0, -pi()));                // -i (N x L)_x
  append(raw, cross_component_raw(1, -(ParamPoly::one())));  // -i * -i (N x L)_y
  raw.push_back({pc_, {NX}});
  raw.push_back({-(pc_ * pi()), {NY}});
  raw.push_back({pd, {NX, LZ}});
  raw.push_back({-(pd * pi()), {NY, LZ}});
  return nf(raw);
}

// Deterministic generator of random words and small random expressions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  int uniform(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Generator gen() { return static_cast<Generator>(uniform(0, 5)); }

  std::vector<Generator> word(int max_len) {
    int len = uniform(0, max_len);
    std::vector<Generator> w;
    w.reserve(static_cast<std::size_t>(len));
    for (int k = 0; k < len; ++k) w.push_back(gen());
    return w;
  }

  GaussianRational coeff() {
    Rational re = spherealg::make_rational(uniform(-6, 6), uniform(1, 4));
    Rational im = spherealg::make_rational(uniform(-6, 6), uniform(1, 4));
    GaussianRational g{re, im};
    if (g.is_zero()) g = GaussianRational(1);
    return g;
  }

  ParamPoly poly() {
    ParamPoly p = ParamPoly::constant(coeff());
    if (uniform(0, 2) == 0) p = p * ParamPoly::parameter(static_cast<Param>(uniform(0, 3)));
    return p;
  }

  OperatorExpr expr(int max_terms, int max_len) {
    std::vector<RawTerm> raw;
    int terms = uniform(1, max_terms);
    for (int t = 0; t < terms; ++t) raw.push_back({poly(), word(max_len)});
    return nf(raw);
  }

  Rational rational(int span = 8, int max_den = 6) {
    return spherealg::make_rational(uniform(-span, span), uniform(1, max_den));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace testutil
