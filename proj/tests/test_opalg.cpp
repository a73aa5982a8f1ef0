#include <map>

#include "doctest.h"
#include "spherealg/opalg/operator_expr.hpp"
#include "test_helpers.hpp"

using namespace spherealg;
using namespace testutil;

namespace {

OperatorExpr gen(Generator g) { return OperatorExpr::generator(g); }

Monomial mono(std::initializer_list<std::pair<Generator, int>> powers) {
  Monomial m;
  for (auto [g, p] : powers) m.exp[static_cast<int>(g)] = static_cast<std::uint8_t>(p);
  return m;
}

}  // namespace

TEST_CASE("gaussian rational arithmetic and text") {
  GaussianRational x{make_rational(1, 2), make_rational(-3, 4)};
  CHECK(to_string(x) == "1/2-3/4*i");
  CHECK(parse_gaussian_rational(to_string(x)) == x);
  CHECK(parse_gaussian_rational("i") == GaussianRational::i());
  CHECK(parse_gaussian_rational("-i") == -GaussianRational::i());
  CHECK(parse_gaussian_rational("-2*i") == GaussianRational{Rational(0), Rational(-2)});
  CHECK(parse_rational("0.25") == make_rational(1, 4));
  CHECK(parse_rational("-1.5") == make_rational(-3, 2));
  GaussianRational q = x * x.conj();
  CHECK(q == GaussianRational{make_rational(13, 16), Rational(0)});
  CHECK(x / x == GaussianRational(1));
}

TEST_CASE("param poly basics") {
  ParamPoly b = poly_b();
  ParamPoly p = b * (ParamPoly::one() - b);  // b(1-b)
  CHECK(p.total_degree() == 2);
  SUBCASE("substitution hits exact values") {
    ParamPoly half = p.substituted({{Param::B, GaussianRational(make_rational(1, 2))}});
    CHECK(half.is_constant());
    CHECK(half.constant_term() == GaussianRational(make_rational(1, 4)));
  }
  SUBCASE("roots") {
    CHECK(p.substituted({{Param::B, GaussianRational(0)}}).is_zero());
    CHECK(p.substituted({{Param::B, GaussianRational(1)}}).is_zero());
  }
  SUBCASE("identifying parameters") {
    ParamPoly q = (poly_a() + poly_c()) * poly_d();
    ParamPoly r = q.substituted_poly(Param::D, poly_b());
    CHECK(r == (poly_a() + poly_c()) * poly_b());
  }
  SUBCASE("text round trip") {
    ParamPoly q = poly_a() * poly_a() * poly_b() * ParamPoly::constant({make_rational(1, 2), make_rational(3, 4)}) -
                  poly_c() * pc(2) + ParamPoly::imaginary_unit();
    CHECK(ParamPoly::parse(q.to_string()) == q);
    CHECK(ParamPoly::parse(p.to_string()) == p);
  }
}

TEST_CASE("normal form applies the commutation axioms") {
  // L_x N_y -> N_y L_x + i N_z
  OperatorExpr e = OperatorExpr::normal_form(ParamPoly::one(), std::vector<Generator>{LX, NY});
  OperatorExpr expected = nf({{ParamPoly::one(), {NY, LX}}, {pi(), {NZ}}});
  CHECK(e == expected);
  CHECK(e.term_count() == 2);

  // L_z N_x -> N_x L_z + i N_y
  CHECK(gen(LZ) * gen(NX) == nf({{ParamPoly::one(), {NX, LZ}}, {pi(), {NY}}}));

  // L_x L_y - L_y L_x = i L_z
  CHECK(gen(LX) * gen(LY) - gen(LY) * gen(LX) == pi() * gen(LZ));
  CHECK(commutator(gen(LX), gen(LY)) == pi() * gen(LZ));
}

TEST_CASE("unit-norm relation eliminates N_z^2") {
  OperatorExpr nz2 = gen(NZ) * gen(NZ);
  OperatorExpr expected = OperatorExpr::unit() - gen(NX) * gen(NX) - gen(NY) * gen(NY);
  CHECK(nz2 == expected);

  OperatorExpr sum = gen(NX) * gen(NX) + gen(NY) * gen(NY) + gen(NZ) * gen(NZ);
  CHECK(sum == OperatorExpr::unit());
}

TEST_CASE("addition collects like terms") {
  OperatorExpr a = ParamPoly::parameter(Param::A) * gen(NX);
  OperatorExpr b = ParamPoly::parameter(Param::B) * gen(NX);
  OperatorExpr s = a + b;
  CHECK(s.term_count() == 1);
  CHECK(s.coefficient(mono({{NX, 1}})) == poly_a() + poly_b());
  CHECK(a + OperatorExpr::zero() == a);
  CHECK((a - a).is_zero());
}

TEST_CASE("commutator basics") {
  CHECK(commutator(gen(LZ), gen(LZ)).is_zero());
  // [L_z, K_+] = K_+ for fully symbolic parameters
  OperatorExpr kp = kplus_raw(poly_a(), poly_b());
  CHECK(commutator(gen(LZ), kp) == kp);
  OperatorExpr km = kminus_raw(poly_c(), poly_d());
  CHECK(commutator(gen(LZ), km) == -km);
}

TEST_CASE("closed bracket at the first closed parameter point") {
  OperatorExpr kp = kplus_raw(pc(1), pc(0));
  OperatorExpr km = kminus_raw(pc(-1), pc(0));
  CHECK(commutator(kp, km) == pc(-2) * gen(LZ));
}

TEST_CASE("adjoint of generators and words") {
  CHECK(adjoint(gen(NX)) == gen(NX));
  CHECK(adjoint(gen(LZ)) == gen(LZ));
  // (i (N x L)_x)^dagger = -i (N x L)_x - 2 N_x
  OperatorExpr a = nf(cross_component_raw(0, pi()));
  OperatorExpr expected = nf(cross_component_raw(0, -pi())) - pc(2) * gen(NX);
  CHECK(adjoint(a) == expected);
}

TEST_CASE("adjoint of the raising operator matches the lowering template") {
  OperatorExpr kp = kplus_raw(poly_a(), poly_b());
  // K_+^dagger = -i(NxL)_- + (a-2-b) N_- + b N_- L_z
  OperatorExpr expected = kminus_raw(poly_a() - pc(2) - poly_b(), poly_b());
  CHECK(adjoint(kp) == expected);
}

TEST_CASE("substitution") {
  OperatorExpr kp = kplus_raw(poly_a(), poly_b());
  OperatorExpr case1 = kp.substituted(
      {{Param::A, GaussianRational(1)}, {Param::B, GaussianRational(0)}});
  CHECK(case1 == kplus_raw(pc(1), pc(0)));
  CHECK(OperatorExpr::zero()
            .substituted({{Param::A, GaussianRational(1)}})
            .is_zero());
  CHECK_THROWS_AS(kp.substituted({{Param::A, GaussianRational(1)}}), MissingParameterError);
}

TEST_CASE("coefficient queries") {
  OperatorExpr kp = kplus_raw(poly_a(), poly_b());
  // Hand expansion: b N_+ L_z contributes b N_x L_z, i (N x L)_+ contributes N_x L_z.
  CHECK(kp.coefficient(mono({{NX, 1}, {LZ, 1}})) == ParamPoly::one() + poly_b());
  CHECK(OperatorExpr::zero().coefficient(mono({{NX, 1}})).is_zero());
}

TEST_CASE("pre-elimination coefficient convention") {
  // N_z^2 itself: normal form spreads it over 1, N_x^2, N_y^2; the
  // pre-elimination view restores the N_z^2 monomial.
  OperatorExpr nz2 = gen(NZ) * gen(NZ);
  ParamPoly c = nz2.coefficient_pre_elimination(mono({{NZ, 2}}));
  CHECK(c == ParamPoly::one());
  CHECK(nz2.coefficient_pre_elimination(Monomial::unit()).is_zero());

  // A pure N_x^2 term cannot be written as a polynomial in N_z alone.
  OperatorExpr nx2 = gen(NX) * gen(NX);
  CHECK_THROWS_AS(nx2.coefficient_pre_elimination(mono({{NZ, 2}})), PreEliminationError);
}

TEST_CASE("degree queries") {
  CHECK(gen(LZ).degree_N() == 0);
  CHECK(OperatorExpr::unit().degree_N() == 0);
  OperatorExpr kp = kplus_raw(poly_a(), poly_b());
  CHECK(kp.degree_N() == 1);
  OperatorExpr km = kminus_raw(poly_c(), poly_d());
  CHECK(commutator(kp, km).degree_N() == 2);
}

TEST_CASE("canonical text round trip on fixed expressions") {
  OperatorExpr kp = kplus_raw(poly_a(), poly_b());
  CHECK(OperatorExpr::parse_text(kp.to_text()) == kp);
  CHECK(OperatorExpr::parse_text("0").is_zero());
  CHECK(OperatorExpr::zero().to_text() == "0");
}

TEST_CASE("property: normal form is idempotent") {
  Rng rng(20240801);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Generator> w = rng.word(8);
    OperatorExpr once = OperatorExpr::normal_form(ParamPoly::one(), w);
    // Re-feed the normalized terms as raw words; nothing may change.
    std::vector<RawTerm> raw;
    for (const auto& [m, p] : once.terms()) raw.push_back({p, m.word()});
    CHECK(nf(raw) == once);
  }
}

TEST_CASE("property: adjoint is an involution and an anti-homomorphism") {
  Rng rng(77001);
  for (int trial = 0; trial < 200; ++trial) {
    OperatorExpr a = rng.expr(3, 4);
    OperatorExpr b = rng.expr(3, 4);
    CHECK(adjoint(adjoint(a)) == a);
    CHECK(adjoint(a * b) == adjoint(b) * adjoint(a));
  }
}

TEST_CASE("property: Jacobi identity on generator triples") {
  Rng rng(5150);
  for (int trial = 0; trial < 200; ++trial) {
    OperatorExpr a = gen(rng.gen());
    OperatorExpr b = gen(rng.gen());
    OperatorExpr c = gen(rng.gen());
    OperatorExpr j = commutator(commutator(a, b), c) + commutator(commutator(b, c), a) +
                     commutator(commutator(c, a), b);
    CHECK(j.is_zero());
  }
}

TEST_CASE("property: commutator obeys the Leibniz rule") {
  Rng rng(424242);
  for (int trial = 0; trial < 120; ++trial) {
    OperatorExpr a = rng.expr(2, 3);
    OperatorExpr b = rng.expr(2, 3);
    OperatorExpr c = rng.expr(2, 3);
    CHECK(commutator(a, b * c) == commutator(a, b) * c + b * commutator(a, c));
  }
}

TEST_CASE("property: canonical text round trip on random expressions") {
  Rng rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    OperatorExpr a = rng.expr(4, 5);
    CHECK(OperatorExpr::parse_text(a.to_text()) == a);
  }
}
