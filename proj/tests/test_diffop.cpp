#include "orbitforms/diffop.hpp"

#include <doctest.h>

#include <random>

using namespace orbit;

namespace {

MultiPoly random_poly(std::mt19937_64& rng, int d, int deg) {
  MultiPoly p(d);
  const FlagSpace V(d, CharVector::ones(d), deg);
  for (const auto& m : V.basis()) p.add_term(m, random_rational(rng, 5, 3, true));
  return p;
}

PolyOp random_op(std::mt19937_64& rng, int d) {
  PolyOp op(d);
  const FlagSpace orders(d, CharVector::ones(d), 2);
  for (const auto& alpha : orders.basis()) op.add_term(alpha, random_poly(rng, d, 2));
  return op;
}

}  // namespace

TEST_CASE("partial derivatives and multiplication act as expected") {
  const int d = 2;
  const MultiPoly x = MultiPoly::variable(d, 0), y = MultiPoly::variable(d, 1);
  CHECK(apply(PolyOp::partial(d, 0), x * x * y) == Rational(2) * x * y);
  CHECK(apply(PolyOp::multiplication(y), x) == x * y);
  CHECK(apply(PolyOp::identity(d), x + y) == x + y);
  CHECK(PolyOp::partial(d, 1).order() == 1);
  CHECK(PolyOp(d).order() == -1);
}

TEST_CASE("composition agrees with successive application") {
  std::mt19937_64 rng(5);
  for (int d = 1; d <= 3; ++d)
    for (int trial = 0; trial < 4; ++trial) {
      const PolyOp a = random_op(rng, d), b = random_op(rng, d);
      const MultiPoly p = random_poly(rng, d, 4);
      CHECK(apply(compose(a, b), p) == apply(a, apply(b, p)));
      CHECK(apply(commutator(a, b), p) == apply(a, apply(b, p)) - apply(b, apply(a, p)));
      CHECK(apply(power(a, 3), p) == apply(a, apply(a, apply(a, p))));
    }
}

TEST_CASE("Heisenberg relation") {
  const int d = 1;
  const PolyOp D = PolyOp::partial(d, 0), X = PolyOp::multiplication(MultiPoly::variable(d, 0));
  CHECK(commutator(D, X) == PolyOp::identity(d));
  CHECK(commutator(X, X).is_zero());
}

TEST_CASE("gauge conjugation by a power") {
  // t^{-a} d^2 t^{a} = d^2 + (2a/t) d + a(a-1)/t^2.
  const int d = 1;
  const Rational a(3, 7);
  const MultiPoly t = MultiPoly::variable(d, 0);
  GaugeFactor F(d);
  F.times(t, a);
  const RatOp lap = to_rational(compose(PolyOp::partial(d, 0), PolyOp::partial(d, 0)));
  const RatOp got = gauge_conjugate(lap, F);
  RatOp want(d);
  want.add_term({2}, RationalFn(MultiPoly(d, 1)));
  want.add_term({1}, RationalFn(MultiPoly(d, 2 * a), t));
  want.add_term({0}, RationalFn(MultiPoly(d, a * (a - 1)), t * t));
  CHECK(got == want);
  CHECK_FALSE(to_polynomial(got));
  CHECK(to_polynomial(lap));
}

TEST_CASE("gauge conjugation by an exponential") {
  // e^{-q} d e^{q} = d + q'.
  const int d = 1;
  const MultiPoly t = MultiPoly::variable(d, 0), q = t * t * Rational(5);
  GaugeFactor F(d);
  F.times_exp(q);
  const RatOp got = gauge_conjugate(to_rational(PolyOp::partial(d, 0)), F);
  auto poly = to_polynomial(got);
  REQUIRE(poly);
  CHECK(*poly == PolyOp::partial(d, 0) + PolyOp::multiplication(Rational(10) * t));
}

TEST_CASE("flag preservation and witnesses") {
  const int d = 1;
  const MultiPoly t = MultiPoly::variable(d, 0);
  const PolyOp euler = PolyOp::term({1}, t);
  const FlagSpace V(d, CharVector({1}), 3);
  CHECK(preserves_flag(euler, V).preserved);
  const ExactMatrix M = restrict_to_flag(euler, V);
  CHECK(block_triangular(M));
  for (int i = 0; i < V.size(); ++i) CHECK(M.m(i, i) == total_degree(V.basis()[i]));

  const PolyOp raise = PolyOp::term({1}, t * t);
  const FlagCheck fc = preserves_flag(raise, V);
  CHECK_FALSE(fc.preserved);
  REQUIRE(fc.witness);
  CHECK(total_degree(fc.witness->output) == total_degree(fc.witness->input) + 1);
  CHECK_THROWS_AS(restrict_to_flag(raise, V), NotInvariant);
}

TEST_CASE("operators print readably") {
  const int d = 1;
  const PolyOp op = PolyOp::term({1}, MultiPoly::variable(d, 0)) + PolyOp::constant(d, 2);
  const std::string s = to_string(op);
  CHECK(s.find("D") != std::string::npos);
  CHECK(s.find("t") != std::string::npos);
}
