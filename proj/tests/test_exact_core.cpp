#include "orbitforms/linsolve.hpp"
#include "orbitforms/poly.hpp"

#include <doctest.h>

#include <random>

using namespace orbit;

namespace {

MultiPoly t(int d, int i) { return MultiPoly::variable(d, i); }

RationalMatrix random_matrix(std::mt19937_64& rng, int n) {
  RationalMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = random_rational(rng, 9, 5, true);
  return a;
}

// Binomial coefficient, the dimension of polynomials of total degree <= n in d variables.
long choose(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("rational strings round-trip") {
  for (const char* s : {"0", "7", "-3/4", "22/7", "1/1000000000000000000000"}) {
    const Rational q = parse_rational(s);
    CHECK(parse_rational(to_string(q)) == q);
  }
  CHECK(parse_rational("6/8") == Rational(3, 4));
  CHECK(to_string(parse_rational("6/8")) == "3/4");
  CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("polynomial ring arithmetic") {
  const int d = 2;
  const MultiPoly x = t(d, 0), y = t(d, 1), one(d, 1);
  const MultiPoly a = x + y, b = x - y;
  CHECK(a * b == x * x - y * y);
  CHECK((a.pow(3)).coeff({2, 1}) == 3);
  CHECK((a * b).degree() == 2);
  CHECK((x * x * y).derivative(0) == Rational(2) * x * y);
  CHECK((x * x * y).derivative(Monomial{2, 1}) == MultiPoly(d, 2));
  CHECK((a - a).is_zero());
  CHECK(one.is_constant());
  CHECK((x * y).scaled({2, 3}) == Rational(6) * x * y);
  const std::vector<Rational> pt{Rational(1, 2), Rational(-3)};
  CHECK((a * b).evaluate(pt) == Rational(1, 4) - 9);
  CHECK_THROWS_AS(x + MultiPoly::variable(3, 0), DimensionError);
}

TEST_CASE("exact division") {
  const int d = 2;
  const MultiPoly x = t(d, 0), y = t(d, 1);
  const MultiPoly p = (x + y) * (x - Rational(2) * y + MultiPoly(d, 1));
  auto q = exact_quotient(p, x + y);
  REQUIRE(q);
  CHECK(*q == x - Rational(2) * y + MultiPoly(d, 1));
  CHECK_FALSE(exact_quotient(p + MultiPoly(d, 1), x + y));
  const auto [quo, rem] = divide(x * x + MultiPoly(d, 1), x);
  CHECK(quo * x + rem == x * x + MultiPoly(d, 1));
}

TEST_CASE("rational functions normalise and compare by cross-multiplication") {
  const int d = 1;
  const MultiPoly x = t(d, 0), one(d, 1);
  const RationalFn r(x * x - one, x - one);
  REQUIRE(r.as_polynomial());
  CHECK(*r.as_polynomial() == x + one);
  const RationalFn s(one, x);
  CHECK((s + s) == RationalFn(MultiPoly(d, 2), x));
  CHECK(s.derivative(0) == RationalFn(-one, x * x));
  CHECK_FALSE(s.as_polynomial());
}

TEST_CASE("flag spaces have the lattice-count dimension") {
  for (int d = 1; d <= 4; ++d)
    for (int n = 0; n <= 6; ++n) CHECK(FlagSpace(d, CharVector::ones(d), n).size() == choose(n + d, d));
  // a + 2b <= n counted directly.
  for (int n = 0; n <= 10; ++n) {
    int count = 0;
    for (int a = 0; a <= n; ++a)
      for (int b = 0; a + 2 * b <= n; ++b) ++count;
    CHECK(FlagSpace(2, CharVector({1, 2}), n).size() == count);
  }
  const FlagSpace V(2, CharVector({1, 2}), 3);
  CHECK(V.contains({1, 1}));
  CHECK_FALSE(V.contains({0, 2}));
  CHECK(V.index({0, 2}) == -1);
  CHECK_THROWS(CharVector({1, 0}));
}

TEST_CASE("characteristic polynomial satisfies Cayley-Hamilton") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 6; ++n) {
    const RationalMatrix a = random_matrix(rng, n);
    const auto c = charpoly(a);
    REQUIRE(c.size() == static_cast<std::size_t>(n + 1));
    CHECK(c.back() == 1);
    RationalMatrix acc = RationalMatrix::Zero(n, n), pw = RationalMatrix::Identity(n, n);
    for (int k = 0; k <= n; ++k) {
      acc += c[k] * pw;
      pw = pw * a;
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(acc(i, j) == 0);
    Rational tr = 0;
    for (int i = 0; i < n; ++i) tr += a(i, i);
    CHECK(c[n - 1] == -tr);
  }
}

TEST_CASE("triangular matrices give their diagonal as roots") {
  RationalMatrix a = RationalMatrix::Zero(4, 4);
  const Rational diag[] = {2, Rational(1, 3), 2, -5};
  for (int i = 0; i < 4; ++i) {
    a(i, i) = diag[i];
    for (int j = i + 1; j < 4; ++j) a(i, j) = i + j;
  }
  const auto c = charpoly(a);
  CHECK(root_multiplicity(c, 2) == 2);
  CHECK(root_multiplicity(c, Rational(1, 3)) == 1);
  CHECK(root_multiplicity(c, -5) == 1);
  CHECK(root_multiplicity(c, 7) == 0);
  CHECK(polyval(c, Rational(1, 3)) == 0);
}

TEST_CASE("kernel and solve") {
  RationalMatrix a(2, 3);
  a << 1, 2, 3, 2, 4, 6;
  const RationalMatrix k = kernel(a);
  CHECK(k.cols() == 2);
  CHECK((a * k).isZero());
  CHECK(rref(a).rank() == 1);

  RationalMatrix m(2, 2), rhs(2, 1);
  m << 1, 1, 1, -1;
  rhs << 3, 1;
  auto x = solve(m, rhs);
  REQUIRE(x);
  CHECK((*x)(0, 0) == 2);
  CHECK((*x)(1, 0) == 1);
  RationalMatrix bad(2, 1);
  bad << 1, 2;
  CHECK_FALSE(solve(a.leftCols(1), bad * 3 - RationalMatrix::Constant(2, 1, 1)));
}
