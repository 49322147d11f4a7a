#include "orbitforms/pi_integral.hpp"
#include "orbitforms/models.hpp"

#include <doctest.h>

using namespace orbit;

TEST_CASE("pi integral acts diagonally on monomials") {
  for (const auto& f : {CharVector({1}), CharVector({1, 2}), CharVector({3, 5}), CharVector({1, 1, 1})}) {
    const int d = f.size();
    for (int n = 0; n <= 4; ++n) {
      const PiIntegral ip = build_pi_integral(f, d, n);
      const FlagSpace V(d, f, n + 3);
      for (const auto& m : V.basis()) {
        const MultiPoly mono = MultiPoly::monomial(m);
        CHECK(apply(ip.op, mono) == pi_eigenvalue(ip, m) * mono);
        // Vanishes below the level, nonzero above it.
        CHECK((pi_eigenvalue(ip, m) == 0) == (f.degree(m) <= n));
      }
    }
  }
}

TEST_CASE("commutator with h annihilates the flag") {
  const Rational nu(1, 3), nu2(2, 5), nu3(3, 7), mu(1, 4);
  std::vector<ModelBundle> models{build_bc1(nu2, nu3), build_sutherland(3, nu), build_sutherland(4, nu),
                                  build_bcn(2, nu, nu2, nu3), build_bcn(3, nu, nu2, nu3), build_g2(nu, mu)};
  for (const auto& m : models)
    for (const auto& fe : m.flags)
      for (int n = 0; n <= 4; ++n) {
        const PiIntegral ip = build_pi_integral(fe.f, m.dim(), n);
        CHECK(annihilation_check(m.h, ip, FlagSpace(m.dim(), fe.f, n)).annihilates);
      }
}

TEST_CASE("QES operator at its own level") {
  const ModelBundle m = build_bc1_qes(Rational(1, 3), Rational(2, 5), Rational(1, 2), 3);
  const PiIntegral ip = build_pi_integral(CharVector({1}), 1, 3);
  CHECK(annihilation_check(m.h, ip, FlagSpace(1, CharVector({1}), 3)).annihilates);
}

TEST_CASE("a non-preserving operator is caught with a witness") {
  // t^2 d raises degree, so [op, ip] sends t^n out of the kernel of ip.
  const PolyOp op = PolyOp::term({1}, MultiPoly::variable(1, 0).pow(2));
  const PiIntegral ip = build_pi_integral(CharVector({1}), 1, 2);
  const auto r = annihilation_check(op, ip, FlagSpace(1, CharVector({1}), 2));
  CHECK_FALSE(r.annihilates);
  REQUIRE(r.witness);
  CHECK_FALSE(r.image.is_zero());
}
