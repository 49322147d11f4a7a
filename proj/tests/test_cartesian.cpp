#include "orbitforms/cartesian.hpp"
#include "orbitforms/ttw.hpp"

#include <doctest.h>

#include <boost/math/constants/constants.hpp>

using namespace orbit;

namespace {

const Real pi = boost::math::constants::pi<Real>();

double e_of(const ModelBundle& m, const Rational& eps) {
  return to_float<double>(*expected_energy(m, eps) * m.spec.beta * m.spec.beta);
}

ModelBundle with_beta(ModelBundle m, const Rational& beta) {
  m.spec.beta = beta;
  return m;
}

}  // namespace

TEST_CASE("invariants at the origin") {
  const ModelBundle g2 = build_g2(1, 1);
  const Point zero{0, 0, 0};
  const auto t = invariants_map(g2, zero);
  CHECK(abs(t[0] - Complex(6)) < 1e-40);
  CHECK(abs(t[1] - Complex(6)) < 1e-40);
  const Point x{Real(1) / 3};
  CHECK(abs(invariants_map(build_bc1(1, 1), x)[0].real() - cos(Real(1) / 3)) < 1e-45);
}

TEST_CASE("BC1 potential at g2 = 0") {
  // nu2 = 0 kills g2; the remaining wall term is g3 beta^2 / (4 sin^2(beta x / 2)).
  const Rational nu3(3, 2);
  const ModelBundle m = with_beta(build_bc1(0, nu3), Rational(3, 2));
  const Real b(1.5), x(0.7);
  const Real g3 = to_float<Real>(coupling_g3(0, nu3));
  const Real want = g3 * b * b / (4 * pow(sin(b * x / 2), 2));
  const Point pt{x};
  CHECK(abs(hamiltonian_potential(m, pt) - want) < 1e-40);
}

TEST_CASE("walls are rejected") {
  const ModelBundle m = build_bc1(Rational(1, 3), Rational(2, 5));
  const Point wall{0};
  CHECK_THROWS_AS(hamiltonian_potential(m, wall), SingularPoint);
  CHECK_THROWS_AS(hamiltonian_potential(build_g2(1, 1), Point{0, 0, 0}), SingularPoint);
}

TEST_CASE("BC1 residuals for p <= 4 at two values of beta") {
  for (const Rational beta : {Rational(1), Rational(3, 2)}) {
    const ModelBundle m = with_beta(build_bc1(Rational(1, 3), Rational(2, 5)), beta);
    CartesianConfig cfg;
    const auto sample = sample_points(m, cfg);
    CHECK(sample.size() == 50);
    for (const auto& pr : eigenpairs(m, 4)) {
      const auto st = residual_check(m, pr.phi, e_of(m, pr.eps), sample, cfg);
      CHECK(st.passed(1e-6));
      CHECK(st.residuals.size() + st.skipped == sample.size());
    }
  }
}

TEST_CASE("affine fits recover kappa") {
  CartesianConfig cfg;
  cfg.samples = 30;
  struct Case {
    ModelBundle m;
    double kappa;
  };
  std::vector<Case> cases{{build_bc1(Rational(1, 3), Rational(2, 5)), 1.0},
                          {build_sutherland(3, Rational(1, 3)), 0.5},
                          {build_bcn(2, Rational(1, 3), Rational(1, 3), Rational(2, 5)), 0.5},
                          {build_g2(Rational(1, 3), Rational(2, 5)), 3.0}};
  for (const auto& c : cases) {
    const auto sample = sample_points(c.m, cfg);
    const AffineFit fit = fit_energy_affine(c.m, eigenpairs(c.m, 2), sample, cfg);
    CHECK(fit.kappa == doctest::Approx(c.kappa).epsilon(1e-7));
    CHECK(fit.e0 == doctest::Approx(to_float<double>(*pinned_ground_energy(c.m))).epsilon(1e-7));
    CHECK(fit.variance < 1e-8);
  }
}

TEST_CASE("Sutherland local energies are real") {
  const ModelBundle m = build_sutherland(3, Rational(1, 2));
  CartesianConfig cfg;
  cfg.samples = 20;
  const auto sample = sample_points(m, cfg);
  for (const auto& pr : eigenpairs(m, 2)) {
    const auto st = residual_check(m, pr.phi, e_of(m, pr.eps), sample, cfg);
    CHECK(st.max_imag < 1e-8);
    CHECK(st.passed(1e-6));
  }
}

TEST_CASE("free particle") {
  const ModelBundle m = build_bc1(0, 0);
  CartesianConfig cfg;
  const auto sample = sample_points(m, cfg);
  for (const auto& pr : eigenpairs(m, 4)) {
    CHECK(psi0_cartesian(m, sample.front()) == 1);
    CHECK(residual_check(m, pr.phi, to_float<double>(pr.eps), sample, cfg).passed(1e-8));
  }
}

TEST_CASE("hyperbolic continuation flips the energy sign") {
  const ModelBundle m = build_bc1(Rational(1, 3), Rational(2, 5));
  CartesianConfig cfg;
  cfg.geometry = Geometry::Hyperbolic;
  const auto sample = sample_points(m, cfg);
  for (const auto& pr : eigenpairs(m, 3)) {
    const double e = to_float<double>(*expected_energy(m, pr.eps, Geometry::Hyperbolic));
    CHECK(residual_check(m, pr.phi, e, sample, cfg).passed(1e-6));
  }
  CHECK_THROWS(sample_points(build_g2(1, 1), cfg));
}

TEST_CASE("stencil converges at fourth order") {
  const ModelBundle m = build_bc1(Rational(1, 3), Rational(2, 5));
  const auto pairs = eigenpairs(m, 3);
  const Point x{Real(1.1)};
  const double order = observed_order(m, pairs.back().phi, x, Real(e_of(m, pairs.back().eps)), 0.05);
  CHECK(order > 3.5);
  CHECK(order < 4.5);
}

TEST_CASE("A2 discriminant is 64^nu times the squared ground state") {
  const Rational nu(1, 3);
  const ModelBundle m = build_sutherland(3, nu);
  CartesianConfig cfg;
  cfg.samples = 10;
  const NumericPoly<Complex> D(a2_discriminant());
  for (const auto& x : sample_points(m, cfg)) {
    const Complex d = D(invariants_map(m, x));
    const Real psi = psi0_cartesian(m, x);
    CHECK(abs(d.imag()) < 1e-40);
    const Real ratio = pow(d.real(), to_float<Real>(nu)) / (psi * psi) / pow(Real(64), to_float<Real>(nu));
    CHECK(abs(ratio - 1) < 1e-12);
  }
}

TEST_CASE("sampling is seeded and periodic") {
  const ModelBundle m = build_bcn(2, Rational(1, 3), Rational(1, 3), Rational(2, 5));
  CartesianConfig a, b;
  b.seed = 2;
  CHECK(sample_points(m, a) == sample_points(m, a));
  CHECK(sample_points(m, a) != sample_points(m, b));
  Point x = sample_points(m, a).front(), y = x;
  for (auto& v : y) v += 2 * pi;
  CHECK(abs(psi0_cartesian(m, x) - psi0_cartesian(m, y)) < 1e-40);
}

TEST_CASE("TTW ground states") {
  TtwParams p;
  p.nu2 = Rational(1, 3);
  p.nu3 = Rational(2, 5);
  p.a = Rational(1, 3);
  p.b = Rational(1, 2);
  CartesianConfig cfg;
  const auto sample = ttw_sample(p, cfg);
  for (auto v : {TtwVariant::Plain, TtwVariant::SexticQes, TtwVariant::FullQes})
    CHECK(ttw_ground_check(v, TtwForm::Derived, p, sample, cfg).constancy < 1e-6);
  // The printed exponent only works when nu3 = 0 and b = 0.
  CHECK(ttw_ground_check(TtwVariant::Plain, TtwForm::Printed, p, sample, cfg).constancy > 1e-3);
  TtwParams q = p;
  q.nu3 = 0;
  q.b = 0;
  CHECK(ttw_ground_check(TtwVariant::Plain, TtwForm::Printed, q, sample, cfg).constancy < 1e-6);

  const auto plain = ttw_ground_check(TtwVariant::Plain, TtwForm::Derived, p, sample, cfg);
  const double s = static_cast<double>(ttw_radial_exponent(TtwVariant::Plain, TtwForm::Derived, p));
  CHECK(plain.e0 == doctest::Approx(2 * (s + 1)).epsilon(1e-8));
  CHECK(parse_ttw_variant("sextic") == TtwVariant::SexticQes);
  CHECK_THROWS(parse_ttw_variant("quartic"));
}
