#include "orbitforms/algebra.hpp"
#include "orbitforms/models.hpp"

#include <doctest.h>

using namespace orbit;

namespace {

MultiPoly tau(int d, int i) { return MultiPoly::variable(d, i); }

}  // namespace

TEST_CASE("coupling constants") {
  CHECK(coupling_g(Rational(1, 2)) == Rational(-1, 4));
  CHECK(coupling_g2(2) == 2);
  CHECK(coupling_g3(1, 2) == 2 * (2 + 2 - 1));
  CHECK(coupling_g1(Rational(1, 3)) == Rational(-2, 3));
}

TEST_CASE("family names parse") {
  CHECK(parse_family("bc1") == Family::BC1);
  CHECK(parse_family("g2") == Family::G2);
  CHECK(to_string(Family::BCN) == "bcn");
  CHECK_THROWS_AS(parse_family("e8"), UnsupportedModel);
}

TEST_CASE("BC1 eigenvalues at nu2=1, nu3=2") {
  const ModelBundle m = build_bc1(1, 2);
  Rational want[] = {0, 5, 12, 21, 32};
  for (int p = 0; p <= 4; ++p) CHECK(eigenvalue_formula(m, {p}) == want[p]);
  CHECK(apply(m.h, MultiPoly(1, 1)).is_zero());
  // h acts triangularly: the leading coefficient of h(t^p) is the eigenvalue.
  for (int p = 1; p <= 6; ++p) {
    const MultiPoly img = apply(m.h, tau(1, 0).pow(p));
    CHECK(img.coeff({p}) == eigenvalue_formula(m, {p}));
    CHECK(img.degree() == p);
  }
}

TEST_CASE("BC1 rational-form potential at the origin") {
  const Rational nu2(1, 3), nu3(2, 5);
  const ModelBundle m = build_bc1(nu2, nu3);
  REQUIRE(!m.rational_forms.empty());
  const Rational g2 = coupling_g2(nu2), g3 = coupling_g3(nu2, nu3);
  const std::vector<Rational> zero{0};
  CHECK(m.rational_forms.front().potential.evaluate(zero) == g2 / 2 + (g2 + g3) / 2);
}

TEST_CASE("BC2 printed potential at (1,1)") {
  const Rational nu(2, 3), nu2(1, 3), nu3(2, 5);
  const ModelBundle m = build_bcn(2, nu, nu2, nu3);
  const Rational g2 = coupling_g2(nu2), g3 = coupling_g3(nu2, nu3);
  const std::vector<Rational> pt{1, 1};
  const RationalForm* printed = nullptr;
  for (const auto& rf : m.rational_forms)
    if (rf.label == "printed") printed = &rf;
  REQUIRE(printed);
  CHECK(printed->potential.evaluate(pt) == (g2 / 4) / 3 + (2 * (g2 + g3) + g2 - g3) / 4);
}

TEST_CASE("G2 operator basics") {
  const ModelBundle m = build_g2(0, 0);
  CHECK(apply(m.h, MultiPoly(2, 1)).is_zero());
  CHECK(apply(m.h, tau(2, 0)) == Rational(1, 3) * tau(2, 0));
  const ModelBundle g = build_g2(Rational(1, 2), Rational(1, 3));
  CHECK(g.dim() == 2);
  CHECK(g.flags.size() >= 3);
}

TEST_CASE("Sutherland and BCN build with the right dimension") {
  CHECK(build_sutherland(4, Rational(1, 2)).dim() == 3);
  CHECK(build_bcn(3, 1, 1, 1).dim() == 3);
  CHECK(build_sutherland(3, 1).exactly_solvable());
  CHECK_FALSE(build_bc1_qes(1, 1, 1, 2).exactly_solvable());
}

TEST_CASE("QES operator has one invariant level") {
  const ModelBundle m = build_bc1_qes(Rational(1, 3), Rational(2, 5), Rational(1, 2), 3);
  CHECK(m.qes_level() == 3);
  CHECK(preserves_flag(m.h, FlagSpace(1, CharVector({1}), 3)).preserved);
  CHECK_FALSE(preserves_flag(m.h, FlagSpace(1, CharVector({1}), 4)).preserved);
}

TEST_CASE("MW operators are QES-BC1 degenerations") {
  for (const char* v : {"0+", "0-", "1-", "1+"}) {
    const PolyOp h = build_mw_family(v, Rational(1, 2), 2);
    const int L = mw_word_level(v, 2);
    CHECK(preserves_flag(h, FlagSpace(1, CharVector({1}), L)).preserved);
    CHECK_FALSE(preserves_flag(h, FlagSpace(1, CharVector({1}), L + 1)).preserved);
  }
  CHECK_THROWS(build_mw_family("2+", 1, 2));
}

TEST_CASE("characteristic-vector table") {
  CHECK(char_vector_lookup("E7", "trigonometric minimal") == std::vector<int>{1, 2, 2, 2, 3, 3, 4});
  CHECK(char_vector_lookup("H4", "rational") == std::vector<int>{1, 5, 8, 12});
  CHECK(char_vector_lookup("G2", "integer co-Weyl") == std::vector<int>{5, 9});
  CHECK_FALSE(char_vector_lookup("H4", "integer Weyl"));
  for (const auto& row : char_vector_table())
    if (row.model == "A_N") CHECK(char_vector_instance(row, 4) == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("A2 discriminant vanishes on coincident particles") {
  const MultiPoly D = a2_discriminant();
  // All three particles at one point: tau = (3, 3).
  const std::vector<Rational> coincident{3, 3};
  CHECK(D.evaluate(coincident) == 0);
  const std::vector<Rational> generic{0, 0};
  CHECK(D.evaluate(generic) == 27);
}

TEST_CASE("G2 does not preserve the (1,1) flag") {
  const ModelBundle g = build_g2(Rational(1, 3), Rational(2, 5));
  CHECK(preserves_flag(g.h, FlagSpace(2, CharVector({1, 1}), 1)).preserved);
  const FlagCheck fc = preserves_flag(g.h, FlagSpace(2, CharVector({1, 1}), 2));
  CHECK_FALSE(fc.preserved);
  REQUIRE(fc.witness);
  CHECK(fc.witness->input == Monomial{0, 2});
  CHECK(fc.witness->output == Monomial{3, 0});
}
