#pragma once

#include "orbitforms/diffop.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbit {

enum class Family { BC1, BC1_QES, Sutherland, BCN, G2, MW, TTW, TTWQesRadial, TTWQesAngular, TTWQesFull };

std::string to_string(Family f);
// Accepts the lower-case CLI spellings (bc1, bc1_qes, sutherland, bcn, g2, mw, ttw, ...).
Family parse_family(const std::string& s);

struct UnsupportedModel : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ModelSpec {
  Family family = Family::BC1;
  int N = 1;
  Rational nu = 0, nu2 = 0, nu3 = 0, mu = 0, b = 0, a = 0, omega = 1, beta = 1;
  int n = 0, m = 0;
  std::string variant;  // MW only: "0+", "0-", "1-", "1+"
};

// Which closed form to use where the printed formula and the operator disagree.
enum class Formula { Printed, Corrected };

// Rational form op = Δ + W(τ), normalised so that gauge_conjugate(op, psi0) − h is expected to be a
// constant. For models with a ½ kinetic term W is twice the potential in units of β².
struct RationalForm {
  std::string label;  // "printed" or "derived"
  RatOp op;
  RationalFn potential;
  GaugeFactor psi0;
  std::string note;
};

struct FlagEntry {
  CharVector f;
  std::string label;
};

struct ModelBundle {
  ModelSpec spec;
  PolyOp h;
  std::vector<FlagEntry> flags;
  std::optional<GaugeFactor> psi0;
  // Printed ground-state energy in units of β²; empty when none is printed and the value is fitted.
  std::optional<Rational> e0_printed;
  // Value the engine derives (gauge identity); empty when only a numeric fit is available.
  std::optional<Rational> e0_derived;
  // E = E₀ + κ β² ε.
  Rational kappa = 1;
  std::vector<RationalForm> rational_forms;
  std::vector<std::string> names;

  int dim() const { return h.nvars(); }
  bool exactly_solvable() const;
  // Level at which a QES operator has its single invariant subspace.
  int qes_level() const { return spec.n; }
};

// Coupling constants as they appear in the Cartesian potentials.
Rational coupling_g(const Rational& nu);
Rational coupling_g2(const Rational& nu2);
Rational coupling_g3(const Rational& nu2, const Rational& nu3);
Rational coupling_g1(const Rational& mu);

ModelBundle build_bc1(const Rational& nu2, const Rational& nu3);
ModelBundle build_bc1_qes(const Rational& nu2, const Rational& nu3, const Rational& b, int n);
ModelBundle build_sutherland(int N, const Rational& nu);
ModelBundle build_bcn(int N, const Rational& nu, const Rational& nu2, const Rational& nu3);
ModelBundle build_g2(const Rational& nu, const Rational& mu);
ModelBundle build_model(const ModelSpec& spec);

// Parameters of the QES-BC₁ operator an MW variant is a degeneration of.
struct MwReference {
  Rational nu2, nu3;
  int n;
};
MwReference mw_reference(const std::string& variant, int n);
PolyOp build_mw_family(const std::string& variant, const Rational& b, int n);

Rational eigenvalue_formula(const ModelBundle& model, const Monomial& p, Formula which = Formula::Corrected);

struct TableRow {
  std::string model;
  std::string column;  // "rational", "trigonometric minimal", "integer Weyl", "integer co-Weyl"
  std::vector<int> vector;  // empty for rank-generic rows
  std::string text;
};
const std::vector<TableRow>& char_vector_table();
std::optional<std::vector<int>> char_vector_lookup(const std::string& model, const std::string& column);
// Concrete vector of a rank-generic row: rank N for A_N/BC_N, k for I2(k).
std::vector<int> char_vector_instance(const TableRow& row, int rank);

// Polynomials in orbit variables that recur across modules.
MultiPoly a2_discriminant();                   // 4τ₁³+4τ₂³−18τ₁τ₂−τ₁²τ₂²+27
MultiPoly bc3_discriminant(bool printed);      // printed variant carries −4τ₂² for −4τ₂³

}  // namespace orbit
