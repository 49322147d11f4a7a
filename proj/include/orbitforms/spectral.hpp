#pragma once

#include "orbitforms/models.hpp"

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbit {

struct SpectrumEntry {
  std::vector<Monomial> quanta;        // every p with this eigenvalue
  Rational eps;
  std::vector<MultiPoly> eigenpolys;   // kernel basis of (M − ε I)
  int algebraic = 0;                   // multiplicity as a root of the characteristic polynomial
  int multiplicity() const { return static_cast<int>(quanta.size()); }
  bool defective() const { return static_cast<int>(eigenpolys.size()) < algebraic; }
};

struct SpectrumRecord {
  std::string model;
  int d = 0;
  CharVector f;
  int n = 0;
  Formula formula = Formula::Corrected;
  std::vector<SpectrumEntry> entries;  // ascending ε
  // Numeric cross-check: max |λ_numeric − ε_predicted| after sorting, and max |Im λ|.
  std::optional<double> numeric_max_dev, numeric_max_imag;
  int size() const;
};

struct FormulaMismatch : std::runtime_error {
  Monomial p;
  Rational eps;
  FormulaMismatch(const Monomial& q, const Rational& e, const std::string& what)
      : std::runtime_error(what), p(q), eps(e) {}
};

struct Inconsistency : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact comparison of the formula's multiset against the characteristic polynomial.
struct FormulaCheck {
  bool ok = true;
  int dim = 0;
  std::vector<Rational> charpoly;
  // First quantum number whose value is not a root, or whose multiplicity disagrees.
  std::optional<Monomial> offending;
  std::optional<Rational> offending_eps;
  std::string detail;
};

FormulaCheck check_formula(const ModelBundle& model, const FlagSpace& V, Formula which);

// Throws FormulaMismatch when a predicted value is not a root of the restricted matrix.
SpectrumRecord spectrum(const ModelBundle& model, int n, Formula which = Formula::Corrected,
                        std::optional<CharVector> f = std::nullopt, bool numeric = true);

struct QesSpectrum {
  int n = 0;
  RationalMatrix matrix;
  Rational trace;
  std::vector<std::complex<double>> eigenvalues_approx;  // rounded from 100-digit values
  std::vector<std::string> eigenvalues;                  // 40 significant digits
  std::vector<std::vector<std::string>> eigenvectors;    // coefficients in 1, τ, …, τⁿ
  double max_imag = 0;
};

QesSpectrum qes_spectrum(const ModelBundle& model, int n);

// Numeric eigenvalues of an exact matrix at 100 significant digits.
std::vector<std::complex<Real100>> numeric_eigenvalues(const RationalMatrix& m);

MultiPoly jacobi_reference(int p, const Rational& a, const Rational& b);
// c with poly = c · ref, when one exists.
std::optional<Rational> proportionality(const MultiPoly& poly, const MultiPoly& ref);

struct OrthogonalityResult {
  double max_offdiag = 0;  // max |<φp,φq>| / sqrt(<φp,φp><φq,φq>) over p ≠ q
  double min_diag = 0;     // min <φp,φp>
  int pmax = 0;
};

// Eigenpolynomials from the exact spectrum, integrated against (1−τ)^{ν₂+ν₃−½}(1+τ)^{ν₂−½}
// with double-exponential quadrature.
OrthogonalityResult orthogonality_check(const Rational& nu2, const Rational& nu3, int pmax, int quadrature_levels = 10);

}  // namespace orbit
