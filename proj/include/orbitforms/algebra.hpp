#pragma once

#include "orbitforms/diffop.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace orbit {

struct UnknownGenerator : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Role { Lowering, Cartan, Raising, Central };

struct Generator {
  std::string name;
  PolyOp op;
  Role role;
};

struct GeneratorSet {
  std::string name;  // "gl2", "gln", "g2"
  int d = 1;
  int n = 0;
  CharVector f;
  std::vector<Generator> gens;

  const Generator& get(const std::string& name) const;
  const PolyOp& op(const std::string& name) const { return get(name).op; }
};

// Jm, J0, T0, Jp.
GeneratorSet gl2_generators(int n);
// Jm<i>, J<i><j> (τ_i ∂_j), J0, Jp<i>, with 1-based indices.
GeneratorSet gln_generators(int d, int n);
// J1, J2, J3, J4, R0, R1, R2, T0, T1, T2 and the Euler–Cartan Jc = t∂t + 2u∂u − n.
GeneratorSet g2_algebra_generators(int n);

struct PropertyCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct StructureReport {
  std::string set;
  int d = 0, n = 0;
  std::vector<PropertyCheck> checks;
  bool passed() const;
};

StructureReport check_structure(const GeneratorSet& gs);

// Σ c_w · (g₁ g₂ ⋯) + constant, products composed left to right.
struct GeneratorWord {
  struct Term {
    std::vector<std::string> factors;
    Rational coef;
  };
  std::vector<Term> terms;
  Rational constant = 0;

  GeneratorWord& add(std::vector<std::string> factors, const Rational& c) {
    if (c != 0) terms.push_back({std::move(factors), c});
    return *this;
  }
};

PolyOp evaluate_word(const GeneratorSet& gs, const GeneratorWord& w);
std::string to_string(const GeneratorWord& w);

struct Decomposition {
  bool exact = false;
  GeneratorWord word;      // solver's coefficients, nonzero entries only
  PolyOp residual;         // h − evaluate_word(word)
  // (derivative index, coefficient monomial) pairs left unmatched when no exact solution exists.
  std::vector<std::pair<Monomial, Monomial>> unmatched;
};

// Solves h = Σ c·word over ordered products of at most max_degree non-raising generators, plus a
// constant. allow_raising admits raising generators at degree one (quasi-exactly-solvable operators).
Decomposition fit_decomposition(const PolyOp& h, const GeneratorSet& gs, int max_degree, bool allow_raising = false);

// Words as printed for the BC₁ operator (over gl2 at n = 0), the G₂ operator (over g2 at n = 0) and
// the four MW operators (over gl2 at the variant's level).
GeneratorWord printed_bc1_hidden_word(const Rational& nu2, const Rational& nu3);
GeneratorWord printed_g2_word(const Rational& nu, const Rational& mu);
GeneratorWord printed_mw_word(const std::string& variant, const Rational& b, int n);
int mw_word_level(const std::string& variant, int n);

}  // namespace orbit
