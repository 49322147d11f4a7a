#pragma once

#include "orbitforms/diffop.hpp"

#include <optional>

namespace orbit {

struct PiIntegral {
  CharVector f;
  int n = 0;
  PolyOp j0;  // Σ fᵢτᵢ∂ᵢ − n
  PolyOp op;  // ∏_{j=0}^{n} (j0 + j), expanded
};

PiIntegral build_pi_integral(const CharVector& f, int d, int n);

// ip(m) = c·m for a monomial m; c = ∏_{j=0}^{n} (deg_f(m) − n + j).
Rational pi_eigenvalue(const PiIntegral& ip, const Monomial& m);

struct AnnihilationResult {
  bool annihilates = true;
  std::optional<Monomial> witness;
  MultiPoly image;  // [h, ip] applied to the witness
};

AnnihilationResult annihilation_check(const PolyOp& h, const PiIntegral& ip, const FlagSpace& V);

}  // namespace orbit
