#pragma once

#include "orbitforms/diffop.hpp"

#include <optional>
#include <vector>

namespace orbit {

struct Rref {
  RationalMatrix m;
  std::vector<int> pivots;  // pivot column of each nonzero row
  int rank() const { return static_cast<int>(pivots.size()); }
};

Rref rref(RationalMatrix a);
// Columns form a basis of the right null space.
RationalMatrix kernel(const RationalMatrix& a);
// Particular solution with free variables set to zero, or nullopt when inconsistent.
std::optional<RationalMatrix> solve(const RationalMatrix& a, const RationalMatrix& b);

// Coefficients c_0..c_n of det(x·I − a), c_n = 1. Hessenberg reduction then the
// standard recurrence on leading principal minors; exact over the rationals.
std::vector<Rational> charpoly(const RationalMatrix& a);
Rational polyval(const std::vector<Rational>& c, const Rational& x);
// Multiplicity of x as a root of c.
int root_multiplicity(std::vector<Rational> c, const Rational& x);

}  // namespace orbit
