#pragma once

#include "orbitforms/cartesian.hpp"

#include <array>

namespace orbit {

enum class TtwVariant { Plain, SexticQes, FullQes };
// Printed: radial exponent β(ν₂+ν₃) and angular factor e^{−b cos βφ}, as in the source formulas.
// Derived: exponent from the angular energy and e^{+b cos βφ}.
enum class TtwForm { Printed, Derived };

std::string to_string(TtwVariant v);
TtwVariant parse_ttw_variant(const std::string& s);

struct TtwParams {
  Rational nu2 = 1, nu3 = 0, beta = 1, omega = 1, a = 0, b = 0;
  int n = 0, m = 0;
};

using PolarPoint = std::array<Real, 2>;  // (r, φ)

// Ground-state energy of the angular operator at m = 0, in absolute units.
Real ttw_angular_energy(TtwVariant v, TtwForm f, const TtwParams& p);
Real ttw_radial_exponent(TtwVariant v, TtwForm f, const TtwParams& p);
Real ttw_potential(TtwVariant v, TtwForm f, const TtwParams& p, const PolarPoint& x);
Real ttw_psi0(TtwVariant v, TtwForm f, const TtwParams& p, const PolarPoint& x);

// r uniform in [0.2, 2], φ in the period cell off the angular walls.
std::vector<PolarPoint> ttw_sample(const TtwParams& p, const CartesianConfig& cfg);

// Local energies (ℋΨ₀)/Ψ₀; residuals are deviations from their mean, e0_fit the mean.
// The constancy ratio is stddev/|mean|.
struct TtwGround {
  ResidualStats stats;
  double e0 = 0;
  double constancy = 0;
};
TtwGround ttw_ground_check(TtwVariant v, TtwForm f, const TtwParams& p, const std::vector<PolarPoint>& sample,
                           const CartesianConfig& cfg);

}  // namespace orbit
