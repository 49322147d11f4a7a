#pragma once

#include "orbitforms/models.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbit {

struct SingularPoint : std::domain_error {
  using std::domain_error::domain_error;
};
struct NeedsMoreData : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Geometry { Trigonometric, Hyperbolic };

struct CartesianConfig {
  std::uint64_t seed = 1;
  int samples = 50;
  std::vector<double> steps{1e-2, 5e-3};
  double margin = 0.05;     // fraction of π kept away from every singular wall
  double tolerance = 1e-6;
  double node_floor = 1e-3; // skip points where |φ(τ)| falls below this fraction of its sample maximum
  Geometry geometry = Geometry::Trigonometric;
};

using Point = std::vector<Real>;

// Coordinates: BC₁ one x; Sutherland N and G₂ three particle positions; BC_N N positions.
std::vector<Complex> invariants_map(const ModelBundle& model, std::span<const Real> x,
                                    Geometry g = Geometry::Trigonometric);
Real psi0_cartesian(const ModelBundle& model, std::span<const Real> x, Geometry g = Geometry::Trigonometric);
Real hamiltonian_potential(const ModelBundle& model, std::span<const Real> x,
                           Geometry g = Geometry::Trigonometric);
// ½ for Sutherland, BC_N and G₂; 1 for the BC₁ family.
Rational kinetic_factor(const ModelBundle& model);

// Uniform in the period cell, rejecting points closer than margin·π (in wall phase) to any
// singular hyperplane. Hyperbolic BC₁ samples βx ∈ [margin·π, 2].
std::vector<Point> sample_points(const ModelBundle& model, const CartesianConfig& cfg);

// (ℋΨ)/Ψ at x for Ψ = Ψ₀·φ(τ), by 4th-order central differences and one Richardson step.
Complex local_energy(const ModelBundle& model, const MultiPoly& phi, std::span<const Real> x,
                     const CartesianConfig& cfg, int richardson_levels = 1);

struct ResidualStats {
  std::vector<double> residuals;  // |(ℋΨ)/Ψ − E_expected| per kept point
  double mean = 0, max = 0, stddev = 0;
  double max_imag = 0;
  int skipped = 0;
  double mean_energy = 0, energy_stddev = 0;
  std::optional<double> e0_fit, kappa_fit, fit_variance;
  bool passed(double tol) const { return !residuals.empty() && max <= tol; }
};

// expected is the full energy E₀ + κβ²ε; pass nullopt to only collect local energies.
ResidualStats residual_check(const ModelBundle& model, const MultiPoly& phi, std::optional<double> expected,
                             const std::vector<Point>& sample, const CartesianConfig& cfg);

struct Eigenpair {
  Rational eps;
  MultiPoly phi;
};

// Exact eigenpairs up to level n (one kernel vector per distinct ε).
std::vector<Eigenpair> eigenpairs(const ModelBundle& model, int n);

// Least squares E_k = E₀ + κ β² ε_k over the sample means of the local energies.
struct AffineFit {
  double e0 = 0, kappa = 0;
  double variance = 0;         // mean squared misfit of the line
  double max_point_spread = 0; // largest per-state standard deviation of local energies
  std::vector<double> energies;
};
AffineFit fit_energy_affine(const ModelBundle& model, const std::vector<Eigenpair>& pairs,
                            const std::vector<Point>& sample, const CartesianConfig& cfg);

// Ground-state energies in units of β² that are not printed: fitted once, pinned here.
std::optional<Rational> pinned_ground_energy(const ModelBundle& model);
// Expected energy in units of β² for ε, using the derived E₀ or the pinned value.
std::optional<Rational> expected_energy(const ModelBundle& model, const Rational& eps,
                                        Geometry g = Geometry::Trigonometric);

// Observed convergence order of the plain 4th-order stencil between steps h and h/2.
double observed_order(const ModelBundle& model, const MultiPoly& phi, std::span<const Real> x,
                      const Real& exact, double h);

}  // namespace orbit
