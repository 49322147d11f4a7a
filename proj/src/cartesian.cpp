#include "orbitforms/cartesian.hpp"

#include "orbitforms/spectral.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace orbit {

namespace {

Real pi() { return boost::math::constants::pi<Real>(); }

Real beta_of(const ModelBundle& m) { return to_float<Real>(m.spec.beta); }

int coordinate_count(const ModelBundle& m) {
  switch (m.spec.family) {
    case Family::BC1:
    case Family::BC1_QES: return 1;
    case Family::Sutherland: return m.spec.N;
    case Family::BCN: return m.spec.N;
    case Family::G2: return 3;
    default: throw UnsupportedModel("no Cartesian form for family " + to_string(m.spec.family));
  }
}

void require_trig(const ModelBundle& m, Geometry g) {
  if (g == Geometry::Hyperbolic && m.spec.family != Family::BC1)
    throw UnsupportedModel("hyperbolic geometry is only wired for BC1");
}

// Wall phases θ: the potential is singular where θ ∈ πℤ.
std::vector<Real> wall_phases(const ModelBundle& m, std::span<const Real> x) {
  const Real b = beta_of(m);
  std::vector<Real> th;
  const int n = static_cast<int>(x.size());
  switch (m.spec.family) {
    case Family::BC1:
    case Family::BC1_QES:
      th = {b * x[0], b * x[0] / 2};
      break;
    case Family::Sutherland:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) th.push_back(b * (x[i] - x[j]) / 2);
      break;
    case Family::BCN:
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          th.push_back(b * (x[i] - x[j]) / 2);
          th.push_back(b * (x[i] + x[j]) / 2);
        }
        th.push_back(b * x[i]);
        th.push_back(b * x[i] / 2);
      }
      break;
    case Family::G2:
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
          const int k = 3 - i - j;
          th.push_back(b * (x[i] - x[j]) / 2);
          th.push_back(b * (x[i] + x[j] - 2 * x[k]) / 2);
        }
      break;
    default: throw UnsupportedModel("no Cartesian form");
  }
  return th;
}

// Distance of θ from πℤ as a fraction of π.
double wall_distance(const Real& theta) {
  const Real q = theta / pi();
  const Real frac = q - floor(q);
  return static_cast<double>(std::min(frac, Real(1) - frac));
}

Complex expi(const Real& t) { return Complex(cos(t), sin(t)); }

std::vector<Complex> elementary_symmetric(const std::vector<Complex>& z) {
  std::vector<Complex> e(z.size() + 1, Complex(0, 0));
  e[0] = Complex(1, 0);
  for (const auto& zi : z)
    for (std::size_t k = z.size(); k >= 1; --k) e[k] = e[k] + e[k - 1] * zi;
  return e;
}

Real abs_pow(const Real& v, const Rational& e) {
  if (e == 0) return Real(1);
  if (v == 0) throw SingularPoint("ground-state factor vanishes at the sample point");
  return pow(abs(v), to_float<Real>(e));
}

Real inv_sin2(const Real& t) {
  const Real s = sin(t);
  if (s == 0) throw SingularPoint("potential is singular at the sample point");
  return 1 / (s * s);
}

Complex psi_at(const ModelBundle& m, const NumericPoly<Complex>& phi, std::span<const Real> x, Geometry g) {
  const auto tau = invariants_map(m, x, g);
  return phi(tau) * psi0_cartesian(m, x, g);
}

struct Steps {
  Real h1, h2;
  int levels;
};

// Steps are phase increments, i.e. measured in units of 1/β.
Steps steps_of(const CartesianConfig& cfg, int levels, const Real& beta) {
  const Real h1(cfg.steps.at(0)), h2(cfg.steps.size() > 1 ? cfg.steps[1] : cfg.steps[0] / 2);
  return Steps{h1 / beta, h2 / beta, levels};
}

template <class F>
Complex second_derivative(F&& f, const Real& h) {
  return (-f(2 * h) + Real(16) * f(h) - Real(30) * f(Real(0)) + Real(16) * f(-h) - f(-2 * h)) / (12 * h * h);
}

template <class F>
Complex richardson2(F&& f, const Steps& s) {
  const Complex d1 = second_derivative(f, s.h1);
  if (s.levels == 0) return d1;
  const Complex d2 = second_derivative(f, s.h2);
  const Real r4 = pow(s.h1 / s.h2, 4);
  return (r4 * d2 - d1) / (r4 - 1);
}

Complex local_energy_steps(const ModelBundle& m, const NumericPoly<Complex>& phi, std::span<const Real> x,
                           Geometry g, const Steps& s) {
  const Complex center = psi_at(m, phi, x, g);
  if (center == Complex(0, 0)) throw SingularPoint("eigenfunction vanishes at the sample point");
  std::vector<Real> y(x.begin(), x.end());
  Complex lap(0, 0);
  for (std::size_t k = 0; k < y.size(); ++k) {
    auto f = [&](const Real& dh) {
      if (dh == 0) return center;
      std::vector<Real> z = y;
      z[k] += dh;
      return psi_at(m, phi, z, g);
    };
    lap = lap + richardson2(f, s);
  }
  const Real c = to_float<Real>(kinetic_factor(m));
  return -(c * lap) / center + Complex(hamiltonian_potential(m, x, g), 0);
}

double mean_of(const std::vector<double>& v) {
  return v.empty() ? 0 : std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double stddev_of(const std::vector<double>& v) {
  if (v.size() < 2) return 0;
  const double mu = mean_of(v);
  double s = 0;
  for (double e : v) s += (e - mu) * (e - mu);
  return std::sqrt(s / static_cast<double>(v.size() - 1));
}

}  // namespace

Rational kinetic_factor(const ModelBundle& model) {
  switch (model.spec.family) {
    case Family::BC1:
    case Family::BC1_QES: return 1;
    default: return Rational(1, 2);
  }
}

std::vector<Complex> invariants_map(const ModelBundle& model, std::span<const Real> x, Geometry g) {
  require_trig(model, g);
  const Real b = beta_of(model);
  const auto& s = model.spec;
  switch (s.family) {
    case Family::BC1:
    case Family::BC1_QES:
      return {Complex(g == Geometry::Hyperbolic ? cosh(b * x[0]) : cos(b * x[0]), 0)};
    case Family::Sutherland: {
      const Real Y = std::accumulate(x.begin(), x.end(), Real(0)) / s.N;
      std::vector<Complex> z;
      for (const auto& xi : x) z.push_back(expi(b * (xi - Y)));
      const auto e = elementary_symmetric(z);
      return std::vector<Complex>(e.begin() + 1, e.begin() + s.N);
    }
    case Family::BCN: {
      std::vector<Complex> c;
      for (const auto& xi : x) c.emplace_back(cos(b * xi), 0);
      const auto e = elementary_symmetric(c);
      return std::vector<Complex>(e.begin() + 1, e.end());
    }
    case Family::G2: {
      const Real Y = (x[0] + x[1] + x[2]) / 3;
      const Real y1 = x[0] - Y, y2 = x[1] - Y;
      const Real t1 = 2 * (cos(b * (y1 - y2)) + cos(b * (2 * y1 + y2)) + cos(b * (y1 + 2 * y2)));
      const Real t2 = 2 * (cos(3 * b * y1) + cos(3 * b * y2) + cos(3 * b * (y1 + y2)));
      return {Complex(t1, 0), Complex(t2, 0)};
    }
    default: throw UnsupportedModel("no Cartesian form for family " + to_string(s.family));
  }
}

Real psi0_cartesian(const ModelBundle& model, std::span<const Real> x, Geometry g) {
  require_trig(model, g);
  const Real b = beta_of(model);
  const auto& s = model.spec;
  switch (s.family) {
    case Family::BC1:
    case Family::BC1_QES: {
      if (g == Geometry::Hyperbolic) return abs_pow(sinh(b * x[0]), s.nu2) * abs_pow(sinh(b * x[0] / 2), s.nu3);
      Real v = abs_pow(sin(b * x[0]), s.nu2) * abs_pow(sin(b * x[0] / 2), s.nu3);
      if (s.family == Family::BC1_QES) v *= exp(to_float<Real>(s.b) * cos(b * x[0]));
      return v;
    }
    case Family::Sutherland: {
      Real v = 1;
      for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) v *= abs_pow(sin(b * (x[i] - x[j]) / 2), s.nu);
      return v;
    }
    case Family::BCN: {
      Real v = 1;
      for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j)
          v *= abs_pow(sin(b * (x[i] - x[j]) / 2), s.nu) * abs_pow(sin(b * (x[i] + x[j]) / 2), s.nu);
        v *= abs_pow(sin(b * x[i]), s.nu2) * abs_pow(sin(b * x[i] / 2), s.nu3);
      }
      return v;
    }
    case Family::G2: {
      Real v = 1;
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
          const int k = 3 - i - j;
          v *= abs_pow(sin(b * (x[i] - x[j]) / 2), s.nu) * abs_pow(sin(b * (x[i] + x[j] - 2 * x[k]) / 2), s.mu);
        }
      return v;
    }
    default: throw UnsupportedModel("no Cartesian form for family " + to_string(s.family));
  }
}

Real hamiltonian_potential(const ModelBundle& model, std::span<const Real> x, Geometry g) {
  require_trig(model, g);
  const Real b = beta_of(model), b2 = b * b;
  const auto& s = model.spec;
  switch (s.family) {
    case Family::BC1:
    case Family::BC1_QES: {
      const Real g2 = to_float<Real>(coupling_g2(s.nu2)), g3 = to_float<Real>(coupling_g3(s.nu2, s.nu3));
      if (g == Geometry::Hyperbolic) {
        const Real s1 = sinh(b * x[0]), s2 = sinh(b * x[0] / 2);
        if (s1 == 0) throw SingularPoint("potential is singular at the sample point");
        return g2 * b2 / (s1 * s1) + g3 * b2 / (4 * s2 * s2);
      }
      Real v = g2 * b2 * inv_sin2(b * x[0]) + g3 * b2 / 4 * inv_sin2(b * x[0] / 2);
      if (s.family == Family::BC1_QES) {
        const Real bb = to_float<Real>(s.b), sn = sin(b * x[0]), sh = sin(b * x[0] / 2);
        v += bb * bb * b2 * sn * sn + 2 * bb * b2 * to_float<Real>(2 * s.n + 2 * s.nu2 + s.nu3 + 1) * sh * sh;
      }
      return v;
    }
    case Family::Sutherland: {
      const Real gg = to_float<Real>(coupling_g(s.nu));
      Real v = 0;
      for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) v += inv_sin2(b * (x[i] - x[j]) / 2);
      return gg * b2 / 4 * v;
    }
    case Family::BCN: {
      const Real gg = to_float<Real>(coupling_g(s.nu)), g2 = to_float<Real>(coupling_g2(s.nu2)),
                 g3 = to_float<Real>(coupling_g3(s.nu2, s.nu3));
      Real pair = 0, one2 = 0, one3 = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j)
          pair += inv_sin2(b * (x[i] - x[j]) / 2) + inv_sin2(b * (x[i] + x[j]) / 2);
        one2 += inv_sin2(b * x[i]);
        one3 += inv_sin2(b * x[i] / 2);
      }
      return gg * b2 / 4 * pair + g2 * b2 / 2 * one2 + g3 * b2 / 8 * one3;
    }
    case Family::G2: {
      const Real gg = to_float<Real>(coupling_g(s.nu)), g1 = to_float<Real>(coupling_g1(s.mu));
      Real short_sum = 0, long_sum = 0;
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
          const int k = 3 - i - j;
          short_sum += inv_sin2(b * (x[i] - x[j]) / 2);
          long_sum += inv_sin2(b * (x[i] + x[j] - 2 * x[k]) / 2);
        }
      return gg * b2 / 4 * short_sum + g1 * b2 / 4 * long_sum;
    }
    default: throw UnsupportedModel("no Cartesian form for family " + to_string(s.family));
  }
}

std::vector<Point> sample_points(const ModelBundle& model, const CartesianConfig& cfg) {
  require_trig(model, cfg.geometry);
  const int d = coordinate_count(model);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double beta = to_float<double>(model.spec.beta);
  std::vector<Point> out;
  if (cfg.geometry == Geometry::Hyperbolic) {
    // Same wall distance as the trigonometric case, measured in βx.
    const double lo = cfg.margin * boost::math::constants::pi<double>();
    while (static_cast<int>(out.size()) < cfg.samples)
      out.push_back({Real(lo + (2.0 - lo) * u(rng)) / to_float<Real>(model.spec.beta)});
    return out;
  }
  // BC₁ lives on [0, π/β]; the other models are sampled over one full period per coordinate.
  const bool half = model.spec.family == Family::BC1 || model.spec.family == Family::BC1_QES;
  const double span = (half ? 1.0 : 2.0) * boost::math::constants::pi<double>() / beta;
  long guard = 0;
  while (static_cast<int>(out.size()) < cfg.samples) {
    if (++guard > 1000000) throw NeedsMoreData("sampling rejected every candidate; margin too large");
    Point x(d);
    for (auto& xi : x) xi = Real(span * u(rng));
    bool ok = true;
    for (const auto& th : wall_phases(model, x))
      if (wall_distance(th) < cfg.margin) ok = false;
    if (ok) out.push_back(std::move(x));
  }
  return out;
}

Complex local_energy(const ModelBundle& model, const MultiPoly& phi, std::span<const Real> x,
                     const CartesianConfig& cfg, int richardson_levels) {
  const NumericPoly<Complex> p(phi);
  return local_energy_steps(model, p, x, cfg.geometry, steps_of(cfg, richardson_levels, beta_of(model)));
}

ResidualStats residual_check(const ModelBundle& model, const MultiPoly& phi, std::optional<double> expected,
                             const std::vector<Point>& sample, const CartesianConfig& cfg) {
  const NumericPoly<Complex> p(phi);
  std::vector<double> mags;
  double top = 0;
  for (const auto& x : sample) {
    const auto tau = invariants_map(model, x, cfg.geometry);
    const double a = static_cast<double>(abs(p(tau).real())) + static_cast<double>(abs(p(tau).imag()));
    mags.push_back(a);
    top = std::max(top, a);
  }
  ResidualStats st;
  std::vector<double> energies;
  const Steps s = steps_of(cfg, 1, beta_of(model));
  for (std::size_t i = 0; i < sample.size(); ++i) {
    if (mags[i] < cfg.node_floor * top) {
      ++st.skipped;
      continue;
    }
    Complex e;
    try {
      e = local_energy_steps(model, p, sample[i], cfg.geometry, s);
    } catch (const SingularPoint&) {
      ++st.skipped;
      continue;
    }
    const double re = static_cast<double>(e.real());
    st.max_imag = std::max(st.max_imag, static_cast<double>(abs(e.imag())));
    energies.push_back(re);
    if (expected) st.residuals.push_back(std::abs(re - *expected));
  }
  st.mean_energy = mean_of(energies);
  st.energy_stddev = stddev_of(energies);
  if (!expected)
    for (double e : energies) st.residuals.push_back(std::abs(e - st.mean_energy));
  st.mean = mean_of(st.residuals);
  st.stddev = stddev_of(st.residuals);
  st.max = st.residuals.empty() ? 0 : *std::max_element(st.residuals.begin(), st.residuals.end());
  return st;
}

std::vector<Eigenpair> eigenpairs(const ModelBundle& model, int n) {
  const SpectrumRecord rec = spectrum(model, n, Formula::Corrected, std::nullopt, false);
  std::vector<Eigenpair> out;
  for (const auto& e : rec.entries)
    for (const auto& q : e.eigenpolys) {
      Rational big = 0;
      for (const auto& [m, c] : q.terms()) big = std::max(big, abs(c));
      out.push_back({e.eps, q * (1 / big)});
    }
  return out;
}

AffineFit fit_energy_affine(const ModelBundle& model, const std::vector<Eigenpair>& pairs,
                            const std::vector<Point>& sample, const CartesianConfig& cfg) {
  const double b2 = to_float<double>(model.spec.beta * model.spec.beta);
  std::vector<double> xs;
  AffineFit fit;
  for (const auto& pr : pairs) {
    const auto st = residual_check(model, pr.phi, std::nullopt, sample, cfg);
    xs.push_back(b2 * to_float<double>(pr.eps));
    fit.energies.push_back(st.mean_energy);
    fit.max_point_spread = std::max(fit.max_point_spread, st.energy_stddev);
  }
  const double mx = mean_of(xs), my = mean_of(fit.energies);
  double sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sxx += (xs[k] - mx) * (xs[k] - mx);
    sxy += (xs[k] - mx) * (fit.energies[k] - my);
  }
  if (xs.size() < 2 || sxx == 0) throw NeedsMoreData("affine fit needs at least two distinct eigenvalues");
  fit.kappa = sxy / sxx;
  fit.e0 = my - fit.kappa * mx;
  double ss = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const double r = fit.energies[k] - fit.e0 - fit.kappa * xs[k];
    ss += r * r;
  }
  fit.variance = ss / static_cast<double>(xs.size());
  return fit;
}

std::optional<Rational> pinned_ground_energy(const ModelBundle& model) {
  const auto& s = model.spec;
  switch (s.family) {
    case Family::BC1: return model.e0_derived;
    case Family::Sutherland: return s.nu * s.nu * s.N * (s.N * s.N - 1) / 24;
    case Family::BCN: {
      Rational e = 0;
      for (int i = 1; i <= s.N; ++i) {
        const Rational r = s.nu * (s.N - i) + s.nu2 + s.nu3 / 2;
        e += r * r;
      }
      return e / 2;
    }
    case Family::G2: return s.nu * s.nu + 3 * s.nu * s.mu + 3 * s.mu * s.mu;
    default: return std::nullopt;
  }
}

std::optional<Rational> expected_energy(const ModelBundle& model, const Rational& eps, Geometry g) {
  const auto e0 = pinned_ground_energy(model);
  if (!e0) return std::nullopt;
  const Rational e = *e0 + model.kappa * eps;
  return g == Geometry::Hyperbolic ? Rational(-e) : e;
}

double observed_order(const ModelBundle& model, const MultiPoly& phi, std::span<const Real> x, const Real& exact,
                      double h) {
  const NumericPoly<Complex> p(phi);
  const Steps a{Real(h), Real(h), 0}, b{Real(h / 2), Real(h / 2), 0};
  const Real e1 = abs(local_energy_steps(model, p, x, Geometry::Trigonometric, a).real() - exact);
  const Real e2 = abs(local_energy_steps(model, p, x, Geometry::Trigonometric, b).real() - exact);
  return static_cast<double>(log(e1 / e2) / log(Real(2)));
}

}  // namespace orbit
