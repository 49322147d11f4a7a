#include "orbitforms/ttw.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <numeric>
#include <random>

namespace orbit {

namespace {

Real R(const Rational& q) { return to_float<Real>(q); }

Real abs_pow(const Real& v, const Real& e) {
  if (e == 0) return Real(1);
  if (v == 0) throw SingularPoint("ground-state factor vanishes at the sample point");
  return pow(abs(v), e);
}

template <class F>
Real d2(F&& f, const Real& h) {
  return (-f(2 * h) + 16 * f(h) - 30 * f(Real(0)) + 16 * f(-h) - f(-2 * h)) / (12 * h * h);
}
template <class F>
Real d1(F&& f, const Real& h) {
  return (-f(2 * h) + 8 * f(h) - 8 * f(-h) + f(-2 * h)) / (12 * h);
}
// One Richardson step for 4th-order stencils.
template <class D>
Real extrapolate(D&& d, const Real& h1, const Real& h2) {
  const Real r4 = pow(h1 / h2, 4);
  return (r4 * d(h2) - d(h1)) / (r4 - 1);
}

}  // namespace

std::string to_string(TtwVariant v) {
  switch (v) {
    case TtwVariant::Plain: return "plain";
    case TtwVariant::SexticQes: return "sextic";
    case TtwVariant::FullQes: return "full";
  }
  return "?";
}

TtwVariant parse_ttw_variant(const std::string& s) {
  if (s == "plain") return TtwVariant::Plain;
  if (s == "sextic") return TtwVariant::SexticQes;
  if (s == "full") return TtwVariant::FullQes;
  throw UnsupportedModel("unknown TTW variant '" + s + "'");
}

Real ttw_angular_energy(TtwVariant v, TtwForm f, const TtwParams& p) {
  const Real beta = R(p.beta), s = R(p.nu2 + p.nu3 / 2);
  Real e = s * s;
  // The e^{+b cos βφ} dressing shifts the level-0 angular energy by 2b(ν₂+ν₃+½).
  if (v == TtwVariant::FullQes && f == TtwForm::Derived) e += 2 * R(p.b) * R(p.nu2 + p.nu3 + Rational(1, 2));
  return beta * beta * e;
}

Real ttw_radial_exponent(TtwVariant v, TtwForm f, const TtwParams& p) {
  if (f == TtwForm::Printed) return R(p.beta) * R(p.nu2 + p.nu3);
  return sqrt(ttw_angular_energy(v, f, p));
}

Real ttw_potential(TtwVariant v, TtwForm f, const TtwParams& p, const PolarPoint& x) {
  const Real& r = x[0];
  const Real& phi = x[1];
  const Real beta = R(p.beta), b2 = beta * beta, w = R(p.omega), a = R(p.a);
  const Real sn = sin(beta * phi), sh = sin(beta * phi / 2);
  if (sn == 0 || r == 0) throw SingularPoint("potential is singular at the sample point");
  Real ang = R(coupling_g2(p.nu2)) * b2 / (sn * sn) + R(coupling_g3(p.nu2, p.nu3)) * b2 / (4 * sh * sh);
  if (v == TtwVariant::FullQes) {
    const Real bb = R(p.b);
    ang += bb * bb * b2 * sn * sn + 2 * bb * b2 * R(2 * p.m + 2 * p.nu2 + p.nu3 + 1) * sh * sh;
  }
  const Real r2 = r * r;
  Real rad = w * w * r2;
  if (v != TtwVariant::Plain) {
    // Printed r² coefficient uses β(ν₂+ν₃); the derived one uses the actual radial exponent.
    const Real s = f == TtwForm::Printed ? beta * R(p.nu2 + p.nu3) : ttw_radial_exponent(v, f, p);
    rad = a * a * r2 * r2 * r2 + 2 * a * w * r2 * r2 + (w * w - 2 * a * (2 * p.n + 2 + s)) * r2;
  }
  return rad + ang / r2;
}

Real ttw_psi0(TtwVariant v, TtwForm f, const TtwParams& p, const PolarPoint& x) {
  const Real& r = x[0];
  const Real& phi = x[1];
  const Real beta = R(p.beta), w = R(p.omega), a = R(p.a);
  Real val = pow(r, ttw_radial_exponent(v, f, p)) * abs_pow(sin(beta * phi), R(p.nu2)) *
             abs_pow(sin(beta * phi / 2), R(p.nu3));
  Real arg = -w * r * r / 2;
  if (v != TtwVariant::Plain) arg -= a * r * r * r * r / 4;
  if (v == TtwVariant::FullQes) arg += (f == TtwForm::Printed ? -1 : 1) * R(p.b) * cos(beta * phi);
  return val * exp(arg);
}

std::vector<PolarPoint> ttw_sample(const TtwParams& p, const CartesianConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double pi = boost::math::constants::pi<double>();
  const double beta = to_float<double>(p.beta);
  std::vector<PolarPoint> out;
  while (static_cast<int>(out.size()) < cfg.samples) {
    const double r = 0.2 + 1.8 * u(rng);
    // Both angular walls (βφ and βφ/2 in πℤ) are avoided by keeping βφ in [mπ, (1−m)π].
    const double phi = (cfg.margin + (1 - 2 * cfg.margin) * u(rng)) * pi / beta;
    out.push_back({Real(r), Real(phi)});
  }
  return out;
}

TtwGround ttw_ground_check(TtwVariant v, TtwForm f, const TtwParams& p, const std::vector<PolarPoint>& sample,
                           const CartesianConfig& cfg) {
  const Real h1(cfg.steps.at(0)), h2(cfg.steps.size() > 1 ? cfg.steps[1] : cfg.steps[0] / 2);
  const Real hb1 = h1 / R(p.beta), hb2 = h2 / R(p.beta);
  std::vector<double> energies;
  TtwGround g;
  for (const auto& x : sample) {
    try {
      const Real c = ttw_psi0(v, f, p, x);
      auto along_r = [&](const Real& dh) { return ttw_psi0(v, f, p, {x[0] + dh, x[1]}); };
      auto along_phi = [&](const Real& dh) { return ttw_psi0(v, f, p, {x[0], x[1] + dh}); };
      const Real prr = extrapolate([&](const Real& h) { return d2(along_r, h); }, h1, h2);
      const Real pr = extrapolate([&](const Real& h) { return d1(along_r, h); }, h1, h2);
      const Real pff = extrapolate([&](const Real& h) { return d2(along_phi, h); }, hb1, hb2);
      const Real r = x[0];
      const Real e = (-prr - pr / r - pff / (r * r)) / c + ttw_potential(v, f, p, x);
      energies.push_back(static_cast<double>(e));
    } catch (const SingularPoint&) {
      ++g.stats.skipped;
    }
  }
  const double mean = energies.empty() ? 0 : std::accumulate(energies.begin(), energies.end(), 0.0) / energies.size();
  for (double e : energies) g.stats.residuals.push_back(std::abs(e - mean));
  double ss = 0;
  for (double e : energies) ss += (e - mean) * (e - mean);
  g.stats.mean_energy = mean;
  g.stats.energy_stddev = energies.size() > 1 ? std::sqrt(ss / (energies.size() - 1)) : 0;
  g.stats.max = g.stats.residuals.empty() ? 0 : *std::max_element(g.stats.residuals.begin(), g.stats.residuals.end());
  g.stats.e0_fit = mean;
  g.e0 = mean;
  g.constancy = mean == 0 ? g.stats.energy_stddev : g.stats.energy_stddev / std::abs(mean);
  return g;
}

}  // namespace orbit
