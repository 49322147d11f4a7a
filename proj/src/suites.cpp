#include "orbitforms/suites.hpp"

#include "orbitforms/algebra.hpp"
#include "orbitforms/cartesian.hpp"
#include "orbitforms/linsolve.hpp"
#include "orbitforms/pi_integral.hpp"
#include "orbitforms/ttw.hpp"
#include "orbitforms/whitelist.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

namespace orbit {

namespace {

using nlohmann::json;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

int qes_level(const ModelBundle& m) {
  return m.spec.family == Family::MW ? mw_word_level(m.spec.variant, m.spec.n) : m.spec.n;
}

bool is_qes(const ModelBundle& m) { return m.spec.family == Family::BC1_QES || m.spec.family == Family::MW; }

Params params_of(const ModelSpec& s) {
  return {{"nu", s.nu}, {"nu2", s.nu2}, {"nu3", s.nu3}, {"mu", s.mu}, {"b", s.b}, {"n", Rational(s.n)}};
}

GeneratorSet generators_for(const ModelBundle& m) {
  switch (m.spec.family) {
    case Family::BC1: return gl2_generators(0);
    case Family::BC1_QES:
    case Family::MW: return gl2_generators(qes_level(m));
    case Family::Sutherland: return gln_generators(m.spec.N - 1, 0);
    case Family::BCN: return gln_generators(m.spec.N, 0);
    case Family::G2: return g2_algebra_generators(0);
    default: throw UnsupportedModel("no hidden algebra for " + to_string(m.spec.family));
  }
}

void add_offset(VerificationReport& rep, const std::string& name, const OffsetCheck& oc) {
  CheckRecord r;
  r.name = name;
  r.status = oc.status == OffsetStatus::Exact ? CheckStatus::Pass
             : oc.status == OffsetStatus::ReportedOffset ? CheckStatus::ReportedOffset
                                                          : CheckStatus::Fail;
  r.detail = oc.detail;
  r.values = {{"residual", to_string(oc.residual)}, {"recorded", to_string(oc.recorded)}};
  rep.add(std::move(r));
}

template <class F>
VerificationReport timed(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport r = f();
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!r.checks.empty()) r.checks.front().seconds = s;
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"flags", "algebra", "pi", "gauge", "cartesian", "ttw", "all"};
  return names;
}

ModelSpec default_parameters() {
  ModelSpec s;
  s.N = 3;
  s.nu = Rational(1, 3);
  s.nu2 = Rational(1, 3);
  s.nu3 = Rational(2, 5);
  s.mu = Rational(2, 5);
  s.b = Rational(1, 2);
  s.a = Rational(1, 3);
  s.n = 2;
  return s;
}

std::string model_tag(const ModelSpec& s) {
  std::string t = to_string(s.family);
  switch (s.family) {
    case Family::Sutherland:
    case Family::BCN: t += "(N=" + std::to_string(s.N) + ")"; break;
    case Family::BC1_QES: t += "(n=" + std::to_string(s.n) + ")"; break;
    case Family::MW: t += "(" + s.variant + ",n=" + std::to_string(s.n) + ")"; break;
    default: break;
  }
  return t;
}

std::vector<ModelSpec> default_models(const std::string& suite, const ModelSpec& p) {
  auto with = [&](Family f, int N = 1, int n = 0, std::string variant = {}) {
    ModelSpec s = p;
    s.family = f;
    s.N = N;
    s.n = n;
    s.variant = std::move(variant);
    return s;
  };
  std::vector<ModelSpec> out{with(Family::BC1), with(Family::Sutherland, 3), with(Family::BCN, 2), with(Family::G2)};
  if (suite == "cartesian") return out;
  out.push_back(with(Family::BC1_QES, 1, p.n));
  out.push_back(with(Family::BCN, 3));
  if (suite == "flags" || suite == "algebra")
    for (const char* v : {"0+", "0-", "1-", "1+"}) out.push_back(with(Family::MW, 1, 2, v));
  return out;
}

VerificationReport flags_checks(const ModelBundle& model, int nmax) {
  VerificationReport rep;
  const std::string tag = "flags/" + model_tag(model.spec);
  if (is_qes(model)) {
    const int L = qes_level(model);
    const auto at = preserves_flag(model.h, FlagSpace(1, CharVector({1}), L));
    const auto above = preserves_flag(model.h, FlagSpace(1, CharVector({1}), L + 1));
    json v{{"level", L}};
    std::string detail = "preserves P_" + std::to_string(L);
    if (above.witness) {
      v["witness_in"] = to_string(above.witness->input);
      v["witness_out"] = to_string(above.witness->output);
      detail += "; P_" + std::to_string(L + 1) + " leaks " + to_string(above.witness->input) + " -> " +
                to_string(above.witness->output);
    }
    rep.add(tag + "/unique-level", at.preserved && !above.preserved, detail, v);
    return rep;
  }
  for (const auto& fe : model.flags) {
    bool ok = true;
    std::string detail = "levels 0.." + std::to_string(nmax) + " preserved";
    json v{{"f", fe.f.f}, {"nmax", nmax}};
    for (int n = 0; n <= nmax && ok; ++n) {
      const auto fc = preserves_flag(model.h, FlagSpace(model.dim(), fe.f, n));
      if (!fc.preserved) {
        ok = false;
        detail = "level " + std::to_string(n) + " leaks " + to_string(fc.witness->input) + " -> " +
                 to_string(fc.witness->output);
        v["witness_in"] = to_string(fc.witness->input);
        v["witness_out"] = to_string(fc.witness->output);
      }
    }
    rep.add(tag + "/f=" + to_string(fe.f), ok, detail, v);
  }
  return rep;
}

VerificationReport algebra_checks(const ModelBundle& model) {
  VerificationReport rep;
  const std::string tag = "algebra/" + model_tag(model.spec);
  const GeneratorSet gs = generators_for(model);
  for (const auto& pc : check_structure(gs).checks) rep.add(tag + "/structure/" + pc.name, pc.passed, pc.detail);

  const Decomposition dec = fit_decomposition(model.h, gs, 2, is_qes(model));
  json v{{"word", to_string(dec.word)}, {"residual", to_string(dec.residual)}};
  std::string detail = dec.exact ? "h = " + to_string(dec.word) : "no exact decomposition";
  if (!dec.exact && !dec.unmatched.empty())
    detail += "; first unmatched derivative " + to_string(dec.unmatched.front().first) + " at coefficient " +
              to_string(dec.unmatched.front().second);
  rep.add(tag + "/decomposition", dec.exact && dec.residual.is_zero(), detail, v);

  const auto& s = model.spec;
  if (s.family == Family::BC1) {
    const PolyOp w = evaluate_word(gs, printed_bc1_hidden_word(s.nu2, s.nu3));
    add_offset(rep, tag + "/printed-word", compare_with_whitelist(w - model.h, "bc1-hidden-word", params_of(s)));
  } else if (s.family == Family::G2) {
    const PolyOp w = evaluate_word(gs, printed_g2_word(s.nu, s.mu));
    add_offset(rep, tag + "/printed-word", compare_with_whitelist(w - model.h, "g2-printed-word", params_of(s)));
  } else if (s.family == Family::MW) {
    const auto r = mw_reference(s.variant, s.n);
    const PolyOp ref = build_bc1_qes(r.nu2, r.nu3, s.b, r.n).h;
    add_offset(rep, tag + "/printed-word", compare_with_whitelist(model.h - ref, "mw-" + s.variant, params_of(s)));
  }
  return rep;
}

VerificationReport pi_checks(const ModelBundle& model, int nmax) {
  VerificationReport rep;
  const std::string tag = "pi/" + model_tag(model.spec);
  std::vector<std::pair<CharVector, std::vector<int>>> plan;
  if (is_qes(model)) plan.push_back({CharVector({1}), {qes_level(model)}});
  else
    for (const auto& fe : model.flags) {
      std::vector<int> levels;
      for (int n = 0; n <= nmax; ++n) levels.push_back(n);
      plan.push_back({fe.f, levels});
    }
  for (const auto& [f, levels] : plan) {
    bool ok = true, closed = true;
    std::string detail = "commutator annihilates every level";
    for (int n : levels) {
      const PiIntegral ip = build_pi_integral(f, model.dim(), n);
      const auto ac = annihilation_check(model.h, ip, FlagSpace(model.dim(), f, n));
      if (!ac.annihilates && ok) {
        ok = false;
        detail = "level " + std::to_string(n) + ": witness " + to_string(*ac.witness) + " -> " + to_string(ac.image);
      }
      const FlagSpace above(model.dim(), f, n + 1);
      for (const auto& m : above.basis())
        if (!(apply(ip.op, MultiPoly::monomial(m)) == pi_eigenvalue(ip, m) * MultiPoly::monomial(m))) closed = false;
    }
    rep.add(tag + "/f=" + to_string(f) + "/annihilation", ok, detail);
    rep.add(tag + "/f=" + to_string(f) + "/closed-form", closed, "ip(m) = prod_j (deg_f(m) - n + j) m on P_{n+1}");
  }
  return rep;
}

VerificationReport gauge_checks(const ModelBundle& model, Formula which) {
  VerificationReport rep;
  const std::string tag = "gauge/" + model_tag(model.spec);
  bool has_derived = false;
  for (const auto& rf : model.rational_forms) has_derived |= rf.label == "derived";
  for (const auto& rf : model.rational_forms) {
    if (model.spec.family == Family::BC1_QES) {
      if (rf.label != "exp(+b t)") continue;
    } else if (which == Formula::Printed ? rf.label != "printed" : (has_derived && rf.label != "derived")) {
      continue;
    }
    const std::string name = tag + "/" + rf.label;
    const RatOp conj = gauge_conjugate(rf.op, rf.psi0);
    const auto poly = to_polynomial(conj);
    rep.add(name + "/polynomial", poly.has_value(),
            poly ? "all denominators cancel" : "conjugated form keeps a rational coefficient",
            {{"psi0", rf.psi0.describe()}});
    if (!poly) continue;
    const PolyOp residual = *poly - model.h;
    const bool constant = residual.order() <= 0 && (residual.is_zero() || residual.coeff(Monomial(model.dim(), 0)).is_constant());
    const Rational c = residual.is_zero() ? Rational(0) : residual.coeff(Monomial(model.dim(), 0)).constant_term();
    if (!constant) {
      rep.add(name + "/equals-h", false, "offset is not constant: " + to_string(residual));
      continue;
    }
    // The constant must be E₀/κ in units of β².
    std::optional<Rational> expected;
    std::string source;
    if (model.spec.family == Family::BC1) {
      expected = *model.e0_printed / model.kappa;
      source = "printed ground-state energy";
    } else if (auto pin = pinned_ground_energy(model)) {
      expected = *pin / model.kappa;
      source = "pinned Cartesian ground-state energy";
    }
    if (expected && c == *expected) {
      rep.add(name + "/equals-h", true, "offset " + to_string(c) + " equals the " + source,
              {{"offset", to_string(c)}});
    } else {
      const std::string id = model.spec.family == Family::BC1 ? "bc1-ground-energy" : "qes-gauge-constant";
      add_offset(rep, name + "/equals-h", compare_with_whitelist(residual, id, params_of(model.spec)));
    }
  }
  return rep;
}

VerificationReport cartesian_checks(const ModelBundle& model, const RunConfig& cfg) {
  VerificationReport rep;
  const auto& s = model.spec;
  const std::string tag = "cartesian/" + model_tag(s);
  CartesianConfig cc;
  cc.seed = cfg.seed;
  cc.samples = cfg.samples;
  cc.tolerance = cfg.tolerance;
  const int level = cfg.n >= 0 ? cfg.n : (s.family == Family::BC1 ? 4 : 2);
  const double b2 = to_float<double>(s.beta * s.beta);

  const auto sample = sample_points(model, cc);
  const auto pairs = eigenpairs(model, level);
  const AffineFit fit = fit_energy_affine(model, pairs, sample, cc);
  const double e0_pin = to_float<double>(*pinned_ground_energy(model)) * b2;
  const double kappa = to_float<double>(model.kappa);
  rep.add(tag + "/fit/kappa", std::abs(fit.kappa - kappa) <= 1e-6,
          "kappa_fit " + std::to_string(fit.kappa) + " vs " + to_string(model.kappa),
          {{"kappa_fit", fit.kappa}, {"kappa", to_string(model.kappa)}});
  rep.add(tag + "/fit/e0", std::abs(fit.e0 - e0_pin) <= 1e-6,
          "E0_fit " + std::to_string(fit.e0) + " vs pinned " + std::to_string(e0_pin),
          {{"e0_fit", fit.e0}, {"e0_pinned", to_string(*pinned_ground_energy(model))}});
  rep.add(tag + "/fit/variance", fit.variance <= 1e-8, "variance " + fmt(fit.variance), {{"variance", fit.variance}});

  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const double expected = to_float<double>(*expected_energy(model, pairs[k].eps)) * b2;
    const auto st = residual_check(model, pairs[k].phi, expected, sample, cc);
    bool ok = st.passed(cfg.tolerance) && static_cast<int>(st.residuals.size()) >= cfg.samples * 4 / 5;
    std::string detail = "max " + fmt(st.max) + " over " + std::to_string(st.residuals.size()) + " points, " +
                         std::to_string(st.skipped) + " skipped";
    if (s.family == Family::Sutherland) {
      ok = ok && st.max_imag <= 1e-8;
      detail += ", max imag " + fmt(st.max_imag);
    }
    rep.add(tag + "/residual/" + std::to_string(k) + "/eps=" + to_string(pairs[k].eps), ok, detail,
            {{"eps", to_string(pairs[k].eps)},
             {"expected", expected},
             {"max", st.max},
             {"mean", st.mean},
             {"stddev", st.stddev},
             {"skipped", st.skipped}});
  }

  // Discrete symmetries: period shift on every coordinate, plus a swap or a reflection.
  {
    const Real period = 2 * boost::math::constants::pi<Real>() / to_float<Real>(s.beta);
    double worst = 0;
    for (const auto& x : sample) {
      std::vector<Point> images;
      Point shifted = x;
      for (auto& xi : shifted) xi += period;
      images.push_back(shifted);
      Point mirrored = x;
      if (mirrored.size() > 1) std::swap(mirrored[0], mirrored[1]);
      else mirrored[0] = -mirrored[0];
      images.push_back(mirrored);
      const Real p0 = psi0_cartesian(model, x), v0 = hamiltonian_potential(model, x);
      for (const auto& y : images) {
        worst = std::max(worst, static_cast<double>(abs(psi0_cartesian(model, y) - p0) / abs(p0)));
        worst = std::max(worst, static_cast<double>(abs(hamiltonian_potential(model, y) - v0) / (1 + abs(v0))));
      }
    }
    rep.add(tag + "/symmetry", worst <= 1e-25, "max relative change " + fmt(worst));
  }

  if (s.family == Family::BC1) {
    CartesianConfig hc = cc;
    hc.geometry = Geometry::Hyperbolic;
    const auto hs = sample_points(model, hc);
    double worst = 0;
    for (const auto& pr : pairs) {
      const double expected = to_float<double>(*expected_energy(model, pr.eps, Geometry::Hyperbolic)) * b2;
      const auto st = residual_check(model, pr.phi, expected, hs, hc);
      worst = std::max(worst, st.max);
    }
    rep.add(tag + "/hyperbolic", worst <= cfg.tolerance, "tau = cosh(beta x), max residual " + fmt(worst));

    ModelSpec fs = s;
    fs.nu2 = 0;
    fs.nu3 = 0;
    ModelBundle free = build_bc1(0, 0);
    free.spec = fs;
    double fworst = 0;
    const auto fsample = sample_points(free, cc);
    for (const auto& pr : eigenpairs(free, level)) {
      const double expected = to_float<double>(pr.eps * s.beta * s.beta);
      fworst = std::max(fworst, residual_check(free, pr.phi, expected, fsample, cc).max);
    }
    rep.add(tag + "/free-particle", fworst <= 1e-8, "E = p^2 beta^2, max residual " + fmt(fworst));

    const auto& x = sample.front();
    const Real exact = to_float<Real>(*expected_energy(model, pairs.back().eps)) * to_float<Real>(s.beta * s.beta);
    const double order = observed_order(model, pairs.back().phi, x, exact, 0.05);
    rep.add(tag + "/fd-order", order >= 3.5, "observed order " + std::to_string(order), {{"order", order}});
  }

  if (s.family == Family::Sutherland && s.N == 3) {
    const MultiPoly D = a2_discriminant();
    const NumericPoly<Complex> Dn(D);
    double worst = 0;
    const Real expected = pow(Real(64), to_float<Real>(s.nu));
    for (int i = 0; i < std::min<int>(20, sample.size()); ++i) {
      const auto tau = invariants_map(model, sample[i]);
      const Complex d = Dn(tau);
      const Real psi = psi0_cartesian(model, sample[i]);
      const Real ratio = pow(d.real(), to_float<Real>(s.nu)) / (psi * psi);
      worst = std::max(worst, static_cast<double>(abs(ratio / expected - 1)));
      worst = std::max(worst, static_cast<double>(abs(d.imag()) / abs(d.real())));
    }
    rep.add(tag + "/a2-discriminant", worst <= 1e-12, "D(tau)^nu / Psi0^2 = 64^nu, max relative deviation " + fmt(worst));
  }
  return rep;
}

VerificationReport ttw_checks(const RunConfig& cfg) {
  VerificationReport rep;
  const auto& s = cfg.model;
  TtwParams p;
  p.nu2 = s.nu2;
  p.nu3 = s.nu3;
  p.beta = s.beta;
  p.omega = s.omega;
  p.a = s.a;
  p.b = s.b;
  CartesianConfig cc;
  cc.seed = cfg.seed;
  cc.samples = cfg.samples;
  const TtwForm form = cfg.formula == Formula::Printed ? TtwForm::Printed : TtwForm::Derived;
  const std::string ftag = form == TtwForm::Printed ? "printed" : "derived";
  const auto sample = ttw_sample(p, cc);
  std::vector<TtwVariant> variants;
  if (cfg.ttw_variant == "all") variants = {TtwVariant::Plain, TtwVariant::SexticQes, TtwVariant::FullQes};
  else variants = {parse_ttw_variant(cfg.ttw_variant)};
  for (auto v : variants) {
    const auto g = ttw_ground_check(v, form, p, sample, cc);
    rep.add("ttw/" + to_string(v) + "/" + ftag + "/constancy", g.constancy <= cfg.tolerance,
            "stddev/|mean| " + fmt(g.constancy) + ", E0 " + std::to_string(g.e0),
            {{"e0", g.e0}, {"constancy", g.constancy}});
  }
  if (cfg.ttw_variant == "all") {
    const double s_exp = static_cast<double>(ttw_radial_exponent(TtwVariant::Plain, form, p));
    const double e_plain = ttw_ground_check(TtwVariant::Plain, form, p, sample, cc).e0;
    const double want = 2 * to_float<double>(p.omega) * (s_exp + 1);
    rep.add("ttw/plain/" + ftag + "/energy", std::abs(e_plain - want) <= 1e-6,
            "E0 " + std::to_string(e_plain) + " vs 2 omega (s+1) = " + std::to_string(want));
    TtwParams pa = p;
    pa.a = 0;
    const double d1 = std::abs(ttw_ground_check(TtwVariant::SexticQes, form, pa, sample, cc).e0 -
                               ttw_ground_check(TtwVariant::Plain, form, pa, sample, cc).e0);
    rep.add("ttw/degeneration/a->0/" + ftag, d1 <= 1e-8, "sextic at a=0 vs plain: " + fmt(d1));
    TtwParams pb = p;
    pb.b = 0;
    const double d2 = std::abs(ttw_ground_check(TtwVariant::FullQes, form, pb, sample, cc).e0 -
                               ttw_ground_check(TtwVariant::SexticQes, form, pb, sample, cc).e0);
    rep.add("ttw/degeneration/b->0/" + ftag, d2 <= 1e-8, "full at b=0 vs sextic: " + fmt(d2));
  }
  return rep;
}

VerificationReport run_suite(const RunConfig& cfg) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), cfg.suite) == names.end())
    throw UnknownSuite("unknown suite '" + cfg.suite + "'");
  VerificationReport rep;
  rep.suite = cfg.suite;
  const std::vector<std::string> suites =
      cfg.suite == "all" ? std::vector<std::string>(names.begin(), names.end() - 1) : std::vector<std::string>{cfg.suite};

  for (const auto& suite : suites) {
    if (suite == "ttw") {
      if (cfg.model_name.empty() || cfg.model_name.rfind("ttw", 0) == 0) rep.merge(timed([&] { return ttw_checks(cfg); }));
      continue;
    }
    std::vector<ModelSpec> specs;
    if (cfg.model_name.empty()) {
      specs = default_models(suite, cfg.model);
    } else {
      if (cfg.model_name.rfind("ttw", 0) == 0) continue;
      specs = {resolve_model(cfg)};
    }
    const int nmax = cfg.n >= 0 ? cfg.n : 4;
    for (const auto& spec : specs) {
      const ModelBundle model = build_model(spec);
      if (suite == "flags") rep.merge(timed([&] { return flags_checks(model, nmax); }));
      else if (suite == "algebra") rep.merge(timed([&] { return algebra_checks(model); }));
      else if (suite == "pi") rep.merge(timed([&] { return pi_checks(model, nmax); }));
      else if (suite == "gauge") {
        if (!model.rational_forms.empty()) rep.merge(timed([&] { return gauge_checks(model, cfg.formula); }));
      } else if (suite == "cartesian") {
        if (model.exactly_solvable()) rep.merge(timed([&] { return cartesian_checks(model, cfg); }));
      }
    }
  }
  rep.sort();
  return rep;
}

}  // namespace orbit
