// One line per acceptance criterion, with indented detail lines underneath.
// Exit status is non-zero when any criterion fails.

#include "orbitforms/algebra.hpp"
#include "orbitforms/spectral.hpp"
#include "orbitforms/suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

using namespace orbit;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> lines;

  void note(bool pass, const std::string& what) {
    ok = ok && pass;
    lines.push_back(std::string(pass ? "ok   " : "FAIL ") + what);
  }
};

int failures = 0;

void criterion(const char* id, const char* title, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.note(false, std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s %s  %s (%.1fs)\n", id, o.ok ? "PASS" : "FAIL", title, s);
  for (const auto& l : o.lines) std::printf("      %s\n", l.c_str());
  std::fflush(stdout);
  if (!o.ok) ++failures;
}

std::mt19937_64 rng(20261015);

Rational positive() { return abs(random_rational(rng, 9, 7, false)); }

struct Case {
  std::string name;
  std::function<ModelBundle()> build;
  int nmax;
};

std::vector<Case> exact_cases() {
  std::vector<Case> out;
  out.push_back({"bc1", [] { return build_bc1(positive(), positive()); }, 12});
  const int sn[] = {6, 5, 4, 3};
  for (int N = 2; N <= 5; ++N)
    out.push_back({"sutherland N=" + std::to_string(N), [N] { return build_sutherland(N, positive()); }, sn[N - 2]});
  const int bn[] = {6, 5, 4, 3};
  for (int N = 1; N <= 4; ++N)
    out.push_back({"bcn N=" + std::to_string(N), [N] { return build_bcn(N, positive(), positive(), positive()); },
                   bn[N - 1]});
  out.push_back({"g2", [] { return build_g2(positive(), positive()); }, 10});
  return out;
}

std::string summary(const VerificationReport& r) {
  std::ostringstream os;
  os << r.count(CheckStatus::Pass) << " pass, " << r.count(CheckStatus::ReportedOffset) << " reported offset, "
     << r.count(CheckStatus::Fail) << " fail";
  return os.str();
}

void list_failures(Outcome& o, const VerificationReport& r) {
  for (const auto& c : r.checks)
    if (c.status == CheckStatus::Fail) o.lines.push_back("  " + c.name + ": " + c.detail);
}

}  // namespace

int main() {
  criterion("AC1", "exact spectra: printed eigenvalue formulas are roots of the restricted charpoly", [] {
    Outcome o;
    for (const auto& c : exact_cases()) {
      bool printed = true, corrected = true;
      std::string why;
      for (int k = 0; k < 5; ++k) {
        const ModelBundle m = c.build();
        const CharVector f = m.flags.front().f;
        const FlagSpace V(m.dim(), f, c.nmax);
        const FormulaCheck pc = check_formula(m, V, Formula::Printed);
        const FormulaCheck cc = check_formula(m, V, Formula::Corrected);
        corrected = corrected && cc.ok && cc.dim == V.size();
        if (!pc.ok && printed) why = ": " + pc.detail;
        printed = printed && pc.ok && pc.dim == V.size();
      }
      o.note(printed, c.name + " printed formula, n <= " + std::to_string(c.nmax) + why);
      o.lines.push_back(std::string(corrected ? "     " : "FAIL ") + c.name + " corrected formula exact at all 5 tuples");
      o.ok = o.ok && corrected;
    }
    return o;
  });

  criterion("AC2", "flag preservation for every table flag", [] {
    Outcome o;
    for (const auto& c : exact_cases()) {
      for (int k = 0; k < 2; ++k) {
        const ModelBundle m = c.build();
        const VerificationReport r = flags_checks(m, c.nmax);
        if (k == 0) o.note(r.passed(), c.name + ": " + summary(r));
        else if (!r.passed()) o.note(false, c.name + " second tuple: " + summary(r));
        list_failures(o, r);
      }
    }
    // Negative control: (1,1) is not a flag of h_G2. Level 1 survives because every second-order
    // term kills linear polynomials; the first leak is at level 2.
    const ModelBundle g = build_g2(Rational(1, 3), Rational(2, 5));
    int level = -1;
    std::string witness;
    for (int n = 0; n <= 4 && level < 0; ++n) {
      const FlagCheck fc = preserves_flag(g.h, FlagSpace(2, CharVector({1, 1}), n));
      if (!fc.preserved && fc.witness) {
        level = n;
        witness = to_string(fc.witness->input) + " -> " + to_string(fc.witness->output);
      }
    }
    o.note(level == 2, "g2 leaves the (1,1) flag first at level " + std::to_string(level) + ": " + witness);
    return o;
  });

  criterion("AC3", "BC1 eigenpolynomials proportional to Jacobi polynomials, p <= 10", [] {
    Outcome o;
    for (int k = 0; k < 5; ++k) {
      const Rational nu2 = positive(), nu3 = positive();
      const SpectrumRecord rec = spectrum(build_bc1(nu2, nu3), 10);
      bool ok = true;
      for (int p = 0; p <= 10; ++p)
        ok = ok && proportionality(rec.entries[p].eigenpolys.front(),
                                   jacobi_reference(p, nu2 + nu3 - Rational(1, 2), nu2 - Rational(1, 2)))
                       .has_value();
      o.note(ok, "nu2=" + to_string(nu2) + " nu3=" + to_string(nu3));
    }
    return o;
  });

  criterion("AC4", "hidden algebras: structure, decompositions, printed words", [] {
    Outcome o;
    bool gl = true;
    for (int n = 0; n <= 5; ++n) {
      gl = gl && check_structure(gl2_generators(n)).passed();
      for (int d = 1; d <= 4; ++d) gl = gl && check_structure(gln_generators(d, n)).passed();
    }
    o.note(gl, "gl2 and gl(d+1) closure, d <= 4, n <= 5");
    for (int n = 0; n <= 3; ++n) {
      const StructureReport r = check_structure(g2_algebra_generators(n));
      o.note(r.passed(), "g2 algebra at n=" + std::to_string(n) + ": " + std::to_string(r.checks.size()) + " properties");
    }
    const ModelSpec p = default_parameters();
    std::vector<ModelBundle> models{build_bc1(p.nu2, p.nu3),
                                    build_bc1_qes(p.nu2, p.nu3, p.b, 3),
                                    build_sutherland(2, p.nu),
                                    build_sutherland(3, p.nu),
                                    build_sutherland(4, p.nu),
                                    build_bcn(1, p.nu, p.nu2, p.nu3),
                                    build_bcn(2, p.nu, p.nu2, p.nu3),
                                    build_bcn(3, p.nu, p.nu2, p.nu3),
                                    build_g2(p.nu, p.mu)};
    for (const auto& m : models) {
      const VerificationReport r = algebra_checks(m);
      o.note(r.passed(), model_tag(m.spec) + ": " + summary(r));
      list_failures(o, r);
      for (const auto& c : r.checks)
        if (c.status == CheckStatus::ReportedOffset) o.lines.push_back("  " + c.name + ": " + c.detail);
    }
    return o;
  });

  criterion("AC5", "pi-integral commutators annihilate the level-n flag, n <= 6", [] {
    Outcome o;
    const ModelSpec p = default_parameters();
    std::vector<ModelBundle> models{build_bc1(p.nu2, p.nu3),        build_sutherland(2, p.nu),
                                    build_sutherland(3, p.nu),      build_sutherland(4, p.nu),
                                    build_bcn(1, p.nu, p.nu2, p.nu3), build_bcn(2, p.nu, p.nu2, p.nu3),
                                    build_bcn(3, p.nu, p.nu2, p.nu3), build_g2(p.nu, p.mu)};
    for (int n = 0; n <= 6; ++n) models.push_back(build_bc1_qes(p.nu2, p.nu3, p.b, n));
    for (const auto& m : models) {
      const VerificationReport r = pi_checks(m, 6);
      o.note(r.passed(), model_tag(m.spec) + ": " + summary(r));
      list_failures(o, r);
    }
    return o;
  });

  criterion("AC6", "gauge rotation of the printed rational forms", [] {
    Outcome o;
    const ModelSpec p = default_parameters();
    std::vector<ModelBundle> models{build_bc1(p.nu2, p.nu3), build_bcn(2, p.nu, p.nu2, p.nu3),
                                    build_bcn(3, p.nu, p.nu2, p.nu3), build_bc1_qes(p.nu2, p.nu3, p.b, 2)};
    for (const auto& m : models) {
      const VerificationReport printed = gauge_checks(m, Formula::Printed);
      o.note(printed.passed(), model_tag(m.spec) + " printed form: " + summary(printed));
      list_failures(o, printed);
      for (const auto& c : printed.checks)
        if (c.status == CheckStatus::ReportedOffset) o.lines.push_back("  " + c.name + ": " + c.detail);
      if (m.spec.family == Family::BCN) {
        const VerificationReport derived = gauge_checks(m, Formula::Corrected);
        o.lines.push_back(std::string(derived.passed() ? "     " : "FAIL ") + model_tag(m.spec) +
                          " derived form: " + summary(derived));
        o.ok = o.ok && derived.passed();
      }
    }
    return o;
  });

  criterion("AC7", "QES operators preserve exactly one level, n <= 6", [] {
    Outcome o;
    for (const Rational b : {Rational(1, 2), Rational(-3, 4), Rational(5)})
      for (int n = 0; n <= 6; ++n) {
        const ModelBundle m = build_bc1_qes(positive(), positive(), b, n);
        const VerificationReport r = flags_checks(m, n);
        if (!r.passed()) list_failures(o, r);
        o.ok = o.ok && r.passed();
        if (n == 6) o.lines.push_back("     b=" + to_string(b) + " n=6: " + r.checks.front().detail);
      }
    o.lines.insert(o.lines.begin(), std::string(o.ok ? "ok   " : "FAIL ") + "21 operators, b in {1/2, -3/4, 5}");
    return o;
  });

  criterion("AC8", "Cartesian finite-difference oracle", [] {
    Outcome o;
    RunConfig cfg;
    cfg.model = default_parameters();
    cfg.suite = "cartesian";
    cfg.samples = 50;
    const VerificationReport r = run_suite(cfg);
    for (const auto& spec : default_models("cartesian", cfg.model)) {
      const std::string prefix = "cartesian/" + model_tag(spec) + "/";
      VerificationReport part;
      for (const auto& c : r.checks)
        if (c.name.rfind(prefix, 0) == 0) part.add(c);
      o.note(part.passed(), model_tag(spec) + ": " + summary(part));
      list_failures(o, part);
    }
    for (const auto& c : r.checks)
      if (c.name.find("free-particle") != std::string::npos || c.name.find("a2-discriminant") != std::string::npos ||
          c.name.find("fit/kappa") != std::string::npos)
        o.lines.push_back("  " + c.name + ": " + c.detail);
    return o;
  });

  criterion("AC9", "TTW ground states as printed, and parameter degenerations", [] {
    Outcome o;
    RunConfig cfg;
    cfg.model = default_parameters();
    cfg.formula = Formula::Printed;
    const VerificationReport printed = ttw_checks(cfg);
    for (const auto& c : printed.checks) o.note(c.status != CheckStatus::Fail, c.name + ": " + c.detail);
    cfg.formula = Formula::Corrected;
    const VerificationReport derived = ttw_checks(cfg);
    for (const auto& c : derived.checks)
      o.lines.push_back(std::string(c.status != CheckStatus::Fail ? "     " : "FAIL ") + c.name + ": " + c.detail);
    o.ok = o.ok && derived.passed();
    return o;
  });

  criterion("AC10", "BC1 orthogonality under the ground-state weight, p, q <= 8", [] {
    Outcome o;
    const std::pair<Rational, Rational> tuples[] = {
        {Rational(1, 3), Rational(2, 5)}, {Rational(1), Rational(2)}, {Rational(3, 4), Rational(1, 7)}};
    for (const auto& [nu2, nu3] : tuples) {
      const OrthogonalityResult r = orthogonality_check(nu2, nu3, 8);
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.2e", r.max_offdiag);
      o.note(r.max_offdiag <= 1e-10 && r.min_diag > 0,
             "nu2=" + to_string(nu2) + " nu3=" + to_string(nu3) + ": max normalized off-diagonal " + buf);
    }
    return o;
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
