#include "orbitforms/models.hpp"

#include "orbitforms/algebra.hpp"

#include <algorithm>
#include <map>

namespace orbit {

namespace {

MultiPoly var(int d, int i) { return MultiPoly::variable(d, i); }
MultiPoly cst(int d, const Rational& c) { return MultiPoly(d, c); }

Monomial unit(int d, int i) {
  Monomial m(d, 0);
  m[i] = 1;
  return m;
}

Monomial pair_index(int d, int i, int j) {
  Monomial m(d, 0);
  ++m[i];
  ++m[j];
  return m;
}

std::vector<std::string> tau_names(int d) {
  if (d == 1) return {"t"};
  std::vector<std::string> v;
  for (int i = 1; i <= d; ++i) v.push_back("t" + std::to_string(i));
  return v;
}

// τ_k with τ_0 = 1, τ_N = 1 when top_is_one, and 0 outside [0, N].
struct TauSeq {
  int d, N;
  bool top_is_one;
  MultiPoly operator()(int k) const {
    if (k == 0 || (top_is_one && k == N)) return cst(d, 1);
    if (k < 0 || k > N) return MultiPoly(d);
    return var(d, k - 1);
  }
};

// Σ A_ij ∂_i∂_j as printed: both (i,j) and (j,i) land on the same derivative key.
PolyOp assemble(int d, const std::vector<std::vector<MultiPoly>>& A, const std::vector<MultiPoly>& B) {
  PolyOp h(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) h.add_term(pair_index(d, i, j), A[i][j]);
  for (int i = 0; i < d; ++i) h.add_term(unit(d, i), B[i]);
  return h;
}

RationalFn frac(const MultiPoly& n, const MultiPoly& d) { return RationalFn(n, d); }

RatOp with_potential(const PolyOp& laplacian, const RationalFn& w) {
  RatOp op = to_rational(laplacian);
  op.add_term(Monomial(laplacian.nvars(), 0), w);
  return op;
}

PolyOp bcn_operator(int N, const Rational& nu, const Rational& nu2, const Rational& nu3) {
  const int d = N;
  TauSeq T{d, N, false};
  std::vector<std::vector<MultiPoly>> A(d, std::vector<MultiPoly>(d, MultiPoly(d)));
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      MultiPoly s = Rational(-N) * (T(i - 1) * T(j - 1));
      for (int l = 0; l <= 2 * N + 2; ++l) {
        s += Rational(i - l) * (T(i - l) * T(j + l));
        s += Rational(l + j - 1) * (T(i - l - 1) * T(j + l - 1));
        s -= Rational(i - 2 - l) * (T(i - 2 - l) * T(j + l));
        s -= Rational(l + j + 1) * (T(i - l - 1) * T(j + l + 1));
      }
      A[i - 1][j - 1] = s;
    }
  std::vector<MultiPoly> B(d, MultiPoly(d));
  for (int i = 1; i <= N; ++i) {
    B[i - 1] = (1 + nu * (2 * N - i - 1) + 2 * nu2 + nu3) * i * T(i) - nu3 * (i - N - 1) * T(i - 1) +
               nu * ((N - i + 1) * (N - i + 2)) * T(i - 2);
  }
  return assemble(d, A, B);
}

MultiPoly alternating_sum(int d, bool alternate) {
  MultiPoly s = cst(d, 1);
  for (int k = 1; k <= d; ++k) s += Rational(alternate && (k % 2) ? -1 : 1) * var(d, k - 1);
  return s;
}

MultiPoly bc2_discriminant() {
  MultiPoly t1 = var(2, 0), t2 = var(2, 1);
  return t1 * t1 - Rational(4) * t2;
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::BC1: return "bc1";
    case Family::BC1_QES: return "bc1_qes";
    case Family::Sutherland: return "sutherland";
    case Family::BCN: return "bcn";
    case Family::G2: return "g2";
    case Family::MW: return "mw";
    case Family::TTW: return "ttw";
    case Family::TTWQesRadial: return "ttw_qes_radial";
    case Family::TTWQesAngular: return "ttw_qes_angular";
    case Family::TTWQesFull: return "ttw_qes_full";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  static const std::map<std::string, Family> names = {
      {"bc1", Family::BC1},
      {"bc1_qes", Family::BC1_QES},
      {"qes", Family::BC1_QES},
      {"sutherland", Family::Sutherland},
      {"bcn", Family::BCN},
      {"g2", Family::G2},
      {"mw", Family::MW},
      {"ttw", Family::TTW},
      {"ttw_qes_radial", Family::TTWQesRadial},
      {"ttw_qes_angular", Family::TTWQesAngular},
      {"ttw_qes_full", Family::TTWQesFull}};
  auto it = names.find(s);
  if (it == names.end()) throw UnsupportedModel("unknown model family '" + s + "'");
  return it->second;
}

bool ModelBundle::exactly_solvable() const {
  switch (spec.family) {
    case Family::BC1:
    case Family::Sutherland:
    case Family::BCN:
    case Family::G2: return true;
    default: return false;
  }
}

Rational coupling_g(const Rational& nu) { return nu * (nu - 1); }
Rational coupling_g2(const Rational& nu2) { return nu2 * (nu2 - 1); }
Rational coupling_g3(const Rational& nu2, const Rational& nu3) { return nu3 * (nu3 + 2 * nu2 - 1); }
Rational coupling_g1(const Rational& mu) { return 3 * mu * (mu - 1); }

MultiPoly a2_discriminant() {
  MultiPoly t1 = var(2, 0), t2 = var(2, 1);
  return Rational(4) * t1.pow(3) + Rational(4) * t2.pow(3) - Rational(18) * t1 * t2 - t1 * t1 * t2 * t2 +
         cst(2, 27);
}

MultiPoly bc3_discriminant(bool printed) {
  MultiPoly t1 = var(3, 0), t2 = var(3, 1), t3 = var(3, 2);
  MultiPoly D = t1 * t1 * t2 * t2 - Rational(4) * t1.pow(3) * t3 - Rational(27) * t3 * t3 +
                Rational(18) * t1 * t2 * t3;
  return D - Rational(4) * (printed ? t2 * t2 : t2.pow(3));
}

ModelBundle build_bc1(const Rational& nu2, const Rational& nu3) {
  const int d = 1;
  MultiPoly t = var(d, 0);
  ModelBundle m;
  m.spec.family = Family::BC1;
  m.spec.nu2 = nu2;
  m.spec.nu3 = nu3;
  m.names = tau_names(d);
  m.h = PolyOp(d);
  m.h.add_term({2}, t * t - cst(d, 1));
  m.h.add_term({1}, (2 * nu2 + nu3 + 1) * t + cst(d, nu3));
  m.flags.push_back({CharVector({1}), "P_n"});

  GaugeFactor F(d);
  F.times(cst(d, 1) + t, nu2 / 2).times(cst(d, 1) - t, (nu2 + nu3) / 2);
  m.psi0 = F;
  const Rational s = nu2 + nu3 / 2;
  m.e0_printed = -s * s;
  m.e0_derived = s * s;
  m.kappa = 1;

  const Rational g2 = coupling_g2(nu2), g3 = coupling_g3(nu2, nu3);
  PolyOp lap(d);
  lap.add_term({2}, t * t - cst(d, 1));
  lap.add_term({1}, t);
  RationalFn V = frac(cst(d, g2), Rational(2) * (cst(d, 1) + t)) + frac(cst(d, g2 + g3), Rational(2) * (cst(d, 1) - t));
  m.rational_forms.push_back({"printed", with_potential(lap, V), V, F, "kinetic sign +Delta_g"});
  return m;
}

ModelBundle build_bc1_qes(const Rational& nu2, const Rational& nu3, const Rational& b, int n) {
  if (n < 0) throw DomainError("QES level must be non-negative");
  const int d = 1;
  ModelBundle m = build_bc1(nu2, nu3);
  MultiPoly t = var(d, 0);
  m.spec.family = Family::BC1_QES;
  m.spec.b = b;
  m.spec.n = n;
  m.h.add_term({1}, (2 * b) * (t * t - cst(d, 1)));
  m.h.add_term({0}, Rational(-2 * n) * b * t + cst(d, 2 * b * (n + nu2 + nu3 + Rational(1, 2))));
  m.flags = {{CharVector({1}), "P_n (single level)"}};
  m.e0_printed.reset();

  const Rational g2 = coupling_g2(nu2), g3 = coupling_g3(nu2, nu3);
  PolyOp lap(d);
  lap.add_term({2}, t * t - cst(d, 1));
  lap.add_term({1}, t);
  const MultiPoly one_m_t2 = cst(d, 1) - t * t;
  RationalFn V = frac(cst(d, g2), one_m_t2) + frac(cst(d, g3), Rational(2) * (cst(d, 1) - t)) +
                 RationalFn(b * b * one_m_t2) + RationalFn(b * (2 * n + 2 * nu2 + nu3 + 1) * (cst(d, 1) - t));
  m.rational_forms.clear();
  for (int sign : {+1, -1}) {
    GaugeFactor F = *m.psi0;
    F.times_exp(Rational(sign) * b * t);
    m.rational_forms.push_back({sign > 0 ? "exp(+b t)" : "exp(-b t)", with_potential(lap, V), V, F,
                                "ground factor Psi0 * exp(" + std::string(sign > 0 ? "+" : "-") + "b t)"});
  }
  m.psi0->times_exp(b * t);
  return m;
}

ModelBundle build_sutherland(int N, const Rational& nu) {
  if (N < 2) throw DomainError("Sutherland model needs N >= 2");
  const int d = N - 1;
  TauSeq T{d, N, true};
  std::vector<std::vector<MultiPoly>> A(d, std::vector<MultiPoly>(d, MultiPoly(d)));
  for (int i = 1; i < N; ++i)
    for (int j = 1; j < N; ++j) {
      MultiPoly s = Rational((N - i) * j, N) * (T(i) * T(j));
      // τ vanishes outside [0, N], which bounds l.
      for (int l = std::max(1, j - i); l <= std::min(N - i, j); ++l) s += Rational(j - i - 2 * l) * (T(i + l) * T(j - l));
      A[i - 1][j - 1] = s;
    }
  std::vector<MultiPoly> B(d, MultiPoly(d));
  for (int i = 1; i < N; ++i) B[i - 1] = (Rational(1, N) + nu) * (i * (N - i)) * T(i);

  ModelBundle m;
  m.spec.family = Family::Sutherland;
  m.spec.N = N;
  m.spec.nu = nu;
  m.names = tau_names(d);
  m.h = assemble(d, A, B);
  m.flags.push_back({CharVector::ones(d), "P_n"});
  m.kappa = Rational(1, 2);
  if (N == 3) {
    GaugeFactor F(d);
    F.times(a2_discriminant(), nu / 2);
    m.psi0 = F;
  }
  return m;
}

ModelBundle build_bcn(int N, const Rational& nu, const Rational& nu2, const Rational& nu3) {
  if (N < 1) throw DomainError("BC_N model needs N >= 1");
  const int d = N;
  ModelBundle m;
  m.spec.family = Family::BCN;
  m.spec.N = N;
  m.spec.nu = nu;
  m.spec.nu2 = nu2;
  m.spec.nu3 = nu3;
  m.names = tau_names(d);
  m.h = bcn_operator(N, nu, nu2, nu3);
  m.flags.push_back({CharVector::ones(d), "P_n"});
  m.kappa = Rational(1, 2);

  const Rational g = coupling_g(nu), g2 = coupling_g2(nu2), g3 = coupling_g3(nu2, nu3);
  const MultiPoly plus = alternating_sum(d, false), minus = alternating_sum(d, true);
  const PolyOp lap = bcn_operator(N, 0, 0, 0);
  auto factor = [&](const MultiPoly& disc) {
    GaugeFactor F(d);
    if (N > 1) F.times(disc, nu / 2);
    F.times(plus, nu2 / 2).times(minus, (nu2 + nu3) / 2);
    return F;
  };

  if (N == 1) {
    m.psi0 = factor(MultiPoly(d));
  } else if (N == 2) {
    MultiPoly t1 = var(d, 0), t2 = var(d, 1);
    const MultiPoly D = bc2_discriminant();
    RationalFn pair = frac(g * (cst(d, 1) - t2), D);
    RationalFn printed = pair + frac((g2 / 4) * (cst(d, 2) - t1), plus) +
                         frac(Rational(1, 4) * (cst(d, 2 * (g2 + g3)) + g2 * t1 - g3 * t2), minus);
    RationalFn derived = pair + frac((g2 / 4) * (cst(d, 2) + t1), plus) +
                         frac(((g2 + g3) / 4) * (cst(d, 2) - t1), minus);
    m.psi0 = factor(D);
    m.rational_forms.push_back({"printed", with_potential(lap, printed * Rational(2)), printed, *m.psi0,
                                "potential as printed, Delta_A + 2V"});
    m.rational_forms.push_back({"derived", with_potential(lap, derived * Rational(2)), derived, *m.psi0,
                                "potential from the Cartesian Hamiltonian, Delta_A + 2V"});
  } else if (N == 3) {
    MultiPoly t1 = var(d, 0), t2 = var(d, 1), t3 = var(d, 2);
    const MultiPoly num = t1.pow(4) - t1.pow(3) * t3 - Rational(6) * t1 * t1 * t2 + Rational(9) * t1 * t2 * t3 +
                          Rational(9) * t2 * t2 - t2.pow(3) - Rational(27) * t3 * t3;
    const MultiPoly Dp = bc3_discriminant(true), D = bc3_discriminant(false);
    const MultiPoly sp = cst(d, 3) + Rational(2) * t1 + t2, sm = cst(d, 3) - Rational(2) * t1 + t2;
    RationalFn printed = frac(g * num, Dp) + frac((g2 / 2) * sp, plus) + frac(((g2 + 4 * g3) / 4) * sm, minus);
    RationalFn derived = frac(g * num, D) + frac((g2 / 4) * sp, plus) + frac(((g2 + g3) / 4) * sm, minus);
    m.psi0 = factor(D);
    m.rational_forms.push_back({"printed", with_potential(lap, printed * Rational(2)), printed, factor(Dp),
                                "potential and ground factor as printed, Delta_A + 2V"});
    m.rational_forms.push_back({"derived", with_potential(lap, derived * Rational(2)), derived, *m.psi0,
                                "potential from the Cartesian Hamiltonian, Delta_A + 2V"});
  }
  return m;
}

ModelBundle build_g2(const Rational& nu, const Rational& mu) {
  const int d = 2;
  MultiPoly t1 = var(d, 0), t2 = var(d, 1);
  ModelBundle m;
  m.spec.family = Family::G2;
  m.spec.nu = nu;
  m.spec.mu = mu;
  m.names = tau_names(d);
  m.h = PolyOp(d);
  m.h.add_term({2, 0}, -(cst(d, 4) + t1 + Rational(1, 3) * t2 - Rational(1, 3) * t1 * t1));
  m.h.add_term({1, 1}, cst(d, 12) + Rational(4) * t2 + t1 * t2 - Rational(2) * t1 * t1);
  m.h.add_term({0, 2}, Rational(9) * t1 + Rational(3) * t2 + Rational(3) * t1 * t2 + t2 * t2 - t1.pow(3));
  m.h.add_term({1, 0}, cst(d, 2 * nu) + ((1 + 3 * mu + 2 * nu) / 3) * t1);
  m.h.add_term({0, 1}, cst(d, 6 * mu) + (1 + 2 * mu + nu) * t2 + (2 * nu) * t1);
  m.flags = {{CharVector({1, 2}), "trigonometric minimal"},
             {CharVector({3, 5}), "integer Weyl"},
             {CharVector({5, 9}), "integer co-Weyl"}};
  m.kappa = 3;
  return m;
}

ModelBundle build_model(const ModelSpec& s) {
  ModelBundle m;
  switch (s.family) {
    case Family::BC1: m = build_bc1(s.nu2, s.nu3); break;
    case Family::BC1_QES: m = build_bc1_qes(s.nu2, s.nu3, s.b, s.n); break;
    case Family::Sutherland: m = build_sutherland(s.N, s.nu); break;
    case Family::BCN: m = build_bcn(s.N, s.nu, s.nu2, s.nu3); break;
    case Family::G2: m = build_g2(s.nu, s.mu); break;
    case Family::MW: {
      auto r = mw_reference(s.variant, s.n);
      m = build_bc1_qes(r.nu2, r.nu3, s.b, r.n);
      m.spec.family = Family::MW;
      m.h = build_mw_family(s.variant, s.b, s.n);
      break;
    }
    default: throw UnsupportedModel("family " + to_string(s.family) + " has no algebraic form");
  }
  m.spec = s;
  return m;
}

MwReference mw_reference(const std::string& variant, int n) {
  if (variant == "0+") return {0, 0, n};
  if (variant == "0-") return {1, 0, n - 1};
  if (variant == "1-") return {0, 1, n};
  if (variant == "1+") return {1, -1, n};
  throw UnsupportedModel("unknown MW variant '" + variant + "'");
}

PolyOp build_mw_family(const std::string& variant, const Rational& b, int n) {
  if (n < 0) throw DomainError("MW level must be non-negative");
  const int level = mw_word_level(variant, n);
  if (level < 0) throw DomainError("MW variant 0- needs n >= 1");
  return evaluate_word(gl2_generators(level), printed_mw_word(variant, b, n));
}

Rational eigenvalue_formula(const ModelBundle& model, const Monomial& p, Formula which) {
  const auto& s = model.spec;
  if (static_cast<int>(p.size()) != model.dim()) throw DimensionError("quantum number has wrong length");
  const bool printed = which == Formula::Printed;
  switch (s.family) {
    case Family::BC1: return Rational(p[0]) * p[0] + (2 * s.nu2 + s.nu3) * p[0];
    case Family::Sutherland: {
      const int N = s.N;
      Rational e = 0;
      for (int i = 1; i < N; ++i) e += s.nu * N * (i * (N - i)) * p[i - 1];
      for (int i = 1; i < N; ++i)
        for (int j = 1; j < N; ++j) {
          const int w = printed ? (N - i) * j : (N - std::max(i, j)) * std::min(i, j);
          e += Rational(w) * p[i - 1] * p[j - 1];
        }
      return e / N;
    }
    case Family::BCN: {
      const int N = s.N;
      Rational e = 0;
      for (int i = 1; i <= N; ++i) e += (s.nu * (2 * N - i - 1) + 2 * s.nu2 + s.nu3) * i * p[i - 1];
      for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) e += Rational(printed ? i : std::min(i, j)) * p[i - 1] * p[j - 1];
      return e;
    }
    case Family::G2: {
      const Rational p1 = p[0], p2 = p[1];
      const Rational lin1 = printed ? s.mu + s.nu : s.mu + 2 * s.nu / 3;
      return p1 * p1 / 3 + p1 * p2 + p2 * p2 + lin1 * p1 + (2 * s.mu + s.nu) * p2;
    }
    default: throw UnsupportedModel("no closed eigenvalue formula for " + to_string(s.family));
  }
}

const std::vector<TableRow>& char_vector_table() {
  static const std::vector<TableRow> rows = [] {
    std::vector<TableRow> r;
    auto row = [&](const std::string& model, std::vector<std::vector<int>> cols) {
      static const char* names[] = {"rational", "trigonometric minimal", "integer Weyl", "integer co-Weyl"};
      for (std::size_t c = 0; c < cols.size(); ++c)
        if (!cols[c].empty()) r.push_back({model, names[c], cols[c], to_string(CharVector(cols[c]))});
    };
    row("G2", {{1, 2}, {1, 2}, {3, 5}, {5, 9}});
    row("F4", {{1, 2, 2, 3}, {1, 2, 2, 3}, {8, 11, 15, 21}, {11, 16, 21, 30}});
    row("E6", {{1, 1, 2, 2, 2, 3}, {1, 1, 2, 2, 2, 3}, {8, 8, 11, 15, 15, 21}, {8, 8, 11, 15, 15, 21}});
    row("E7", {{1, 2, 2, 2, 3, 3, 4}, {1, 2, 2, 2, 3, 3, 4}, {27, 34, 49, 52, 66, 75, 96}, {27, 34, 49, 52, 66, 75, 96}});
    row("E8", {{1, 3, 5, 5, 7, 7, 9, 11},
               {2, 2, 3, 3, 4, 4, 5, 6},
               {29, 46, 57, 68, 84, 91, 110, 135},
               {29, 46, 57, 68, 84, 91, 110, 135}});
    row("H3", {{1, 2, 3}});
    row("H4", {{1, 5, 8, 12}});
    // Rank-generic rows: (1,…,1) of length N, and (1,k) for the dihedral family.
    for (const char* model : {"A_N", "BC_N"})
      for (const char* col : {"rational", "trigonometric minimal"}) r.push_back({model, col, {}, "(1,...,1)"});
    r.push_back({"I2(k)", "rational", {}, "(1,k)"});
    return r;
  }();
  return rows;
}

std::vector<int> char_vector_instance(const TableRow& row, int rank) {
  if (!row.vector.empty()) return row.vector;
  if (row.text == "(1,...,1)") return std::vector<int>(rank, 1);
  if (row.text == "(1,k)") return {1, rank};
  return {};
}

std::optional<std::vector<int>> char_vector_lookup(const std::string& model, const std::string& column) {
  for (const auto& r : char_vector_table())
    if (r.model == model && r.column == column) return r.vector;
  return std::nullopt;
}

}  // namespace orbit
