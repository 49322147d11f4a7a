#include "orbitforms/algebra.hpp"

#include "orbitforms/linsolve.hpp"

#include <map>
#include <sstream>

namespace orbit {

namespace {

PolyOp mul(const MultiPoly& c) { return PolyOp::multiplication(c); }
MultiPoly var(int d, int i) { return MultiPoly::variable(d, i); }

int max_shift(const PolyOp& op, const CharVector& f) {
  int s = -1000000;
  for (const auto& [alpha, c] : op.terms())
    for (const auto& [m, q] : c.terms()) s = std::max(s, f.degree(m) - f.degree(alpha));
  return s;
}

Role role_of(const PolyOp& op, const CharVector& f) {
  if (op.order() == 0) return Role::Central;
  const int s = max_shift(op, f);
  return s > 0 ? Role::Raising : s < 0 ? Role::Lowering : Role::Cartan;
}

void finish(GeneratorSet& gs) {
  for (auto& g : gs.gens) g.role = role_of(g.op, gs.f);
}

using Key = std::pair<Monomial, Monomial>;  // (derivative index, coefficient monomial)

struct KeyIndex {
  std::map<Key, int> index;
  int of(const Key& k) {
    auto [it, fresh] = index.try_emplace(k, static_cast<int>(index.size()));
    return it->second;
  }
};

void collect_keys(const PolyOp& op, KeyIndex& K) {
  for (const auto& [alpha, c] : op.terms())
    for (const auto& [m, q] : c.terms()) K.of({alpha, m});
}

RationalMatrix column(const PolyOp& op, KeyIndex& K, int rows) {
  RationalMatrix v = RationalMatrix::Zero(rows, 1);
  for (const auto& [alpha, c] : op.terms())
    for (const auto& [m, q] : c.terms()) v(K.of({alpha, m}), 0) = q;
  return v;
}

// Solves target = Σ x_k basis[k] exactly.
std::optional<std::vector<Rational>> express(const PolyOp& target, const std::vector<PolyOp>& basis) {
  KeyIndex K;
  collect_keys(target, K);
  for (const auto& b : basis) collect_keys(b, K);
  const int rows = static_cast<int>(K.index.size());
  RationalMatrix A(rows, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) A.col(k) = column(basis[k], K, rows);
  auto x = solve(A, column(target, K, rows));
  if (!x) return std::nullopt;
  std::vector<Rational> out(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) out[k] = (*x)(k, 0);
  return out;
}

std::optional<Rational> proportional(const PolyOp& a, const PolyOp& b) {
  if (b.is_zero()) return std::nullopt;
  const auto& [alpha, c] = *b.terms().begin();
  const auto& [m, q] = *c.terms().begin();
  const Rational s = a.coeff(alpha).coeff(m) / q;
  if (s == 0 || !(a == s * b)) return std::nullopt;
  return s;
}

PropertyCheck flag_invariance(const GeneratorSet& gs) {
  PropertyCheck pc{"flag invariance", true, ""};
  FlagSpace V(gs.d, gs.f, gs.n);
  for (const auto& g : gs.gens) {
    auto r = preserves_flag(g.op, V);
    if (!r.preserved) {
      pc.passed = false;
      pc.detail += g.name + " maps " + to_string(r.witness->input) + " to " + to_string(r.witness->output) + "; ";
    }
  }
  if (pc.passed) pc.detail = std::to_string(gs.gens.size()) + " generators preserve level " + std::to_string(gs.n);
  return pc;
}

PropertyCheck closure(const std::string& name, const std::vector<const Generator*>& gens, bool with_identity) {
  PropertyCheck pc{name, true, ""};
  std::vector<PolyOp> basis;
  const int d = gens.front()->op.nvars();
  for (auto* g : gens) basis.push_back(g->op);
  if (with_identity) basis.push_back(PolyOp::identity(d));
  int count = 0;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      ++count;
      if (!express(commutator(gens[i]->op, gens[j]->op), basis)) {
        pc.passed = false;
        pc.detail += "[" + gens[i]->name + "," + gens[j]->name + "] leaves the span; ";
      }
    }
  if (pc.passed) pc.detail = std::to_string(count) + " commutators close";
  return pc;
}

PropertyCheck relation(const std::string& name, const PolyOp& lhs, const PolyOp& rhs) {
  const bool ok = lhs == rhs;
  return {name, ok, ok ? "exact" : "difference " + to_string(lhs - rhs)};
}

// ρ(E_ab) for the gl(d+1) realisation; index 0 is the homogenising coordinate.
PolyOp matrix_unit(const GeneratorSet& gs, int a, int b) {
  const std::string s = std::to_string(a), t = std::to_string(b);
  if (a == 0 && b == 0) return Rational(-1) * gs.op("J0");
  if (a == 0) return gs.op("Jm" + t);
  if (b == 0) return Rational(-1) * gs.op("Jp" + s);
  return gs.op("J" + s + "_" + t);
}

PropertyCheck gln_structure_constants(const GeneratorSet& gs) {
  PropertyCheck pc{"gl(d+1) structure constants", true, ""};
  const int D = gs.d + 1;
  std::vector<std::vector<PolyOp>> E(D, std::vector<PolyOp>(D));
  for (int a = 0; a < D; ++a)
    for (int b = 0; b < D; ++b) E[a][b] = matrix_unit(gs, a, b);
  int count = 0;
  for (int a = 0; a < D; ++a)
    for (int b = 0; b < D; ++b)
      for (int c = 0; c < D; ++c)
        for (int e = 0; e < D; ++e) {
          PolyOp expect(gs.d);
          if (b == c) expect += E[a][e];
          if (e == a) expect -= E[c][b];
          ++count;
          if (!(commutator(E[a][b], E[c][e]) == expect)) {
            pc.passed = false;
            pc.detail = "[E" + std::to_string(a) + std::to_string(b) + ",E" + std::to_string(c) + std::to_string(e) +
                        "] mismatch";
            return pc;
          }
        }
  pc.detail = std::to_string(count) + " brackets match [E_ab,E_cd] = d_bc E_ad - d_da E_cb";
  return pc;
}

// A diagonal W with W·T = Rᵀ·W on the flag space, every diagonal entry nonzero.
PropertyCheck conjugation_pair(const GeneratorSet& gs, const std::string& r, const std::string& t) {
  PropertyCheck pc{"conjugation " + r + " <-> " + t, false, ""};
  FlagSpace V(gs.d, gs.f, gs.n);
  const RationalMatrix R = restrict_to_flag(gs.op(r), V).m, T = restrict_to_flag(gs.op(t), V).m;
  const int n = V.size();
  RationalMatrix sys = RationalMatrix::Zero(n * n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      sys(a * n + b, a) += T(a, b);
      sys(a * n + b, b) -= R(b, a);
    }
  const RationalMatrix K = kernel(sys);
  if (K.cols() == 0) {
    pc.detail = "no nonzero diagonal solution";
    return pc;
  }
  for (int trial = 1; trial <= 8 && !pc.passed; ++trial) {
    RationalMatrix w = RationalMatrix::Zero(n, 1);
    for (Eigen::Index k = 0; k < K.cols(); ++k) w += Rational(1 + trial * k + k * k) * K.col(k);
    bool all = true;
    for (int i = 0; i < n; ++i) all = all && w(i, 0) != 0;
    if (all) {
      pc.passed = true;
      pc.detail = "diagonal W of size " + std::to_string(n) + ", kernel dimension " + std::to_string(K.cols());
    }
  }
  if (!pc.passed) pc.detail = "every diagonal solution has a zero entry";
  return pc;
}

}  // namespace

const Generator& GeneratorSet::get(const std::string& nm) const {
  for (const auto& g : gens)
    if (g.name == nm) return g;
  throw UnknownGenerator("unknown generator '" + nm + "' in " + name);
}

bool StructureReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

GeneratorSet gl2_generators(int n) {
  if (n < 0) throw DomainError("representation parameter must be non-negative");
  GeneratorSet gs{"gl2", 1, n, CharVector({1}), {}};
  const MultiPoly t = var(1, 0);
  const PolyOp D = PolyOp::partial(1, 0);
  const PolyOp J0 = compose(mul(t), D) - PolyOp::constant(1, n);
  gs.gens = {{"Jm", D, Role::Lowering},
             {"J0", J0, Role::Cartan},
             {"T0", PolyOp::identity(1), Role::Central},
             {"Jp", compose(mul(t), J0), Role::Raising}};
  finish(gs);
  return gs;
}

GeneratorSet gln_generators(int d, int n) {
  if (d < 1 || n < 0) throw DomainError("gl(d+1) needs d >= 1 and n >= 0");
  GeneratorSet gs{"gln", d, n, CharVector::ones(d), {}};
  PolyOp euler(d);
  for (int i = 0; i < d; ++i) euler += compose(mul(var(d, i)), PolyOp::partial(d, i));
  const PolyOp J0 = euler - PolyOp::constant(d, n);
  for (int i = 1; i <= d; ++i) gs.gens.push_back({"Jm" + std::to_string(i), PolyOp::partial(d, i - 1), Role::Lowering});
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      gs.gens.push_back({"J" + std::to_string(i) + "_" + std::to_string(j),
                         compose(mul(var(d, i - 1)), PolyOp::partial(d, j - 1)), Role::Cartan});
  gs.gens.push_back({"J0", J0, Role::Cartan});
  for (int i = 1; i <= d; ++i) gs.gens.push_back({"Jp" + std::to_string(i), compose(mul(var(d, i - 1)), J0), Role::Raising});
  finish(gs);
  return gs;
}

GeneratorSet g2_algebra_generators(int n) {
  if (n < 0) throw DomainError("representation parameter must be non-negative");
  GeneratorSet gs{"g2", 2, n, CharVector({1, 2}), {}};
  const MultiPoly t = var(2, 0), u = var(2, 1);
  const PolyOp Dt = PolyOp::partial(2, 0), Du = PolyOp::partial(2, 1);
  const Rational third = Rational(n, 3);
  auto euler = [&](int k) {
    return compose(mul(t), Dt) + Rational(2) * compose(mul(u), Du) - PolyOp::constant(2, k);
  };
  const PolyOp Jc = euler(n);
  gs.gens = {
      {"J1", Dt, Role::Lowering},
      {"J2", compose(mul(t), Dt) - PolyOp::constant(2, third), Role::Cartan},
      {"J3", Rational(2) * compose(mul(u), Du) - PolyOp::constant(2, third), Role::Cartan},
      {"J4", compose(mul(t * t), Dt) + Rational(2) * compose(mul(t * u), Du) - mul(Rational(n) * t), Role::Raising},
      {"R0", Du, Role::Lowering},
      {"R1", compose(mul(t), Du), Role::Lowering},
      {"R2", compose(mul(t * t), Du), Role::Cartan},
      {"T0", compose(mul(u), compose(Dt, Dt)), Role::Cartan},
      {"T1", compose(mul(u), compose(Dt, Jc)), Role::Raising},
      {"T2", compose(mul(u), compose(Jc, euler(n - 1))), Role::Raising},
      {"Jc", Jc, Role::Cartan},
  };
  finish(gs);
  return gs;
}

StructureReport check_structure(const GeneratorSet& gs) {
  StructureReport rep{gs.name, gs.d, gs.n, {}};
  rep.checks.push_back(flag_invariance(gs));
  if (gs.name == "gl2") {
    const PolyOp &Jm = gs.op("Jm"), &J0 = gs.op("J0"), &Jp = gs.op("Jp"), &T0 = gs.op("T0");
    rep.checks.push_back(relation("[Jm,J0] = Jm", commutator(Jm, J0), Jm));
    rep.checks.push_back(relation("[J0,Jp] = Jp", commutator(J0, Jp), Jp));
    rep.checks.push_back(relation("[Jm,Jp] = 2 J0 + n T0", commutator(Jm, Jp), Rational(2) * J0 + Rational(gs.n) * T0));
    bool central = true;
    for (const auto& g : gs.gens) central = central && commutator(T0, g.op).is_zero();
    rep.checks.push_back({"T0 central", central, ""});
    std::vector<const Generator*> all;
    for (const auto& g : gs.gens) all.push_back(&g);
    rep.checks.push_back(closure("closure", all, false));
  } else if (gs.name == "gln") {
    rep.checks.push_back({"generator count (d+1)^2", static_cast<int>(gs.gens.size()) == (gs.d + 1) * (gs.d + 1),
                          std::to_string(gs.gens.size())});
    rep.checks.push_back(gln_structure_constants(gs));
  } else if (gs.name == "g2") {
    std::vector<const Generator*> lie;
    for (const char* nm : {"J1", "J2", "J3", "J4", "R0", "R1", "R2"}) lie.push_back(&gs.get(nm));
    rep.checks.push_back(closure("closure of gl(2) x R(2)", lie, true));
    const PolyOp &J4 = gs.op("J4"), &T0 = gs.op("T0"), &T1 = gs.op("T1"), &T2 = gs.op("T2");
    const PolyOp C1 = commutator(J4, T0), C2 = commutator(J4, C1), C3 = commutator(J4, C2);
    auto s1 = proportional(C1, T1), s2 = proportional(C2, T2);
    rep.checks.push_back({"[J4,T0] proportional to T1", s1.has_value(), s1 ? "scale " + to_string(*s1) : to_string(C1)});
    rep.checks.push_back({"[J4,[J4,T0]] proportional to T2", s2.has_value(), s2 ? "scale " + to_string(*s2) : to_string(C2)});
    rep.checks.push_back({"nilpotency [J4,[J4,[J4,T0]]] = 0", C3.is_zero(), C3.is_zero() ? "" : to_string(C3)});
    bool comm = true;
    std::string bad;
    const std::vector<std::pair<const PolyOp*, std::string>> Ts = {{&T0, "T0"}, {&T1, "T1"}, {&T2, "T2"}};
    for (std::size_t i = 0; i < Ts.size(); ++i)
      for (std::size_t j = i + 1; j < Ts.size(); ++j)
        if (!commutator(*Ts[i].first, *Ts[j].first).is_zero()) {
          comm = false;
          bad += "[" + Ts[i].second + "," + Ts[j].second + "] ";
        }
    rep.checks.push_back({"T commutativity", comm, bad});
    rep.checks.push_back(conjugation_pair(gs, "R0", "T2"));
    rep.checks.push_back(conjugation_pair(gs, "R1", "T1"));
    rep.checks.push_back(conjugation_pair(gs, "R2", "T0"));
  }
  return rep;
}

PolyOp evaluate_word(const GeneratorSet& gs, const GeneratorWord& w) {
  PolyOp r = PolyOp::constant(gs.d, w.constant);
  for (const auto& term : w.terms) {
    PolyOp p = PolyOp::identity(gs.d);
    for (const auto& name : term.factors) p = compose(p, gs.op(name));
    r += term.coef * p;
  }
  return r;
}

std::string to_string(const GeneratorWord& w) {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : w.terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << t.coef << ")";
    for (const auto& f : t.factors) os << "*" << f;
  }
  if (w.constant != 0 || first) os << (first ? "" : " + ") << "(" << w.constant << ")";
  return os.str();
}

Decomposition fit_decomposition(const PolyOp& h, const GeneratorSet& gs, int max_degree, bool allow_raising) {
  if (max_degree < 0 || max_degree > 2) throw DomainError("word degree must be 0, 1 or 2");
  std::vector<const Generator*> low, deg1;
  for (const auto& g : gs.gens) {
    if (g.role == Role::Central) continue;
    if (g.role != Role::Raising) low.push_back(&g);
    if (g.role != Role::Raising || allow_raising) deg1.push_back(&g);
  }
  std::vector<std::vector<std::string>> words;
  std::vector<PolyOp> ops;
  words.push_back({});
  ops.push_back(PolyOp::identity(gs.d));
  if (max_degree >= 1)
    for (auto* g : deg1) {
      words.push_back({g->name});
      ops.push_back(g->op);
    }
  if (max_degree >= 2)
    for (auto* a : low)
      for (auto* b : low) {
        words.push_back({a->name, b->name});
        ops.push_back(compose(a->op, b->op));
      }

  Decomposition out;
  auto x = express(h, ops);
  if (x) {
    out.exact = true;
    for (std::size_t k = 0; k < words.size(); ++k) {
      if ((*x)[k] == 0) continue;
      if (words[k].empty())
        out.word.constant = (*x)[k];
      else
        out.word.add(words[k], (*x)[k]);
    }
    out.residual = h - evaluate_word(gs, out.word);
    return out;
  }
  // Certificate: grow the target one coefficient at a time; the first one that breaks consistency is
  // unmatched, and so is every coefficient no word can produce.
  KeyIndex all;
  for (const auto& op : ops) collect_keys(op, all);
  PolyOp partial(gs.d);
  for (const auto& [alpha, c] : h.terms())
    for (const auto& [m, q] : c.terms()) {
      if (!all.index.count({alpha, m})) {
        out.unmatched.push_back({alpha, m});
        continue;
      }
      PolyOp trial = partial;
      trial.add_term(alpha, MultiPoly::monomial(m, q));
      if (express(trial, ops))
        partial = trial;
      else
        out.unmatched.push_back({alpha, m});
    }
  auto xp = express(partial, ops);
  for (std::size_t k = 0; xp && k < words.size(); ++k) {
    if ((*xp)[k] == 0) continue;
    if (words[k].empty())
      out.word.constant = (*xp)[k];
    else
      out.word.add(words[k], (*xp)[k]);
  }
  out.residual = h - evaluate_word(gs, out.word);
  return out;
}

GeneratorWord printed_bc1_hidden_word(const Rational& nu2, const Rational& nu3) {
  GeneratorWord w;
  w.add({"J0", "J0"}, 1).add({"Jm", "Jm"}, -1).add({"J0"}, 2 * nu2 + nu3 + 1).add({"Jm"}, nu3);
  return w;
}

GeneratorWord printed_g2_word(const Rational& nu, const Rational& mu) {
  GeneratorWord w;
  w.add({"J1", "J1"}, -4).add({"J2", "J1"}, -1).add({"J3", "J1"}, 2).add({"R0", "J1"}, 12).add({"R2", "J1"}, -2);
  w.add({"J2", "J2"}, Rational(1, 3)).add({"J3", "J2"}, Rational(1, 2));
  w.add({"J3", "J3"}, 1).add({"R1", "J3"}, Rational(3, 2));
  w.add({"R0", "R1"}, 9).add({"R2", "R1"}, -1).add({"T0"}, Rational(-1, 3));
  w.add({"J1"}, 2 * nu).add({"J2"}, (3 * mu + 2 * nu) / 3).add({"J3"}, (2 * mu + nu - 1) / 2);
  w.add({"R0"}, 6 * mu).add({"R1"}, 2 * nu - Rational(3, 2));
  return w;
}

int mw_word_level(const std::string& variant, int n) {
  if (variant == "0-") return n - 1;
  if (variant == "0+" || variant == "1-" || variant == "1+") return n;
  throw UnknownGenerator("unknown MW variant '" + variant + "'");
}

GeneratorWord printed_mw_word(const std::string& variant, const Rational& b, int n) {
  mw_word_level(variant, n);
  GeneratorWord w;
  w.add({"J0", "J0"}, 1).add({"Jm", "Jm"}, -1).add({"Jp"}, -2 * b);
  if (variant == "0+") {
    w.add({"J0"}, 2 * n + 1).add({"Jm"}, -2 * b);
    w.constant = n * (n + 1);
  } else if (variant == "0-") {
    w.add({"J0"}, 2 * n + 1).add({"Jm"}, -2 * b);
    w.constant = n * (n + 2);
  } else if (variant == "1-") {
    w.add({"J0"}, 2 * (n + 1)).add({"Jm"}, 1 - 2 * b);
    w.constant = n * (n + 2);
  } else {
    w.add({"J0"}, 2 * (n + 1)).add({"Jm"}, -(1 + 2 * b));
    w.constant = n * (n + 2);
  }
  return w;
}

}  // namespace orbit
