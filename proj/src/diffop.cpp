#include "orbitforms/diffop.hpp"

#include <sstream>

namespace orbit {

namespace {

Rational binomial(int n, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Every γ with 0 ≤ γ ≤ α componentwise.
template <class F>
void for_each_below(const Monomial& alpha, F&& f) {
  Monomial g(alpha.size(), 0);
  for (;;) {
    f(g);
    std::size_t i = 0;
    while (i < g.size() && g[i] == alpha[i]) g[i++] = 0;
    if (i == g.size()) return;
    ++g[i];
  }
}

RationalFn derivative(const RationalFn& r, const Monomial& alpha) {
  RationalFn out = r;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    for (int k = 0; k < alpha[i]; ++k) out = out.derivative(static_cast<int>(i));
  return out;
}

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

}  // namespace

MultiPoly apply(const PolyOp& op, const MultiPoly& p) {
  if (op.nvars() != p.nvars()) throw DimensionError("operator/polynomial variable-count mismatch");
  MultiPoly r(p.nvars());
  for (const auto& [alpha, c] : op.terms()) {
    MultiPoly dp = p.derivative(alpha);
    if (!dp.is_zero()) r += c * dp;
  }
  return r;
}

RationalFn apply(const RatOp& op, const RationalFn& p) {
  if (op.nvars() != p.nvars()) throw DimensionError("operator/function variable-count mismatch");
  RationalFn r(MultiPoly(p.nvars()));
  for (const auto& [alpha, c] : op.terms()) r = r + c * derivative(p, alpha);
  return r;
}

PolyOp compose(const PolyOp& a, const PolyOp& b) {
  a.check_same(b);
  const int d = a.nvars();
  PolyOp r(d);
  for (const auto& [alpha, ca] : a.terms())
    for (const auto& [beta, cb] : b.terms())
      for_each_below(alpha, [&](const Monomial& gamma) {
        MultiPoly db = cb.derivative(gamma);
        if (db.is_zero()) return;
        Rational w = 1;
        Monomial k(d);
        for (int i = 0; i < d; ++i) {
          w *= binomial(alpha[i], gamma[i]);
          k[i] = alpha[i] - gamma[i] + beta[i];
        }
        r.add_term(k, (ca * db) * w);
      });
  return r;
}

PolyOp commutator(const PolyOp& a, const PolyOp& b) { return compose(a, b) - compose(b, a); }

PolyOp power(const PolyOp& a, int k) {
  PolyOp r = PolyOp::identity(a.nvars());
  for (int i = 0; i < k; ++i) r = compose(r, a);
  return r;
}

RatOp to_rational(const PolyOp& op) {
  RatOp r(op.nvars());
  for (const auto& [alpha, c] : op.terms()) r.add_term(alpha, RationalFn(c));
  return r;
}

std::optional<PolyOp> to_polynomial(const RatOp& op) {
  PolyOp r(op.nvars());
  for (const auto& [alpha, c] : op.terms()) {
    auto p = c.as_polynomial();
    if (!p) return std::nullopt;
    r.add_term(alpha, *p);
  }
  return r;
}

// ---------------------------------------------------------------- gauge factors

GaugeFactor& GaugeFactor::times(const MultiPoly& base, const Rational& exponent) {
  if (base.nvars() != d) throw DimensionError("gauge factor base has wrong variable count");
  if (base.is_zero()) throw DomainError("gauge factor base is identically zero");
  if (exponent != 0) factors.emplace_back(base, exponent);
  return *this;
}

GaugeFactor& GaugeFactor::times_exp(const MultiPoly& q) {
  exp_arg += q;
  return *this;
}

GaugeFactor GaugeFactor::inverse() const {
  GaugeFactor g(d);
  for (const auto& [p, a] : factors) g.factors.emplace_back(p, -a);
  g.exp_arg = -exp_arg;
  return g;
}

std::vector<MultiPoly> GaugeFactor::bases() const {
  std::vector<MultiPoly> out;
  for (const auto& [p, a] : factors) out.push_back(p);
  return out;
}

std::vector<RationalFn> GaugeFactor::log_gradient() const {
  MultiPoly D(d, 1);
  for (const auto& [p, a] : factors) D = D * p;
  std::vector<RationalFn> G;
  for (int i = 0; i < d; ++i) {
    MultiPoly N = exp_arg.derivative(i) * D;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      MultiPoly t = factors[k].first.derivative(i) * factors[k].second;
      if (t.is_zero()) continue;
      for (std::size_t l = 0; l < factors.size(); ++l)
        if (l != k) t = t * factors[l].first;
      N += t;
    }
    G.push_back(RationalFn(N, D).cancel(bases()));
  }
  return G;
}

std::string GaugeFactor::describe() const {
  std::string s;
  for (const auto& [p, a] : factors) {
    if (!s.empty()) s += " * ";
    s += "(" + to_string(p) + ")^(" + a.str() + ")";
  }
  if (!exp_arg.is_zero()) s += (s.empty() ? "" : " * ") + std::string("exp(") + to_string(exp_arg) + ")";
  return s.empty() ? "1" : s;
}

RatOp gauge_conjugate(const RatOp& op, const GaugeFactor& F) {
  if (op.order() > 2) throw UnsupportedOrder("gauge conjugation supports operators of order <= 2");
  const int d = op.nvars();
  if (F.d != d) throw DimensionError("gauge factor/operator variable-count mismatch");
  const auto G = F.log_gradient();
  const auto cands = F.bases();
  const RationalFn zero{MultiPoly(d)};

  // Symmetric second-order coefficients: ∂_i∂_j with i ≠ j is stored once.
  std::vector<std::vector<RationalFn>> A(d, std::vector<RationalFn>(d, zero));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      RationalFn c = op.coeff(pair_index(d, i, j));
      A[i][j] = i == j ? c : c * Rational(1, 2);
    }

  RatOp out(d);
  for (const auto& [alpha, c] : op.terms())
    if (total_degree(alpha) == 2) out.add_term(alpha, c);

  for (int i = 0; i < d; ++i) {
    RationalFn b = op.coeff(unit(d, i));
    for (int j = 0; j < d; ++j)
      if (!A[i][j].is_zero()) b = b + A[i][j] * G[j] * Rational(2);
    out.add_term(unit(d, i), b.cancel(cands));
  }

  RationalFn c0 = op.coeff(Monomial(d, 0));
  RationalFn w = zero;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j)
      if (!A[i][j].is_zero()) w = w + A[i][j] * (G[j].derivative(i) + G[i] * G[j]);
    RationalFn b = op.coeff(unit(d, i));
    if (!b.is_zero()) w = w + b * G[i];
  }
  w = w.cancel(cands);
  out.add_term(Monomial(d, 0), (c0 + w).cancel(cands));
  return out;
}

// ---------------------------------------------------------------- flags

ExactMatrix restrict_to_flag(const PolyOp& op, const FlagSpace& V) {
  if (op.nvars() != V.dim()) throw DimensionError("operator/flag dimension mismatch");
  ExactMatrix M{V, RationalMatrix::Zero(V.size(), V.size())};
  for (int j = 0; j < V.size(); ++j) {
    MultiPoly img = apply(op, MultiPoly::monomial(V.basis()[j]));
    for (const auto& [m, c] : img.terms()) {
      int i = V.index(m);
      if (i < 0)
        throw NotInvariant({V.basis()[j], m}, "operator maps " + to_string(V.basis()[j]) + " to " + to_string(m) +
                                                  " outside the flag " + to_string(V.grades()) + " level " +
                                                  std::to_string(V.level()));
      M.m(i, j) = c;
    }
  }
  return M;
}

FlagCheck preserves_flag(const PolyOp& op, const FlagSpace& V) {
  if (op.nvars() != V.dim()) throw DimensionError("operator/flag dimension mismatch");
  for (const auto& b : V.basis()) {
    MultiPoly img = apply(op, MultiPoly::monomial(b));
    // Scan from the top of the graded order so the witness is the most offending monomial.
    for (auto it = img.terms().rbegin(); it != img.terms().rend(); ++it)
      if (!V.contains(it->first)) return {false, FlagWitness{b, it->first}};
  }
  return {};
}

bool block_triangular(const ExactMatrix& M) {
  const auto& B = M.space.basis();
  const auto& f = M.space.grades();
  for (int i = 0; i < M.m.rows(); ++i)
    for (int j = 0; j < M.m.cols(); ++j)
      if (M.m(i, j) != 0 && f.degree(B[i]) > f.degree(B[j])) return false;
  return true;
}

// ---------------------------------------------------------------- printing

std::string to_string(const Monomial& m, const std::vector<std::string>& names) {
  return to_string(MultiPoly::monomial(m), names);
}

namespace {

std::string derivative_name(const Monomial& alpha) {
  std::string s;
  const int d = static_cast<int>(alpha.size());
  for (int i = 0; i < d; ++i) {
    if (alpha[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += d == 1 ? "D" : "D" + std::to_string(i + 1);
    if (alpha[i] > 1) s += "^" + std::to_string(alpha[i]);
  }
  return s;
}

template <class Op>
std::string op_string(const Op& op, const std::vector<std::string>& names) {
  if (op.is_zero()) return "0";
  std::string s;
  for (auto it = op.terms().rbegin(); it != op.terms().rend(); ++it) {
    if (!s.empty()) s += " + ";
    std::string dn = derivative_name(it->first);
    std::string cs = to_string(it->second, names);
    s += dn.empty() ? "(" + cs + ")" : "(" + cs + ")*" + dn;
  }
  return s;
}

}  // namespace

std::string to_string(const PolyOp& op, const std::vector<std::string>& names) { return op_string(op, names); }
std::string to_string(const RatOp& op, const std::vector<std::string>& names) { return op_string(op, names); }

}  // namespace orbit
