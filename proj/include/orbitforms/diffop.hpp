#pragma once

#include "orbitforms/poly.hpp"

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbit {

struct UnsupportedOrder : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

namespace detail {
inline MultiPoly coef_zero(int d, const MultiPoly*) { return MultiPoly(d); }
inline RationalFn coef_zero(int d, const RationalFn*) { return RationalFn(MultiPoly(d)); }
inline MultiPoly coef_const(int d, const Rational& c, const MultiPoly*) { return MultiPoly(d, c); }
inline RationalFn coef_const(int d, const Rational& c, const RationalFn*) { return RationalFn(MultiPoly(d, c)); }
}  // namespace detail

// Σ_α c_α(τ) ∂^α with the derivative multi-index α as key.
template <class Coef>
class DiffOp {
 public:
  using Terms = std::map<Monomial, Coef, GradedLess>;

  explicit DiffOp(int nvars = 0) : d_(nvars) {}

  static DiffOp identity(int d) { return multiplication(detail::coef_const(d, 1, static_cast<Coef*>(nullptr))); }
  static DiffOp constant(int d, const Rational& c) {
    return multiplication(detail::coef_const(d, c, static_cast<Coef*>(nullptr)));
  }
  static DiffOp multiplication(const Coef& c) {
    DiffOp op(c.nvars());
    op.add_term(Monomial(c.nvars(), 0), c);
    return op;
  }
  static DiffOp partial(int d, int i) {
    Monomial a(d, 0);
    a.at(i) = 1;
    DiffOp op(d);
    op.add_term(a, detail::coef_const(d, 1, static_cast<Coef*>(nullptr)));
    return op;
  }
  static DiffOp term(const Monomial& alpha, const Coef& c) {
    DiffOp op(static_cast<int>(alpha.size()));
    op.add_term(alpha, c);
    return op;
  }

  int nvars() const { return d_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int order() const { return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first); }
  Coef coeff(const Monomial& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? detail::coef_zero(d_, static_cast<Coef*>(nullptr)) : it->second;
  }

  void add_term(const Monomial& alpha, const Coef& c) {
    if (static_cast<int>(alpha.size()) != d_ || c.nvars() != d_)
      throw DimensionError("operator term has wrong variable count");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(alpha, c);
    if (!fresh) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  DiffOp& operator+=(const DiffOp& o) {
    check_same(o);
    for (const auto& [a, c] : o.terms_) add_term(a, c);
    return *this;
  }
  DiffOp& operator-=(const DiffOp& o) {
    check_same(o);
    for (const auto& [a, c] : o.terms_) add_term(a, -c);
    return *this;
  }
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator*(const Rational& s, const DiffOp& a) {
    DiffOp r(a.d_);
    if (s == 0) return r;
    for (const auto& [al, c] : a.terms_) r.add_term(al, c * s);
    return r;
  }
  friend DiffOp operator-(const DiffOp& a) { return Rational(-1) * a; }
  friend bool operator==(const DiffOp& a, const DiffOp& b) {
    if (a.d_ != b.d_ || a.terms_.size() != b.terms_.size()) return false;
    auto ib = b.terms_.begin();
    for (const auto& [al, c] : a.terms_) {
      if (al != ib->first || !(c == ib->second)) return false;
      ++ib;
    }
    return true;
  }

  void check_same(const DiffOp& o) const {
    if (d_ != o.d_) throw DimensionError("operator variable-count mismatch");
  }

 private:
  int d_;
  Terms terms_;
};

using PolyOp = DiffOp<MultiPoly>;
using RatOp = DiffOp<RationalFn>;

MultiPoly apply(const PolyOp& op, const MultiPoly& p);
RationalFn apply(const RatOp& op, const RationalFn& p);

PolyOp compose(const PolyOp& a, const PolyOp& b);
PolyOp commutator(const PolyOp& a, const PolyOp& b);
PolyOp power(const PolyOp& a, int k);

RatOp to_rational(const PolyOp& op);
// Succeeds when every coefficient's denominator divides its numerator.
std::optional<PolyOp> to_polynomial(const RatOp& op);

// Σ_k α_k log P_k + Q, i.e. F = Π P_k^{α_k} · exp(Q).
struct GaugeFactor {
  int d = 0;
  std::vector<std::pair<MultiPoly, Rational>> factors;
  MultiPoly exp_arg;

  explicit GaugeFactor(int nvars = 0) : d(nvars), exp_arg(nvars) {}
  GaugeFactor& times(const MultiPoly& base, const Rational& exponent);
  GaugeFactor& times_exp(const MultiPoly& q);

  GaugeFactor inverse() const;
  std::vector<RationalFn> log_gradient() const;
  std::vector<MultiPoly> bases() const;
  std::string describe() const;
};

// F⁻¹·op·F for op of order ≤ 2. Known factor bases are cancelled from the result.
RatOp gauge_conjugate(const RatOp& op, const GaugeFactor& F);

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

struct ExactMatrix {
  FlagSpace space;
  RationalMatrix m;  // m(i, j) = coefficient of basis[i] in op(basis[j])
};

struct FlagWitness {
  Monomial input;
  Monomial output;
};

struct NotInvariant : std::runtime_error {
  FlagWitness witness;
  NotInvariant(const FlagWitness& w, const std::string& what) : std::runtime_error(what), witness(w) {}
};

struct FlagCheck {
  bool preserved = true;
  std::optional<FlagWitness> witness;
};

ExactMatrix restrict_to_flag(const PolyOp& op, const FlagSpace& V);
FlagCheck preserves_flag(const PolyOp& op, const FlagSpace& V);
// No entry maps a basis monomial to one of strictly higher f-degree. With rows labelled by
// output monomials in ascending order this is block-upper-triangular in matrix terms.
bool block_triangular(const ExactMatrix& M);

std::string to_string(const PolyOp& op, const std::vector<std::string>& names = {});
std::string to_string(const RatOp& op, const std::vector<std::string>& names = {});
std::string to_string(const Monomial& m, const std::vector<std::string>& names = {});

}  // namespace orbit
