#include "orbitforms/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace orbit {

int total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

bool GradedLess::operator()(const Monomial& a, const Monomial& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

CharVector::CharVector(std::vector<int> grades) : f(std::move(grades)) {
  for (int g : f)
    if (g < 1) throw std::invalid_argument("characteristic vector grades must be >= 1");
}

int CharVector::degree(const Monomial& m) const {
  if (m.size() != f.size()) throw DimensionError("monomial/characteristic vector size mismatch");
  int s = 0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * m[i];
  return s;
}

std::string to_string(const CharVector& f) {
  std::string s = "(";
  for (int i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f.f[i]);
  return s + ")";
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(int nvars, const Rational& c) : d_(nvars) {
  if (c != 0) terms_.emplace(Monomial(nvars, 0), c);
}

MultiPoly MultiPoly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw DimensionError("variable index out of range");
  Monomial m(nvars, 0);
  m[i] = 1;
  return monomial(m);
}

MultiPoly MultiPoly::monomial(const Monomial& m, const Rational& c) {
  MultiPoly p(static_cast<int>(m.size()));
  p.add_term(m, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Rational MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::degree() const { return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first); }

int MultiPoly::degree(const CharVector& f) const {
  int best = -1;
  for (const auto& [m, c] : terms_) best = std::max(best, f.degree(m));
  return best;
}

const std::pair<const Monomial, Rational>& MultiPoly::leading() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return *terms_.rbegin();
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (static_cast<int>(m.size()) != d_) throw DimensionError("monomial has wrong variable count");
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check_same(const MultiPoly& o) const {
  if (d_ != o.d_)
    throw DimensionError("variable-count mismatch: " + std::to_string(d_) + " vs " + std::to_string(o.d_));
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same(b);
  MultiPoly r(a.d_);
  Monomial m(a.d_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      for (int i = 0; i < a.d_; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

MultiPoly operator-(MultiPoly a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

MultiPoly MultiPoly::derivative(int i) const {
  if (i < 0 || i >= d_) throw DimensionError("derivative index out of range");
  MultiPoly r(d_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    Monomial k = m;
    --k[i];
    r.add_term(k, c * m[i]);
  }
  return r;
}

MultiPoly MultiPoly::derivative(const Monomial& alpha) const {
  if (static_cast<int>(alpha.size()) != d_) throw DimensionError("derivative multi-index size mismatch");
  MultiPoly r(d_);
  for (const auto& [m, c] : terms_) {
    Rational f = c;
    Monomial k = m;
    bool vanish = false;
    for (int i = 0; i < d_ && !vanish; ++i) {
      if (m[i] < alpha[i]) {
        vanish = true;
        break;
      }
      for (int j = 0; j < alpha[i]; ++j) f *= m[i] - j;
      k[i] -= alpha[i];
    }
    if (!vanish) r.add_term(k, f);
  }
  return r;
}

MultiPoly MultiPoly::pow(int k) const {
  if (k < 0) throw DomainError("negative polynomial power");
  MultiPoly r(d_, 1), base = *this;
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

MultiPoly MultiPoly::scaled(const std::vector<Rational>& c) const {
  if (static_cast<int>(c.size()) != d_) throw DimensionError("scale vector size mismatch");
  MultiPoly r(d_);
  for (const auto& [m, v] : terms_) {
    Rational f = v;
    for (int i = 0; i < d_; ++i)
      for (int j = 0; j < m[i]; ++j) f *= c[i];
    r.add_term(m, f);
  }
  return r;
}

Rational MultiPoly::evaluate(std::span<const Rational> x) const {
  if (static_cast<int>(x.size()) != d_) throw DimensionError("evaluation point has wrong size");
  Rational s = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < d_; ++i)
      for (int j = 0; j < m[i]; ++j) t *= x[i];
    s += t;
  }
  return s;
}

std::pair<MultiPoly, MultiPoly> divide(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  if (a.nvars() != b.nvars()) throw DimensionError("variable-count mismatch in division");
  const int d = a.nvars();
  const auto& [lb, cb] = b.leading();
  MultiPoly q(d), rem(d), r = a;
  while (!r.is_zero()) {
    auto [lr, cr] = r.leading();
    bool divisible = true;
    for (int i = 0; i < d; ++i) divisible = divisible && lr[i] >= lb[i];
    if (divisible) {
      Monomial t(d);
      for (int i = 0; i < d; ++i) t[i] = lr[i] - lb[i];
      MultiPoly step = MultiPoly::monomial(t, cr / cb);
      q += step;
      r -= step * b;
    } else {
      rem.add_term(lr, cr);
      r.add_term(lr, -cr);
    }
  }
  return {q, rem};
}

std::optional<MultiPoly> exact_quotient(const MultiPoly& a, const MultiPoly& b) {
  auto [q, r] = divide(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

namespace {

std::string var_name(int i, int d, const std::vector<std::string>& names) {
  if (i < static_cast<int>(names.size())) return names[i];
  return d == 1 ? "t" : "t" + std::to_string(i + 1);
}

}  // namespace

std::string to_string(const MultiPoly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    bool constant = total_degree(m) == 0;
    bool unit = a == 1;
    if (constant || !unit) os << a.str();
    bool need_star = constant || !unit;
    for (int i = 0; i < p.nvars(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) os << "*";
      os << var_name(i, p.nvars(), names);
      if (m[i] > 1) os << "^" << m[i];
      need_star = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- RationalFn

RationalFn::RationalFn(MultiPoly n) : num_(std::move(n)), den_(num_.nvars(), 1) { normalize(); }

RationalFn::RationalFn(MultiPoly n, MultiPoly d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  if (num_.nvars() != den_.nvars()) throw DimensionError("numerator/denominator variable counts differ");
  normalize();
}

void RationalFn::normalize() {
  if (num_.is_zero()) {
    den_ = MultiPoly(den_.nvars(), 1);
    return;
  }
  Integer l = 1, g = 0;
  for (const auto* p : {&num_, &den_})
    for (const auto& [m, c] : p->terms()) l = lcm(l, orbit::den(c));
  for (const auto* p : {&num_, &den_})
    for (const auto& [m, c] : p->terms()) g = gcd(g, Integer(orbit::num(c) * (l / orbit::den(c))));
  Rational s(l, g);
  if (den_.leading().second < 0) s = -s;
  num_ *= s;
  den_ *= s;
}

std::optional<MultiPoly> RationalFn::as_polynomial() const {
  if (den_.is_constant()) return num_ * (Rational(1) / den_.constant_term());
  return exact_quotient(num_, den_);
}

RationalFn RationalFn::cancel(const std::vector<MultiPoly>& candidates) const {
  MultiPoly n = num_, d = den_;
  for (const auto& c : candidates) {
    if (c.is_constant()) continue;
    for (;;) {
      auto qd = exact_quotient(d, c);
      if (!qd) break;
      auto qn = exact_quotient(n, c);
      if (!qn) break;
      n = *qn;
      d = *qd;
    }
  }
  if (auto q = exact_quotient(n, d)) return RationalFn(*q);
  return RationalFn(n, d);
}

RationalFn RationalFn::derivative(int i) const {
  if (den_.is_constant()) return RationalFn(num_.derivative(i), den_);
  return RationalFn(num_.derivative(i) * den_ - num_ * den_.derivative(i), den_ * den_);
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  if (a.den_ == b.den_) return RationalFn(a.num_ + b.num_, a.den_);
  // Keep the larger denominator when one divides the other.
  if (auto q = exact_quotient(a.den_, b.den_)) return RationalFn(a.num_ + b.num_ * *q, a.den_);
  if (auto q = exact_quotient(b.den_, a.den_)) return RationalFn(a.num_ * *q + b.num_, b.den_);
  return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator-(const RationalFn& a) { return RationalFn(-a.num_, a.den_); }

RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  if (a.is_zero() || b.is_zero()) return RationalFn(MultiPoly(a.nvars()));
  return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFn operator*(const RationalFn& a, const Rational& c) { return RationalFn(a.num_ * c, a.den_); }

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
  if (b.is_zero()) throw DomainError("division by the zero rational function");
  return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RationalFn& a, const RationalFn& b) {
  if (a.nvars() != b.nvars()) return false;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

Rational RationalFn::evaluate(std::span<const Rational> x) const {
  Rational d = den_.evaluate(x);
  if (d == 0) throw DomainError("rational function evaluated on a pole");
  return num_.evaluate(x) / d;
}

RationalFn ratfn_normalize(const MultiPoly& num, const MultiPoly& den) { return RationalFn(num, den); }

std::string to_string(const RationalFn& r, const std::vector<std::string>& names) {
  if (r.den().is_constant() && r.den().constant_term() == 1) return to_string(r.num(), names);
  return "(" + to_string(r.num(), names) + ")/(" + to_string(r.den(), names) + ")";
}

// ---------------------------------------------------------------- FlagSpace

FlagSpace::FlagSpace(int d, CharVector f, int n) : d_(d), n_(n), f_(std::move(f)) {
  if (d < 1) throw std::invalid_argument("flag dimension must be >= 1");
  if (n < 0) throw std::invalid_argument("flag level must be >= 0");
  if (f_.size() != d) throw DimensionError("characteristic vector length differs from dimension");
  Monomial m(d, 0);
  auto rec = [&](auto&& self, int i, int budget) -> void {
    if (i == d) {
      basis_.push_back(m);
      return;
    }
    for (int p = 0; p * f_.f[i] <= budget; ++p) {
      m[i] = p;
      self(self, i + 1, budget - p * f_.f[i]);
    }
    m[i] = 0;
  };
  rec(rec, 0, n);
  std::sort(basis_.begin(), basis_.end(), [&](const Monomial& a, const Monomial& b) {
    int da = f_.degree(a), db = f_.degree(b);
    if (da != db) return da < db;
    return a < b;
  });
  for (int i = 0; i < size(); ++i) index_.emplace(basis_[i], i);
}

int FlagSpace::index(const Monomial& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

FlagSpace enumerate_flag_basis(int d, const CharVector& f, int n) { return FlagSpace(d, f, n); }

}  // namespace orbit
