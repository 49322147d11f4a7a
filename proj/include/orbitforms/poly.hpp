#pragma once

#include "orbitforms/rational.hpp"

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orbit {

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

using Monomial = std::vector<int>;

int total_degree(const Monomial& m);

// Graded by total degree, ties broken lexicographically.
struct GradedLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

struct CharVector {
  std::vector<int> f;

  CharVector() = default;
  explicit CharVector(std::vector<int> grades);
  static CharVector ones(int d) { return CharVector(std::vector<int>(d, 1)); }

  int size() const { return static_cast<int>(f.size()); }
  int degree(const Monomial& m) const;
  bool operator==(const CharVector&) const = default;
};

std::string to_string(const CharVector& f);

class MultiPoly {
 public:
  using Terms = std::map<Monomial, Rational, GradedLess>;

  explicit MultiPoly(int nvars = 0) : d_(nvars) {}
  MultiPoly(int nvars, const Rational& c);

  static MultiPoly variable(int nvars, int i);
  static MultiPoly monomial(const Monomial& m, const Rational& c = 1);

  int nvars() const { return d_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational coeff(const Monomial& m) const;
  Rational constant_term() const { return coeff(Monomial(d_, 0)); }
  int degree() const;
  int degree(const CharVector& f) const;
  // Largest monomial in graded order.
  const std::pair<const Monomial, Rational>& leading() const;

  void add_term(const Monomial& m, const Rational& c);

  MultiPoly derivative(int i) const;
  MultiPoly derivative(const Monomial& alpha) const;
  MultiPoly pow(int k) const;
  // Substitute τ_i → c_i τ_i.
  MultiPoly scaled(const std::vector<Rational>& c) const;

  Rational evaluate(std::span<const Rational> x) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator-(MultiPoly a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.d_ == b.d_ && a.terms_ == b.terms_;
  }

 private:
  void check_same(const MultiPoly& o) const;
  int d_;
  Terms terms_;
};

// Multivariate division by a single divisor in graded order.
std::pair<MultiPoly, MultiPoly> divide(const MultiPoly& a, const MultiPoly& b);
std::optional<MultiPoly> exact_quotient(const MultiPoly& a, const MultiPoly& b);

// Names default to t1..td; a one-variable polynomial prints in t.
std::string to_string(const MultiPoly& p, const std::vector<std::string>& names = {});

// Coefficients converted once; evaluation in any numeric type built from Real.
template <class T>
struct NumericPoly {
  std::vector<std::pair<Monomial, T>> terms;

  NumericPoly() = default;
  explicit NumericPoly(const MultiPoly& p) {
    for (const auto& [m, c] : p.terms()) terms.emplace_back(m, to_float<T>(c));
  }

  T operator()(std::span<const T> x) const {
    T s(0);
    for (const auto& [m, c] : terms) {
      T t = c;
      for (std::size_t i = 0; i < m.size(); ++i)
        for (int k = 0; k < m[i]; ++k) t *= x[i];
      s += t;
    }
    return s;
  }
};

class RationalFn {
 public:
  RationalFn() = default;
  RationalFn(MultiPoly num);  // NOLINT implicit: polynomials are rational functions
  RationalFn(MultiPoly num, MultiPoly den);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  int nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }

  std::optional<MultiPoly> as_polynomial() const;
  // Strips every power of each candidate that divides both sides.
  RationalFn cancel(const std::vector<MultiPoly>& candidates) const;
  RationalFn derivative(int i) const;

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const Rational& c);
  friend RationalFn operator-(const RationalFn& a);
  // Cross-multiplication test.
  friend bool operator==(const RationalFn& a, const RationalFn& b);

  Rational evaluate(std::span<const Rational> x) const;

 private:
  void normalize();
  MultiPoly num_, den_;
};

RationalFn ratfn_normalize(const MultiPoly& num, const MultiPoly& den);
std::string to_string(const RationalFn& r, const std::vector<std::string>& names = {});

class FlagSpace {
 public:
  FlagSpace(int d, CharVector f, int n);

  int dim() const { return d_; }
  int level() const { return n_; }
  const CharVector& grades() const { return f_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  int size() const { return static_cast<int>(basis_.size()); }
  bool contains(const Monomial& m) const { return f_.degree(m) <= n_; }
  // Position in the basis, or -1.
  int index(const Monomial& m) const;

 private:
  int d_, n_;
  CharVector f_;
  std::vector<Monomial> basis_;
  std::map<Monomial, int> index_;
};

FlagSpace enumerate_flag_basis(int d, const CharVector& f, int n);

}  // namespace orbit
