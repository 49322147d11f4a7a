#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <complex>
#include <random>
#include <string>
#include <string_view>

namespace orbit {

namespace mp = boost::multiprecision;

// Canonical (coprime, positive denominator) arbitrary-precision rational.
using Rational = mp::number<mp::gmp_rational, mp::et_off>;
using Integer = mp::number<mp::gmp_int, mp::et_off>;

template <unsigned Digits>
using Float = mp::number<mp::mpfr_float_backend<Digits>, mp::et_off>;

using Real = Float<50>;     // cartesian oracle, quadrature
using Real100 = Float<100>; // numeric spectra
using Complex = std::complex<Real>;

// Accepts "p", "p/q" and "-p/q"; anything else throws std::invalid_argument.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

inline Integer num(const Rational& q) { return mp::numerator(q); }
inline Integer den(const Rational& q) { return mp::denominator(q); }

template <class T>
struct FromRational {
  static T apply(const Rational& q) { return T(q); }
};
template <class R>
struct FromRational<std::complex<R>> {
  static std::complex<R> apply(const Rational& q) { return std::complex<R>(R(q), R(0)); }
};

template <class T>
T to_float(const Rational& q) {
  return FromRational<T>::apply(q);
}

// Random rational with small numerator/denominator, never zero unless allowed.
Rational random_rational(std::mt19937_64& rng, int max_num = 9, int max_den = 7, bool allow_zero = false);

}  // namespace orbit
