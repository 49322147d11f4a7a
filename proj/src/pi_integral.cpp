#include "orbitforms/pi_integral.hpp"

namespace orbit {

PiIntegral build_pi_integral(const CharVector& f, int d, int n) {
  if (f.size() != d) throw DimensionError("characteristic vector length differs from d");
  if (n < 0) throw DomainError("pi-integral level must be non-negative");
  PiIntegral ip{f, n, PolyOp(d), PolyOp(d)};
  for (int i = 0; i < d; ++i) {
    Monomial a(d, 0), t(d, 0);
    a[i] = 1;
    t[i] = 1;
    ip.j0.add_term(a, MultiPoly::monomial(t, f.f[i]));
  }
  ip.j0 += PolyOp::constant(d, -n);
  ip.op = ip.j0;
  for (int j = 1; j <= n; ++j) ip.op = compose(ip.op, ip.j0 + PolyOp::constant(d, j));
  return ip;
}

Rational pi_eigenvalue(const PiIntegral& ip, const Monomial& m) {
  Rational c = 1;
  const int deg = ip.f.degree(m);
  for (int j = 0; j <= ip.n; ++j) c *= deg - ip.n + j;
  return c;
}

AnnihilationResult annihilation_check(const PolyOp& h, const PiIntegral& ip, const FlagSpace& V) {
  const PolyOp c = commutator(h, ip.op);
  AnnihilationResult r;
  for (const auto& m : V.basis()) {
    MultiPoly img = apply(c, MultiPoly::monomial(m));
    if (!img.is_zero()) {
      r.annihilates = false;
      r.witness = m;
      r.image = std::move(img);
      return r;
    }
  }
  r.image = MultiPoly(V.dim());
  return r;
}

}  // namespace orbit
