#include "orbitforms/spectral.hpp"

#include "orbitforms/linsolve.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <map>

namespace orbit {

namespace {

MultiPoly vector_to_poly(const FlagSpace& V, const RationalMatrix& v, Eigen::Index col) {
  MultiPoly p(V.dim());
  for (int i = 0; i < V.size(); ++i)
    if (v(i, col) != 0) p.add_term(V.basis()[i], v(i, col));
  return p;
}

// Predicted values grouped by ε, ascending.
std::map<Rational, std::vector<Monomial>> predicted(const ModelBundle& model, const FlagSpace& V, Formula which) {
  std::map<Rational, std::vector<Monomial>> out;
  for (const auto& p : V.basis()) out[eigenvalue_formula(model, p, which)].push_back(p);
  return out;
}

}  // namespace

int SpectrumRecord::size() const {
  int s = 0;
  for (const auto& e : entries) s += e.multiplicity();
  return s;
}

FormulaCheck check_formula(const ModelBundle& model, const FlagSpace& V, Formula which) {
  FormulaCheck fc;
  const ExactMatrix M = restrict_to_flag(model.h, V);
  fc.dim = V.size();
  fc.charpoly = charpoly(M.m);
  int total = 0;
  for (const auto& [eps, ps] : predicted(model, V, which)) {
    const int k = root_multiplicity(fc.charpoly, eps);
    total += std::min<int>(k, ps.size());
    if (k != static_cast<int>(ps.size()) && fc.ok) {
      fc.ok = false;
      fc.offending = ps.front();
      fc.offending_eps = eps;
      fc.detail = "eps=" + to_string(eps) + " at p=" + to_string(ps.front()) + " predicted " +
                  std::to_string(ps.size()) + " time(s), root multiplicity " + std::to_string(k);
    }
  }
  if (fc.ok && total != fc.dim) {
    fc.ok = false;
    fc.detail = "multiset size " + std::to_string(total) + " != flag dimension " + std::to_string(fc.dim);
  }
  if (fc.ok) fc.detail = std::to_string(fc.dim) + " values, all exact roots with matching multiplicity";
  return fc;
}

SpectrumRecord spectrum(const ModelBundle& model, int n, Formula which, std::optional<CharVector> f, bool numeric) {
  if (!model.exactly_solvable()) throw UnsupportedModel("spectrum needs an exactly-solvable model; use qes_spectrum");
  const CharVector grades = f ? *f : model.flags.front().f;
  FlagSpace V(model.dim(), grades, n);
  const ExactMatrix M = restrict_to_flag(model.h, V);
  const auto cp = charpoly(M.m);

  SpectrumRecord rec;
  rec.model = to_string(model.spec.family);
  rec.d = model.dim();
  rec.f = grades;
  rec.n = n;
  rec.formula = which;
  for (const auto& [eps, ps] : predicted(model, V, which)) {
    const int k = root_multiplicity(cp, eps);
    if (k == 0)
      throw FormulaMismatch(ps.front(), eps,
                            "predicted eigenvalue " + to_string(eps) + " at p=" + to_string(ps.front()) +
                                " is not a root of the restricted matrix");
    const RationalMatrix shifted = M.m - eps * RationalMatrix::Identity(V.size(), V.size());
    const RationalMatrix K = kernel(shifted);
    if (K.cols() == 0) throw Inconsistency("empty kernel at a root of the characteristic polynomial");
    SpectrumEntry e;
    e.quanta = ps;
    e.eps = eps;
    e.algebraic = k;
    for (Eigen::Index c = 0; c < K.cols(); ++c) e.eigenpolys.push_back(vector_to_poly(V, K, c));
    rec.entries.push_back(std::move(e));
  }
  if (rec.size() != V.size())
    throw FormulaMismatch(rec.entries.back().quanta.front(), rec.entries.back().eps,
                          "predicted multiset does not fill the flag");
  for (const auto& e : rec.entries)
    if (e.algebraic != e.multiplicity())
      throw FormulaMismatch(e.quanta.front(), e.eps, "root multiplicity differs from the predicted count");

  if (numeric) {
    auto ev = numeric_eigenvalues(M.m);
    std::vector<Real100> re, pred;
    double imag = 0;
    for (const auto& z : ev) {
      re.push_back(z.real());
      imag = std::max(imag, static_cast<double>(abs(z.imag())));
    }
    for (const auto& e : rec.entries)
      for (int i = 0; i < e.multiplicity(); ++i) pred.push_back(to_float<Real100>(e.eps));
    std::sort(re.begin(), re.end());
    std::sort(pred.begin(), pred.end());
    Real100 dev = 0;
    for (std::size_t i = 0; i < re.size(); ++i) dev = std::max<Real100>(dev, abs(re[i] - pred[i]));
    rec.numeric_max_dev = static_cast<double>(dev);
    rec.numeric_max_imag = imag;
  }
  return rec;
}

MultiPoly jacobi_reference(int p, const Rational& a, const Rational& b) {
  if (p < 0) throw DomainError("Jacobi degree must be non-negative");
  const MultiPoly x = MultiPoly::variable(1, 0), one(1, 1);
  MultiPoly prev = one;
  if (p == 0) return prev;
  MultiPoly cur = (a + 1) * one + ((a + b + 2) / 2) * (x - one);
  for (int k = 2; k <= p; ++k) {
    const Rational s = 2 * k + a + b;
    const Rational den = 2 * k * (k + a + b) * (s - 2);
    if (den == 0) throw DomainError("Jacobi recurrence degenerates for these parameters");
    MultiPoly next = ((s - 1) * s * (s - 2)) * (x * cur) + ((s - 1) * (a * a - b * b)) * cur -
                     (2 * (k + a - 1) * (k + b - 1) * s) * prev;
    prev = cur;
    cur = next * (1 / den);
  }
  return cur;
}

std::optional<Rational> proportionality(const MultiPoly& poly, const MultiPoly& ref) {
  if (ref.is_zero() || poly.is_zero()) return std::nullopt;
  const auto& [m, q] = ref.leading();
  const Rational c = poly.coeff(m) / q;
  if (c == 0 || !(poly == c * ref)) return std::nullopt;
  return c;
}

QesSpectrum qes_spectrum(const ModelBundle& model, int n) {
  if (model.spec.family != Family::BC1_QES && model.spec.family != Family::MW)
    throw UnsupportedModel("qes_spectrum needs a QES model");
  FlagSpace V(1, CharVector({1}), n);
  const ExactMatrix M = restrict_to_flag(model.h, V);  // propagates NotInvariant with its witness
  QesSpectrum q;
  q.n = n;
  q.matrix = M.m;
  q.trace = M.m.trace();

  using Mat = Eigen::Matrix<Real100, Eigen::Dynamic, Eigen::Dynamic>;
  Mat A(M.m.rows(), M.m.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j) A(i, j) = to_float<Real100>(M.m(i, j));
  const auto ev = numeric_eigenvalues(M.m);
  std::vector<std::complex<Real100>> sorted = ev;
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) { return x.real() < y.real(); });
  for (const auto& z : sorted) {
    q.max_imag = std::max(q.max_imag, static_cast<double>(abs(z.imag())));
    q.eigenvalues_approx.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
    q.eigenvalues.push_back(z.real().str(40));
    // Kernel of (A − λ I) from a full-pivoting LU at working precision.
    Mat S = A - Mat::Identity(A.rows(), A.cols()) * z.real();
    Eigen::FullPivLU<Mat> lu(S);
    lu.setThreshold(Real100("1e-40"));
    Mat K = lu.kernel();
    std::vector<std::string> v;
    if (K.cols() > 0) {
      Eigen::Index top = 0;
      for (Eigen::Index i = 0; i < K.rows(); ++i)
        if (abs(K(i, 0)) > abs(K(top, 0))) top = i;
      const Real100 scale = K(top, 0);
      for (Eigen::Index i = 0; i < K.rows(); ++i) v.push_back(Real100(K(i, 0) / scale).str(30));
    }
    q.eigenvectors.push_back(std::move(v));
  }
  return q;
}

}  // namespace orbit
