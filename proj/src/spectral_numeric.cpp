#include "orbitforms/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>

namespace orbit {

std::vector<std::complex<Real100>> numeric_eigenvalues(const RationalMatrix& m) {
  using Mat = Eigen::Matrix<Real100, Eigen::Dynamic, Eigen::Dynamic>;
  Mat A(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j) A(i, j) = to_float<Real100>(m(i, j));
  Eigen::EigenSolver<Mat> es(A, false);
  if (es.info() != Eigen::Success) throw Inconsistency("numeric eigensolver did not converge");
  std::vector<std::complex<Real100>> out;
  for (Eigen::Index i = 0; i < A.rows(); ++i) out.push_back(es.eigenvalues()(i));
  return out;
}

OrthogonalityResult orthogonality_check(const Rational& nu2, const Rational& nu3, int pmax, int quadrature_levels) {
  const ModelBundle bc1 = build_bc1(nu2, nu3);
  const SpectrumRecord rec = spectrum(bc1, pmax, Formula::Corrected, std::nullopt, false);
  std::vector<NumericPoly<double>> phi;
  for (const auto& e : rec.entries)
    for (const auto& q : e.eigenpolys) phi.emplace_back(q);

  const double a = to_float<double>(nu2 + nu3) - 0.5;
  const double b = to_float<double>(nu2) - 0.5;
  boost::math::quadrature::tanh_sinh<double> integrator(quadrature_levels);
  auto inner = [&](std::size_t i, std::size_t j) {
    // xc is the distance to the nearer endpoint, which keeps the weight accurate there.
    auto f = [&](double x, double xc) {
      const double one_minus = x > 0 ? std::abs(xc) : 1 - x;
      const double one_plus = x > 0 ? 1 + x : std::abs(xc);
      const double t[1] = {x};
      return std::pow(one_minus, a) * std::pow(one_plus, b) * phi[i](t) * phi[j](t);
    };
    return integrator.integrate(f);
  };

  OrthogonalityResult r;
  r.pmax = pmax;
  std::vector<double> diag(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) diag[i] = inner(i, i);
  r.min_diag = diag.empty() ? 0 : *std::min_element(diag.begin(), diag.end());
  for (std::size_t i = 0; i < phi.size(); ++i)
    for (std::size_t j = i + 1; j < phi.size(); ++j)
      r.max_offdiag = std::max(r.max_offdiag, std::abs(inner(i, j)) / std::sqrt(diag[i] * diag[j]));
  return r;
}

}  // namespace orbit
