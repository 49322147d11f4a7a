#include "orbitforms/linsolve.hpp"

#include <utility>

namespace orbit {

Rref rref(RationalMatrix a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  std::vector<int> piv;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) a.row(p).swap(a.row(r));
    const Rational inv = 1 / a(r, c);
    for (Eigen::Index j = c; j < cols; ++j) a(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (Eigen::Index j = c; j < cols; ++j)
        if (a(r, j) != 0) a(i, j) -= f * a(r, j);
    }
    piv.push_back(static_cast<int>(c));
    ++r;
  }
  return {std::move(a), std::move(piv)};
}

RationalMatrix kernel(const RationalMatrix& a) {
  Rref R = rref(a);
  const Eigen::Index n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (int p : R.pivots) is_pivot[p] = true;
  std::vector<Eigen::Index> free;
  for (Eigen::Index j = 0; j < n; ++j)
    if (!is_pivot[j]) free.push_back(j);
  RationalMatrix K = RationalMatrix::Zero(n, static_cast<Eigen::Index>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) {
    const Eigen::Index f = free[k];
    K(f, k) = 1;
    for (int i = 0; i < R.rank(); ++i) K(R.pivots[i], k) = -R.m(i, f);
  }
  return K;
}

std::optional<RationalMatrix> solve(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix aug(a.rows(), a.cols() + b.cols());
  aug << a, b;
  Rref R = rref(aug);
  RationalMatrix x = RationalMatrix::Zero(a.cols(), b.cols());
  for (int i = 0; i < R.rank(); ++i) {
    if (R.pivots[i] >= a.cols()) return std::nullopt;
    for (Eigen::Index k = 0; k < b.cols(); ++k) x(R.pivots[i], k) = R.m(i, a.cols() + k);
  }
  return x;
}

std::vector<Rational> charpoly(const RationalMatrix& in) {
  RationalMatrix h = in;
  const Eigen::Index n = h.rows();
  // Similarity reduction to upper Hessenberg form.
  for (Eigen::Index k = 0; k + 2 <= n; ++k) {
    Eigen::Index p = k + 1;
    while (p < n && h(p, k) == 0) ++p;
    if (p == n) continue;
    if (p != k + 1) {
      h.row(p).swap(h.row(k + 1));
      h.col(p).swap(h.col(k + 1));
    }
    for (Eigen::Index i = k + 2; i < n; ++i) {
      if (h(i, k) == 0) continue;
      const Rational f = h(i, k) / h(k + 1, k);
      h.row(i) -= f * h.row(k + 1);
      h.col(k + 1) += f * h.col(i);
    }
  }
  // p_j = det(x I − H_j) for the leading j×j block.
  std::vector<std::vector<Rational>> p(n + 1);
  p[0] = {Rational(1)};
  for (Eigen::Index j = 1; j <= n; ++j) {
    const Eigen::Index m = j - 1;
    std::vector<Rational> cur(j + 1, Rational(0));
    for (std::size_t i = 0; i < p[m].size(); ++i) {
      cur[i + 1] += p[m][i];
      cur[i] -= h(m, m) * p[m][i];
    }
    Rational prod = 1;
    for (Eigen::Index i = m - 1; i >= 0; --i) {
      prod *= h(i + 1, i);
      if (prod == 0) break;
      const Rational w = prod * h(i, m);
      if (w == 0) continue;
      for (std::size_t q = 0; q < p[i].size(); ++q) cur[q] -= w * p[i][q];
    }
    p[j] = std::move(cur);
  }
  return p[n];
}

Rational polyval(const std::vector<Rational>& c, const Rational& x) {
  Rational s = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * x + *it;
  return s;
}

int root_multiplicity(std::vector<Rational> c, const Rational& x) {
  int k = 0;
  while (c.size() > 1 && polyval(c, x) == 0) {
    // Synthetic division by (t − x).
    std::vector<Rational> q(c.size() - 1);
    Rational carry = 0;
    for (std::size_t i = c.size(); i-- > 1;) {
      carry = c[i] + carry * x;
      q[i - 1] = carry;
    }
    c = std::move(q);
    ++k;
  }
  return k;
}

}  // namespace orbit
