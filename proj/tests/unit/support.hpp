#pragma once
// Hand-rolled generators and independent reference computations shared by the
// unit tests. Nothing here calls into the library's numerical routines.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "snlab/operators.hpp"

namespace testing {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Gen = std::mt19937_64;

inline Matrix gaussian_matrix(int rows, int cols, Gen& g, bool complex_entries = true) {
  std::normal_distribution<double> n;
  Matrix m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = Complex(n(g), complex_entries ? n(g) : 0.0);
  return m;
}

inline Matrix random_unitary(int n, Gen& g) {
  Eigen::HouseholderQR<Matrix> qr(gaussian_matrix(n, n, g));
  return qr.householderQ();
}

inline Matrix diagonal(const std::vector<double>& d) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = d[i];
  return m;
}

inline Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (double v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline std::vector<double> random_vector(std::size_t n, Gen& g) {
  std::normal_distribution<double> d;
  std::vector<double> v(n);
  for (auto& x : v) x = d(g);
  return v;
}

/// Non-increasing nonnegative sequence with random gaps.
inline std::vector<double> random_nonincreasing(std::size_t n, Gen& g) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> v(n);
  double cur = 1.0 + u(g);
  for (auto& x : v) {
    cur *= u(g);
    x = cur;
  }
  return v;
}

/// Selection sort of absolute values, descending.
inline std::vector<double> naive_sorted_abs(const std::vector<Complex>& x) {
  std::vector<double> a;
  for (const auto& z : x) a.push_back(std::abs(z));
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::size_t best = i;
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[j] > a[best]) best = j;
    std::swap(a[i], a[best]);
  }
  return a;
}

/// Largest singular value by power iteration on T* T.
inline double power_norm(const Matrix& t, int iters = 5000) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(t.cols());
  double est = 0.0;
  for (int k = 0; k < iters; ++k) {
    Eigen::VectorXcd w = t.adjoint() * (t * v);
    const double nrm = w.norm();
    if (nrm == 0.0) return 0.0;
    const double next = std::sqrt(nrm / v.norm());
    v = w / nrm;
    if (std::abs(next - est) < 1e-15 * next) return next;
    est = next;
  }
  return est;
}

/// Singular values from the eigenvalues of T* T (self-adjoint solver).
inline std::vector<double> gram_singular_values(const Matrix& t) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(t.adjoint() * t);
  std::vector<double> s;
  for (Eigen::Index i = es.eigenvalues().size(); i-- > 0;) s.push_back(std::sqrt(std::max(es.eigenvalues()(i), 0.0)));
  return s;
}

/// Singular values by a divide-and-conquer SVD (a different Eigen path).
inline std::vector<double> bdc_singular_values(const Matrix& t) {
  Eigen::BDCSVD<Matrix> svd(t);
  std::vector<double> s(svd.singularValues().data(), svd.singularValues().data() + svd.singularValues().size());
  return s;
}

inline double rel_err(double got, double want) {
  const double d = std::abs(got - want);
  return want == 0.0 ? d : d / std::abs(want);
}

}  // namespace testing
