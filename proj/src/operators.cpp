#include "snlab/operators.hpp"

#include <algorithm>
#include <cmath>

namespace snlab {

std::string to_string(NormKind nk) {
  switch (nk) {
    case NormKind::spectral: return "spectral";
    case NormKind::one: return "one";
    case NormKind::inf: return "inf";
  }
  return "spectral";
}

NormKind parse_norm_kind(std::string_view text) {
  if (text == "spectral") return NormKind::spectral;
  if (text == "one") return NormKind::one;
  if (text == "inf") return NormKind::inf;
  throw DomainError("unknown norm kind '" + std::string(text) + "'");
}

void require_finite(const ComplexMatrix& t, std::string_view what) {
  if (!t.allFinite()) throw DomainError(std::string(what) + ": matrix has non-finite entries");
}

std::vector<double> singular_values(const ComplexMatrix& t) {
  std::vector<double> out;
  if (t.size() == 0) return out;
  require_finite(t, "singular_values");
  Eigen::JacobiSVD<ComplexMatrix> svd(t);
  const auto& s = svd.singularValues();
  out.assign(s.data(), s.data() + s.size());
  return out;
}

bool is_hermitian(const ComplexMatrix& t, double rel_tol) {
  if (t.rows() != t.cols()) return false;
  const double scale = t.cwiseAbs().maxCoeff();
  return (t - t.adjoint()).cwiseAbs().maxCoeff() <= rel_tol * scale;
}

std::vector<Complex> eigenvalues(const ComplexMatrix& t) {
  if (t.rows() != t.cols()) throw DomainError("eigenvalues: matrix is not square");
  require_finite(t, "eigenvalues");
  std::vector<Complex> ev;
  if (is_hermitian(t)) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(t, Eigen::EigenvaluesOnly);
    for (Eigen::Index i = 0; i < t.rows(); ++i) ev.emplace_back(es.eigenvalues()(i), 0.0);
  } else {
    Eigen::ComplexEigenSolver<ComplexMatrix> es(t, false);
    for (Eigen::Index i = 0; i < t.rows(); ++i) ev.push_back(es.eigenvalues()(i));
  }
  std::stable_sort(ev.begin(), ev.end(), [](const Complex& a, const Complex& b) {
    const double ma = std::abs(a), mb = std::abs(b);
    if (ma != mb) return ma > mb;
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
  return ev;
}

SpectrumResult spectrum(const ComplexMatrix& t) {
  SpectrumResult r;
  r.eigenvalues = eigenvalues(t);
  r.singular_values = singular_values(t);
  return r;
}

std::vector<Complex> characteristic_polynomial(const ComplexMatrix& t) {
  if (t.rows() != t.cols()) throw DomainError("characteristic_polynomial: matrix is not square");
  const Eigen::Index n = t.rows();
  std::vector<Complex> c(n + 1);
  c[n] = 1.0;
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    m = t * m + c[n - k + 1] * id;
    c[n - k] = -(t * m).trace() / static_cast<double>(k);
  }
  return c;
}

double op_norm(const ComplexMatrix& t, NormKind nk) {
  if (t.size() == 0) return 0.0;
  switch (nk) {
    case NormKind::spectral: return singular_values(t).front();
    case NormKind::one: return t.cwiseAbs().colwise().sum().maxCoeff();
    case NormKind::inf: return t.cwiseAbs().rowwise().sum().maxCoeff();
  }
  return 0.0;
}

ComplexMatrix truncated_svd(const ComplexMatrix& t, int k) {
  ComplexMatrix a = ComplexMatrix::Zero(t.rows(), t.cols());
  if (k <= 0 || t.size() == 0) return a;
  Eigen::JacobiSVD<ComplexMatrix> svd(t, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const int terms = std::min<int>(k, static_cast<int>(svd.singularValues().size()));
  for (int j = 0; j < terms; ++j) {
    a += svd.singularValues()(j) * svd.matrixU().col(j) * svd.matrixV().col(j).adjoint();
  }
  return a;
}

namespace {

ComplexMatrix gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> nd;
  ComplexMatrix g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) g(i, j) = Complex(nd(rng), nd(rng));
  return g;
}

// Random-direction descent on the factors of A = L R for min ||T - L R||.
double descend_factors(const ComplexMatrix& t, ComplexMatrix& left, ComplexMatrix& right,
                       NormKind nk, int iterations, Rng& rng) {
  double best = op_norm(t - left * right, nk);
  const double scale = std::max(op_norm(t, nk), 1e-300);
  double step = 0.1;
  int failures = 0;
  for (int it = 0; it < iterations && step > 1e-10; ++it) {
    const bool move_left = (it % 2) == 0;
    ComplexMatrix& f = move_left ? left : right;
    ComplexMatrix dir = gaussian(f.rows(), f.cols(), rng);
    dir *= step * std::sqrt(scale) / std::max(dir.norm(), 1e-300);
    bool improved = false;
    for (double sign : {1.0, -1.0}) {
      f += sign * dir;
      const double v = op_norm(t - left * right, nk);
      if (v < best) {
        best = v;
        improved = true;
        break;
      }
      f -= sign * dir;
    }
    if (improved) {
      failures = 0;
      step *= 1.2;
    } else if (++failures >= 6) {
      failures = 0;
      step *= 0.5;
    }
  }
  return best;
}

}  // namespace

RankApproximation best_rank_k(const ComplexMatrix& t, int k, NormKind nk,
                              const LocalSearchOptions& opts) {
  require_finite(t, "best_rank_k");
  const int limit = static_cast<int>(std::min(t.rows(), t.cols()));
  if (k < 0 || k >= limit) {
    throw DomainError("best_rank_k: k = " + std::to_string(k) + " outside [0, " +
                      std::to_string(limit) + ")");
  }
  RankApproximation out;
  if (k == 0) {
    out.approximant = ComplexMatrix::Zero(t.rows(), t.cols());
    out.error = op_norm(t, nk);
    out.exact = true;
    return out;
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(t, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  if (nk == NormKind::spectral) {
    out.approximant = truncated_svd(t, k);
    out.error = s(k);
    out.exact = true;
    return out;
  }

  ComplexMatrix left0 = svd.matrixU().leftCols(k) * s.head(k).cwiseSqrt().asDiagonal();
  ComplexMatrix right0 = s.head(k).cwiseSqrt().asDiagonal() * svd.matrixV().leftCols(k).adjoint();
  out.approximant = left0 * right0;
  out.error = op_norm(t - out.approximant, nk);
  Rng rng(opts.seed);
  for (int r = 0; r < std::max(1, opts.restarts); ++r) {
    ComplexMatrix left = left0, right = right0;
    if (r > 0) {
      // Restarts perturb the SVD start; the first restart is the SVD itself.
      const double amp = 0.3 * std::sqrt(std::max(s(0), 1e-300));
      ComplexMatrix dl = gaussian(left.rows(), left.cols(), rng);
      ComplexMatrix dr = gaussian(right.rows(), right.cols(), rng);
      left += amp * dl / std::max(dl.norm(), 1e-300);
      right += amp * dr / std::max(dr.norm(), 1e-300);
    }
    const double v = descend_factors(t, left, right, nk, opts.iterations, rng);
    if (v < out.error) {
      out.error = v;
      out.approximant = left * right;
    }
  }
  // Zero residual is optimal whatever the norm.
  out.exact = out.error <= 1e-14 * std::max(op_norm(t, nk), 1e-300);
  return out;
}

double schmidt_reconstruct(const ComplexMatrix& t) {
  require_finite(t, "schmidt_reconstruct");
  if (t.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(t, Eigen::ComputeThinU | Eigen::ComputeThinV);
  ComplexMatrix rebuilt = ComplexMatrix::Zero(t.rows(), t.cols());
  for (Eigen::Index j = 0; j < svd.singularValues().size(); ++j) {
    rebuilt += svd.singularValues()(j) * svd.matrixU().col(j) * svd.matrixV().col(j).adjoint();
  }
  return op_norm(t - rebuilt, NormKind::spectral);
}

}  // namespace snlab
