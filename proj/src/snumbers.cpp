#include "snlab/snumbers.hpp"

#include <algorithm>
#include <cmath>

namespace snlab {

bool SNumberTable::all_exact() const {
  return std::all_of(alpha_exact.begin(), alpha_exact.end(), [](bool b) { return b; }) &&
         std::all_of(delta_exact.begin(), delta_exact.end(), [](bool b) { return b; });
}

namespace {

void check_range(const ComplexMatrix& t, int n_max, const char* what) {
  const int limit = static_cast<int>(std::min(t.rows(), t.cols()));
  if (n_max < 1 || n_max > limit) {
    throw DomainError(std::string(what) + ": n_max = " + std::to_string(n_max) +
                      " outside [1, " + std::to_string(limit) + "]");
  }
}

ComplexMatrix orthonormal_frame(const ComplexMatrix& a) {
  Eigen::HouseholderQR<ComplexMatrix> qr(a);
  return qr.householderQ() * ComplexMatrix::Identity(a.rows(), a.cols());
}

ComplexMatrix random_frame(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> nd;
  ComplexMatrix g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) g(i, j) = Complex(nd(rng), nd(rng));
  return orthonormal_frame(g);
}

// min_c ||v - G c||_1 by iteratively reweighted least squares.
double l1_distance(const Eigen::VectorXcd& v, const ComplexMatrix& g) {
  Eigen::VectorXcd c = g.adjoint() * v;
  double best = (v - g * c).cwiseAbs().sum();
  for (int it = 0; it < 60; ++it) {
    const Eigen::VectorXcd r = v - g * c;
    const double floor = 1e-12 * std::max(v.cwiseAbs().maxCoeff(), 1e-300);
    Eigen::VectorXd w = r.cwiseAbs().cwiseMax(floor).cwiseInverse();
    const ComplexMatrix gw = w.cwiseSqrt().asDiagonal() * g;
    const Eigen::VectorXcd vw = w.cwiseSqrt().asDiagonal() * v;
    c = gw.colPivHouseholderQr().solve(vw);
    const double val = (v - g * c).cwiseAbs().sum();
    if (val < best - 1e-15 * best) {
      best = val;
    } else {
      break;
    }
  }
  return best;
}

// Upper bound min_R ||T - G R||_inf by random descent on R from the projection.
double inf_quotient_bound(const ComplexMatrix& t, const ComplexMatrix& g, Rng& rng) {
  ComplexMatrix r = g.adjoint() * t;
  double best = op_norm(t - g * r, NormKind::inf);
  double step = 0.1 * std::max(best, 1e-300);
  std::normal_distribution<double> nd;
  int failures = 0;
  for (int it = 0; it < 200 && step > 1e-12 * best; ++it) {
    ComplexMatrix d(r.rows(), r.cols());
    for (Eigen::Index j = 0; j < d.cols(); ++j)
      for (Eigen::Index i = 0; i < d.rows(); ++i) d(i, j) = Complex(nd(rng), nd(rng));
    d *= step / std::max(d.norm(), 1e-300);
    bool improved = false;
    for (double sign : {1.0, -1.0}) {
      const ComplexMatrix trial = r + sign * d;
      const double v = op_norm(t - g * trial, NormKind::inf);
      if (v < best) {
        best = v;
        r = trial;
        improved = true;
        break;
      }
    }
    if (improved) {
      failures = 0;
    } else if (++failures >= 6) {
      failures = 0;
      step *= 0.5;
    }
  }
  return best;
}

}  // namespace

double quotient_norm(const ComplexMatrix& t, const ComplexMatrix& g, NormKind nk, Rng& rng) {
  if (g.cols() == 0) return op_norm(t, nk);
  switch (nk) {
    case NormKind::spectral:
      return op_norm(t - g * (g.adjoint() * t), NormKind::spectral);
    case NormKind::one: {
      // The extreme points of the l1 ball are unimodular multiples of e_j.
      double worst = 0.0;
      for (Eigen::Index j = 0; j < t.cols(); ++j) {
        worst = std::max(worst, l1_distance(t.col(j), g));
      }
      return worst;
    }
    case NormKind::inf:
      return inf_quotient_bound(t, g, rng);
  }
  return 0.0;
}

SNumberList approximation_numbers(const ComplexMatrix& t, NormKind nk, int n_max,
                                  const SearchOptions& opts) {
  require_finite(t, "approximation_numbers");
  check_range(t, n_max, "approximation_numbers");
  SNumberList out;
  if (nk == NormKind::spectral) {
    const auto s = singular_values(t);
    out.values.assign(s.begin(), s.begin() + n_max);
    out.exact.assign(n_max, true);
    return out;
  }
  LocalSearchOptions lso;
  lso.iterations = opts.iterations;
  lso.restarts = opts.restarts;
  for (int n = 1; n <= n_max; ++n) {
    lso.seed = opts.seed + static_cast<std::uint64_t>(n);
    const auto r = best_rank_k(t, n - 1, nk, lso);
    double v = r.error;
    bool exact = r.exact;
    // Smaller rank classes are contained in larger ones.
    if (!out.values.empty() && out.values.back() < v) {
      v = out.values.back();
      exact = out.exact.back() && v == 0.0;
    }
    out.values.push_back(v);
    out.exact.push_back(exact);
  }
  out.restarts = opts.restarts;
  return out;
}

SNumberList kolmogorov_diameters(const ComplexMatrix& t, NormKind nk, int n_max,
                                 const SearchOptions& opts) {
  require_finite(t, "kolmogorov_diameters");
  check_range(t, n_max, "kolmogorov_diameters");
  SNumberList out;
  if (nk == NormKind::spectral) {
    const auto s = singular_values(t);
    out.values.assign(s.begin(), s.begin() + n_max);
    out.exact.assign(n_max, true);
    return out;
  }
  out.values.push_back(op_norm(t, nk));
  out.exact.push_back(true);
  Eigen::JacobiSVD<ComplexMatrix> svd(t, Eigen::ComputeThinU);
  Rng rng(opts.seed);
  for (int n = 1; n < n_max; ++n) {
    double best = out.values.back();
    auto consider = [&](ComplexMatrix g) {
      double val = quotient_norm(t, g, nk, rng);
      // Local descent over frames: perturb, re-orthonormalize, keep if better.
      double step = 0.2;
      int failures = 0;
      std::normal_distribution<double> nd;
      for (int it = 0; it < opts.iterations && step > 1e-6; ++it) {
        ComplexMatrix d(g.rows(), g.cols());
        for (Eigen::Index j = 0; j < d.cols(); ++j)
          for (Eigen::Index i = 0; i < d.rows(); ++i) d(i, j) = Complex(nd(rng), nd(rng));
        const ComplexMatrix trial = orthonormal_frame(g + step * d / std::max(d.norm(), 1e-300));
        const double v = quotient_norm(t, trial, nk, rng);
        if (v < val) {
          val = v;
          g = trial;
          failures = 0;
        } else if (++failures >= 6) {
          failures = 0;
          step *= 0.5;
        }
      }
      best = std::min(best, val);
    };
    consider(svd.matrixU().leftCols(n));
    for (int r = 1; r < opts.restarts; ++r) consider(random_frame(t.rows(), n, rng));
    out.values.push_back(best);
    out.exact.push_back(best <= 1e-14 * std::max(out.values.front(), 1e-300));
  }
  out.restarts = opts.restarts;
  return out;
}

SNumberTable snumber_table(const ComplexMatrix& t, NormKind nk, int n_max, const SearchOptions& opts) {
  SNumberTable tab;
  tab.n_max = n_max;
  tab.norm = nk;
  auto a = approximation_numbers(t, nk, n_max, opts);
  auto d = kolmogorov_diameters(t, nk, n_max, opts);
  tab.alpha = std::move(a.values);
  tab.alpha_exact = std::move(a.exact);
  tab.delta = std::move(d.values);
  tab.delta_exact = std::move(d.exact);
  const auto s = singular_values(t);
  tab.singular.assign(s.begin(), s.begin() + n_max);
  if (t.rows() == t.cols()) {
    for (const auto& z : eigenvalues(t)) {
      if (static_cast<int>(tab.abs_eigen.size()) == n_max) break;
      tab.abs_eigen.push_back(std::abs(z));
    }
  }
  tab.restarts = nk == NormKind::spectral ? 0 : opts.restarts;
  return tab;
}

int numerical_rank(const ComplexMatrix& t, double rel_tol) {
  const auto s = singular_values(t);
  if (s.empty() || s.front() == 0.0) return 0;
  return static_cast<int>(
      std::count_if(s.begin(), s.end(), [&](double v) { return v > rel_tol * s.front(); }));
}

AxiomsReport snumber_axioms_check(const ComplexMatrix& t, const ComplexMatrix& s, NormKind nk,
                                  const SearchOptions& opts) {
  if (t.rows() != s.rows() || t.cols() != s.cols()) {
    throw DomainError("snumber_axioms_check: shape mismatch");
  }
  AxiomsReport rep;
  const int n_max = static_cast<int>(std::min(t.rows(), t.cols()));
  const auto tab = snumber_table(t, nk, n_max, opts);
  for (int n = 1; n < n_max; ++n) {
    if (tab.alpha[n] > tab.alpha[n - 1]) rep.alpha_monotone = false;
    if (tab.delta[n] > tab.delta[n - 1]) rep.delta_monotone = false;
  }
  rep.additivity_lhs = op_norm(t + s, nk);
  rep.additivity_rhs = op_norm(t, nk) + op_norm(s, nk);
  rep.additivity_holds = rep.additivity_lhs <= rep.additivity_rhs + 1e-10 * std::max(1.0, rep.additivity_rhs);
  rep.rank = numerical_rank(t);
  if (rep.rank < n_max) {
    rep.alpha_after_rank = tab.alpha[rep.rank];
    const double scale = tab.singular.empty() ? 0.0 : tab.singular.front();
    rep.rank_deficiency_holds = rep.alpha_after_rank <= 1e-8 * std::max(scale, 1e-300) || scale == 0.0;
  }
  return rep;
}

}  // namespace snlab
