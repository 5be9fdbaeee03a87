#include "snlab/hop.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace snlab {

std::string GridSpec::describe() const {
  std::ostringstream os;
  os << "re: " << re_points << " pts on [min Re - |T|, max Re + |T|]"
     << (eigen_real_parts ? " + eigenvalue real parts" : "") << "; im: +/- " << im_points
     << " log-spaced pts on [" << im_min << ", " << im_max << "]*|T|; refine: "
     << refine_iterations;
  return os.str();
}

ResolventSampler::ResolventSampler(const ComplexMatrix& t) {
  Eigen::ComplexSchur<ComplexMatrix> cs(t);
  schur_ = cs.matrixT();
  const double scale = std::max(schur_.cwiseAbs().maxCoeff(), 1e-300);
  double off = 0.0;
  for (Eigen::Index j = 0; j < schur_.cols(); ++j)
    for (Eigen::Index i = 0; i < j; ++i) off = std::max(off, std::abs(schur_(i, j)));
  normal_ = off <= 1e-13 * scale;
}

std::optional<double> ResolventSampler::resolvent_norm(Complex z) const {
  const Eigen::Index n = schur_.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (schur_(i, i) == z) return std::nullopt;
  }
  if (normal_) {
    double worst = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) worst = std::max(worst, 1.0 / std::abs(schur_(i, i) - z));
    return worst;
  }
  // Power iteration on (M^* M)^{-1}, M = R - zI upper triangular.
  ComplexMatrix m = schur_;
  m.diagonal().array() -= z;
  const auto upper = m.triangularView<Eigen::Upper>();
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(n) / std::sqrt(static_cast<double>(n));
  double est = 0.0;
  for (int it = 0; it < 200; ++it) {
    Eigen::VectorXcd w = upper.adjoint().solve(v);
    const double next = w.norm();
    v = upper.solve(w);
    const double vn = v.norm();
    if (!std::isfinite(vn) || vn == 0.0) return std::nullopt;
    v /= vn;
    if (std::abs(next - est) <= 1e-12 * next) {
      est = next;
      break;
    }
    est = next;
  }
  return est;
}

namespace {

double kappa_of_eigenvectors(const ComplexMatrix& t, std::vector<std::string>& log) {
  if (is_hermitian(t)) return 1.0;
  Eigen::ComplexEigenSolver<ComplexMatrix> es(t, true);
  ComplexMatrix p = es.eigenvectors();
  for (Eigen::Index j = 0; j < p.cols(); ++j) {
    const double nrm = p.col(j).norm();
    if (nrm > 0.0) p.col(j) /= nrm;
  }
  const auto s = singular_values(p);
  if (s.empty() || s.back() <= 1e-8 * s.front()) {
    log.emplace_back("eigenvector matrix numerically singular: not diagonalizable");
    return std::numeric_limits<double>::infinity();
  }
  return s.front() / s.back();
}

}  // namespace

HCertificate certify_h(const ComplexMatrix& t, double tol_real_spectrum, const GridSpec& grid) {
  if (t.rows() != t.cols()) throw DomainError("certify_h: matrix is not square");
  require_finite(t, "certify_h");
  HCertificate cert;
  cert.sample_grid = grid.describe();
  cert.op_norm = op_norm(t);
  const Eigen::Index n = t.rows();
  if (n == 0) throw DomainError("certify_h: empty matrix");

  const auto ev = eigenvalues(t);
  double re_lo = std::numeric_limits<double>::infinity(), re_hi = -re_lo;
  for (const auto& z : ev) {
    cert.max_abs_imag = std::max(cert.max_abs_imag, std::abs(z.imag()));
    re_lo = std::min(re_lo, z.real());
    re_hi = std::max(re_hi, z.real());
  }
  cert.is_real_spectrum = cert.max_abs_imag <= tol_real_spectrum * cert.op_norm;

  const double kappa = kappa_of_eigenvectors(t, cert.log);
  if (std::isfinite(kappa)) cert.c_upper = kappa;

  if (cert.op_norm == 0.0) {
    // The zero matrix: (T - lambda)^{-1} = -1/lambda, so the bound is exactly 1.
    cert.c_estimate = cert.c_grid = 1.0;
    cert.samples = 1;
    return cert;
  }

  const ResolventSampler sampler(t);
  const double scale = cert.op_norm;
  std::vector<double> re_samples;
  const int rp = std::max(grid.re_points, 1);
  for (int i = 0; i < rp; ++i) {
    const double frac = rp == 1 ? 0.5 : static_cast<double>(i) / (rp - 1);
    re_samples.push_back(re_lo - scale + frac * (re_hi - re_lo + 2.0 * scale));
  }
  if (grid.eigen_real_parts) {
    for (const auto& z : ev) re_samples.push_back(z.real());
  }
  std::vector<double> im_samples;
  const int ip = std::max(grid.im_points, 1);
  const double lo = std::log(grid.im_min), hi = std::log(grid.im_max);
  for (int j = 0; j < ip; ++j) {
    const double frac = ip == 1 ? 1.0 : static_cast<double>(j) / (ip - 1);
    im_samples.push_back(scale * std::exp(lo + frac * (hi - lo)));
  }

  auto evaluate = [&](double a, double b) -> std::optional<double> {
    const auto r = sampler.resolvent_norm(Complex(a, b));
    if (!r) return std::nullopt;
    return std::abs(b) * *r;
  };

  double best = 0.0, best_a = re_samples.front(), best_b = im_samples.front();
  std::size_t discarded = 0;
  for (double a : re_samples) {
    for (double b0 : im_samples) {
      for (double b : {b0, -b0}) {
        const auto v = evaluate(a, b);
        ++cert.samples;
        if (!v) {
          ++discarded;
          continue;
        }
        if (*v > best) {
          best = *v;
          best_a = a;
          best_b = b;
        }
      }
    }
  }
  if (discarded > 0) {
    cert.log.push_back("discarded " + std::to_string(discarded) + " samples with singular T - lambda I");
  }
  cert.c_grid = best;

  // Pattern search in (Re lambda, log |Im lambda|) around the best sample.
  double da = (re_hi - re_lo + 2.0 * scale) / std::max(rp - 1, 1);
  double dl = (hi - lo) / std::max(ip - 1, 1);
  const double sign = best_b < 0 ? -1.0 : 1.0;
  double la = std::log(std::abs(best_b));
  for (int it = 0; it < grid.refine_iterations; ++it) {
    bool moved = false;
    // |Im lambda| stays inside the sampled band: below it the imaginary
    // roundoff of the computed Schur diagonal dominates the quotient.
    const double la_lo = lo + std::log(scale), la_hi = hi + std::log(scale);
    const double cand[4][2] = {{best_a + da, la}, {best_a - da, la},
                               {best_a, std::min(la + dl, la_hi)}, {best_a, std::max(la - dl, la_lo)}};
    for (const auto& c : cand) {
      const auto v = evaluate(c[0], sign * std::exp(c[1]));
      ++cert.samples;
      if (v && *v > best) {
        best = *v;
        best_a = c[0];
        la = c[1];
        moved = true;
        break;
      }
    }
    if (!moved) {
      da *= 0.5;
      dl *= 0.5;
    }
  }
  cert.c_estimate = best;
  return cert;
}

MarkusReport markus_verify(const ComplexMatrix& t, const HCertificate& cert, const SNumberTable& table) {
  MarkusReport rep;
  const int n_max = table.n_max;
  if (static_cast<int>(table.abs_eigen.size()) < n_max || static_cast<int>(table.alpha.size()) < n_max ||
      static_cast<int>(table.delta.size()) < n_max) {
    throw DomainError("markus_verify: table is incomplete or the matrix is not square");
  }
  if (t.rows() != t.cols()) throw DomainError("markus_verify: matrix is not square");
  for (int n = 0; n < n_max; ++n) {
    const double d = table.alpha[n] - table.abs_eigen[n];
    const double tol = 1e-12 * std::max(table.alpha.front(), 1e-300);
    rep.alpha_vs_eigen.push_back(d > tol ? 1 : (d < -tol ? -1 : 0));
  }
  if (!cert.is_real_spectrum) {
    rep.refused = true;
    rep.reason = "spectrum is not real (max |Im lambda| = " + std::to_string(cert.max_abs_imag) + ")";
    return rep;
  }
  if (!cert.c_upper) {
    rep.refused = true;
    rep.reason = "not diagonalizable: no finite resolvent constant (sampled C = " +
                 std::to_string(cert.c_estimate) + ")";
    return rep;
  }
  rep.c_used = *cert.c_upper;
  rep.c_source = "c_upper";
  const double c = rep.c_used;
  const double scale = std::max(table.alpha.front(), 1e-300);
  rep.min_slack = std::numeric_limits<double>::infinity();
  bool all_exact = true;
  for (int n = 1; n <= n_max; ++n) {
    MarkusRow row;
    row.n = n;
    row.delta_prev = table.delta[n - 1];
    row.alpha = table.alpha[n - 1];
    row.abs_lambda = table.abs_eigen[n - 1];
    row.exact = table.alpha_exact[n - 1] && table.delta_exact[n - 1];
    const double mid = 2.0 * std::numbers::sqrt2 * c * row.abs_lambda;
    row.slack_left = (row.alpha - row.delta_prev) / scale;
    row.slack_mid = (mid - row.alpha) / scale;
    row.slack_right = (8.0 * c * (c + 1.0) * row.delta_prev - mid) / scale;
    // Upper-bound entries only support the one-sided checks they bound.
    if (row.exact) {
      rep.min_slack = std::min({rep.min_slack, row.slack_left, row.slack_mid, row.slack_right});
    } else {
      all_exact = false;
    }
    rep.rows.push_back(row);
  }
  if (!all_exact) {
    rep.reason = "some rows hold upper bounds only and were not aggregated";
  }
  rep.verdict = rep.min_slack >= -1e-8;
  return rep;
}

namespace {

CorollaryRow corollary_row(std::size_t dim, std::span<const double> abs_lambda,
                           std::span<const double> delta, std::span<const double> alpha,
                           const ExtendedReal& mu) {
  CorollaryRow row;
  row.dim = dim;
  row.norm_lambda = lebesgue_norm(abs_lambda, mu);
  row.norm_delta = lebesgue_norm(delta, mu);
  row.norm_alpha = lebesgue_norm(alpha, mu);
  const double lo = std::min({row.norm_lambda, row.norm_delta, row.norm_alpha});
  const double hi = std::max({row.norm_lambda, row.norm_delta, row.norm_alpha});
  row.max_ratio = hi == 0.0 ? 1.0 : (lo == 0.0 ? std::numeric_limits<double>::infinity() : hi / lo);
  return row;
}

void finish(CorollaryReport& rep) {
  rep.factor_bound = 8.0 * rep.c * (rep.c + 1.0);
  rep.within_factor = std::all_of(rep.rows.begin(), rep.rows.end(),
                                  [&](const CorollaryRow& r) { return r.max_ratio <= rep.factor_bound; });
  if (rep.rows.size() >= 2) {
    const double prev = rep.rows[rep.rows.size() - 2].norm_lambda;
    const double last = rep.rows.back().norm_lambda;
    rep.last_growth = prev > 0.0 ? last / prev : 1.0;
  }
  rep.saturated = rep.last_growth - 1.0 < 1e-3;
}

}  // namespace

CorollaryReport corollary_equivalence(std::span<const double> diagonal, const ExtendedReal& mu,
                                      std::size_t horizon) {
  if (horizon == 0 || horizon > diagonal.size()) {
    throw DomainError("corollary_equivalence: horizon must be in [1, diagonal length]");
  }
  CorollaryReport rep;
  rep.mu = mu;
  std::vector<std::size_t> dims;
  for (std::size_t d = 2; d < horizon; d *= 2) dims.push_back(d);
  dims.push_back(horizon);
  for (std::size_t dim : dims) {
    // For a diagonal operator all three sequences are the sorted |d_n|.
    std::vector<double> s(dim);
    for (std::size_t i = 0; i < dim; ++i) s[i] = std::abs(diagonal[i]);
    std::sort(s.begin(), s.end(), std::greater<>());
    rep.rows.push_back(corollary_row(dim, s, s, s, mu));
  }
  finish(rep);
  return rep;
}

CorollaryReport corollary_equivalence(std::span<const ComplexMatrix> family, const ExtendedReal& mu,
                                      double c) {
  CorollaryReport rep;
  rep.mu = mu;
  rep.c = c;
  for (const auto& t : family) {
    if (t.rows() != t.cols()) throw DomainError("corollary_equivalence: matrix is not square");
    std::vector<double> lam;
    for (const auto& z : eigenvalues(t)) lam.push_back(std::abs(z));
    const auto s = singular_values(t);  // alpha_n = s_n, delta_{n-1} = s_n
    rep.rows.push_back(corollary_row(static_cast<std::size_t>(t.rows()), lam, s, s, mu));
  }
  finish(rep);
  return rep;
}

}  // namespace snlab
