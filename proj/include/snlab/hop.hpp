#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "snlab/operators.hpp"
#include "snlab/snumbers.hpp"

namespace snlab {

/// Region of the complex plane sampled when estimating the resolvent
/// constant. Offsets are relative to ||T||.
struct GridSpec {
  int re_points = 64;
  int im_points = 32;
  double im_min = 1e-6;
  double im_max = 1.0;
  /// Also sample Re(lambda) at the real part of every eigenvalue.
  bool eigen_real_parts = true;
  /// Pattern-search iterations around the best sample; 0 disables refinement.
  int refine_iterations = 60;

  std::string describe() const;
};

/// Verdict on the H-operator property: real spectrum and
/// ||(T - lambda I)^{-1}|| <= C / |Im lambda| for Im lambda != 0.
struct HCertificate {
  bool is_real_spectrum = false;
  double max_abs_imag = 0.0;
  double op_norm = 0.0;
  /// Largest sampled |Im lambda| * ||(T - lambda I)^{-1}|| (a lower estimate
  /// of the true supremum).
  double c_estimate = 0.0;
  /// Same, restricted to the grid before refinement.
  double c_grid = 0.0;
  /// kappa(P) for T = P D P^{-1}; present when T is diagonalizable.
  std::optional<double> c_upper;
  std::string sample_grid;
  std::size_t samples = 0;
  std::vector<std::string> log;

  bool is_h() const { return is_real_spectrum && c_upper.has_value(); }
  /// The constant used in inequality checks: c_upper when present.
  double constant() const { return c_upper ? *c_upper : c_estimate; }
};

/// Evaluates |Im lambda| * ||(T - lambda I)^{-1}||_2 at many points, reusing one
/// Schur factorization of T.
class ResolventSampler {
 public:
  explicit ResolventSampler(const ComplexMatrix& t);

  /// ||(T - z I)^{-1}||_2, or nullopt when T - zI is exactly singular.
  std::optional<double> resolvent_norm(Complex z) const;
  bool is_normal() const { return normal_; }

 private:
  ComplexMatrix schur_;
  bool normal_ = false;
};

HCertificate certify_h(const ComplexMatrix& t, double tol_real_spectrum = 1e-8,
                       const GridSpec& grid = {});

/// One row of the chain delta_{n-1} <= alpha_n <= 2 sqrt2 C |lambda_n|
/// <= 8 C (C+1) delta_{n-1}. Slacks are relative to alpha_1.
struct MarkusRow {
  int n = 0;
  double delta_prev = 0.0;
  double alpha = 0.0;
  double abs_lambda = 0.0;
  double slack_left = 0.0;
  double slack_mid = 0.0;
  double slack_right = 0.0;
  bool exact = true;
};

struct MarkusReport {
  bool refused = false;
  std::string reason;
  double c_used = 0.0;
  std::string c_source;
  std::vector<MarkusRow> rows;
  /// sign(alpha_n - |lambda_n|) per n; reported even when refused.
  std::vector<int> alpha_vs_eigen;
  double min_slack = 0.0;
  bool verdict = false;
};

MarkusReport markus_verify(const ComplexMatrix& t, const HCertificate& cert,
                           const SNumberTable& table);

struct CorollaryRow {
  std::size_t dim = 0;
  double norm_lambda = 0.0;
  double norm_delta = 0.0;
  double norm_alpha = 0.0;
  /// Largest ratio between any two of the three norms (1 when all vanish).
  double max_ratio = 1.0;
};

/// Finite-dimensional view of the equivalence |lambda_n| in ell_mu <=>
/// delta_n in ell_mu <=> alpha_n in ell_mu along a growing family.
struct CorollaryReport {
  ExtendedReal mu;
  double c = 1.0;
  double factor_bound = 16.0;  // 8 C (C+1)
  std::vector<CorollaryRow> rows;
  /// norm(last) / norm(previous) for the |lambda| sequence.
  double last_growth = 1.0;
  bool saturated = true;
  bool within_factor = true;
};

/// Diagonal operator family diag(d_1..d_N), truncated at N = 2, 4, 8, ... and
/// at the horizon. All three sequences are computed exactly from |d|.
CorollaryReport corollary_equivalence(std::span<const double> diagonal, const ExtendedReal& mu,
                                      std::size_t horizon);

/// Dense family of certified H-operators with constant c.
CorollaryReport corollary_equivalence(std::span<const ComplexMatrix> family, const ExtendedReal& mu,
                                      double c);

}  // namespace snlab
