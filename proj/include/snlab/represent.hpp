#pragma once

#include <span>
#include <vector>

#include "snlab/hop.hpp"
#include "snlab/seqspace.hpp"

namespace snlab {

/// Quasi-norms of an H-operator in the approximation space built from its
/// eigenvalues (value_lambda) and from its approximation numbers
/// (value_alpha).
struct OperatorApproxNorm {
  double value_lambda = 0.0;
  double value_alpha = 0.0;
  double ratio = 0.0;  // value_alpha / value_lambda; 1 when both vanish
};

/// Refuses (DomainError) operators whose certificate has a non-real spectrum.
OperatorApproxNorm operator_approx_norm(const ComplexMatrix& t, const HCertificate& cert,
                                        const ApproxSpaceParams& ap);

/// ell_mu-weighted eigenvalue quasi-norm ||(n^{rho-1/mu} |lambda_n|)||_{ell_mu}.
double eigen_approx_norm(const ComplexMatrix& t, const ApproxSpaceParams& ap);

struct InclusionReport {
  std::vector<double> ratios;  // ||T||_{A^rho_mu2} / ||T||_{A^rho_mu1}
  double max_ratio = 0.0;
  double min_slack = 0.0;      // min of (||T||_mu1 - ||T||_mu2) / ||T||_mu1
  bool finite = true;
};

InclusionReport inclusion_experiment(std::span<const ComplexMatrix> corpus, double rho,
                                     const ExtendedReal& mu1, const ExtendedReal& mu2);

/// Blocks g_0..g_{M+1} of T = sum g_n built from best rank-(2^n - 1)
/// approximants g*_0..g*_M: g_0 = g_1 = 0, g_{n+2} = g*_{n+1} - g*_n.
struct DyadicDecomposition {
  std::vector<ComplexMatrix> blocks;
  std::vector<double> block_norms;
  std::vector<int> block_ranks;
  /// residuals[N] = ||T - sum_{n <= N} g_n||.
  std::vector<double> residuals;
  /// alpha_{2^n}(T), n = 0..M, for the block bound ||g_{n+2}|| <= 4 alpha_{2^n}.
  std::vector<double> alpha_dyadic;
  double rep_norm = 0.0;
  /// True when g*_M does not reach T (2^M - 1 < rank T).
  bool floor_residual = false;
  int levels = 0;
};

DyadicDecomposition dyadic_decompose(const ComplexMatrix& t, const ApproxSpaceParams& ap, int levels);

/// ell_mu norm of (2^{n rho} ||g_n||).
double representation_norm(std::span<const double> block_norms, const ApproxSpaceParams& ap);

struct RepEquivalenceReport {
  double canonical_rep_norm = 0.0;
  /// Best (smallest) over canonical, greedy and randomized decompositions.
  double rep_norm = 0.0;
  double a_norm = 0.0;
  double ratio = 0.0;  // rep_norm / a_norm
  int trials = 0;
  double band_lo = 0.0;
  double band_hi = 0.0;
  bool within_band = true;
};

/// Upper estimate of the representation quasi-norm (infimum over
/// decompositions) and its ratio to the eigenvalue quasi-norm.
RepEquivalenceReport representation_equivalence(const ComplexMatrix& t, const ApproxSpaceParams& ap,
                                                int levels, int trials, std::uint64_t seed,
                                                double band_lo = 1.0 / 64.0, double band_hi = 64.0);

/// Smallest M with 2^M - 1 >= n, but at least 2 (the minimum dyadic_decompose accepts).
int dyadic_levels_for(Eigen::Index n);

}  // namespace snlab
