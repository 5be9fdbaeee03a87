#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "snlab/common.hpp"

namespace snlab {

/// Dense complex matrix standing in for a bounded operator.
using ComplexMatrix = Eigen::MatrixXcd;

enum class NormKind { spectral, one, inf };

std::string to_string(NormKind nk);
NormKind parse_norm_kind(std::string_view text);

struct SpectrumResult {
  /// With multiplicity, sorted by non-increasing modulus (ties: larger real
  /// part first, then larger imaginary part). Empty for non-square input.
  std::vector<Complex> eigenvalues;
  /// Non-increasing, min(rows, cols) entries.
  std::vector<double> singular_values;
};

/// Throws DomainError when T has non-finite entries.
void require_finite(const ComplexMatrix& t, std::string_view what);

std::vector<double> singular_values(const ComplexMatrix& t);
/// Throws DomainError for non-square input.
std::vector<Complex> eigenvalues(const ComplexMatrix& t);
/// Eigenvalues and singular values. Throws DomainError when T is not square.
SpectrumResult spectrum(const ComplexMatrix& t);

bool is_hermitian(const ComplexMatrix& t, double rel_tol = 0.0);

/// Coefficients c_0..c_n of det(z I - T) = z^n + c_{n-1} z^{n-1} + ... + c_0,
/// by the Faddeev-LeVerrier recursion.
std::vector<Complex> characteristic_polynomial(const ComplexMatrix& t);

/// spectral: largest singular value; one: max column sum; inf: max row sum.
double op_norm(const ComplexMatrix& t, NormKind nk = NormKind::spectral);

struct LocalSearchOptions {
  int iterations = 400;
  int restarts = 4;
  std::uint64_t seed = 0x5eed;
};

struct RankApproximation {
  ComplexMatrix approximant;
  double error = 0.0;
  /// True when error is the exact minimum (spectral norm, or k = 0);
  /// otherwise error is only an achieved upper bound.
  bool exact = false;
};

/// Truncated singular expansion with k terms.
ComplexMatrix truncated_svd(const ComplexMatrix& t, int k);

/// Best approximation by matrices of rank <= k. Exact (Eckart-Young) for the
/// spectral norm; for one/inf norms a seeded local search started from the
/// truncated SVD, returning the achieved norm as an upper bound.
RankApproximation best_rank_k(const ComplexMatrix& t, int k, NormKind nk = NormKind::spectral,
                              const LocalSearchOptions& opts = {});

/// Spectral norm of T minus its rebuild from the full singular system.
double schmidt_reconstruct(const ComplexMatrix& t);

}  // namespace snlab
