#pragma once

#include <vector>

#include "snlab/operators.hpp"

namespace snlab {

/// A list of s-numbers with a per-entry flag telling whether the value is the
/// exact infimum or only an achieved upper bound.
struct SNumberList {
  std::vector<double> values;
  std::vector<bool> exact;
  int restarts = 0;
};

/// Index conventions: alpha[0] is alpha_1 (rank <= 0 approximants, so it is
/// ||T||); delta[0] is delta_0 (dim G <= 0, also ||T||).
struct SNumberTable {
  int n_max = 0;
  NormKind norm = NormKind::spectral;
  std::vector<double> alpha;      // alpha_1 .. alpha_{n_max}
  std::vector<double> delta;      // delta_0 .. delta_{n_max-1}
  std::vector<double> singular;   // s_1 .. s_{n_max}
  std::vector<double> abs_eigen;  // |lambda_1| .. |lambda_{n_max}|; empty if not square
  std::vector<bool> alpha_exact;
  std::vector<bool> delta_exact;
  int restarts = 0;

  bool all_exact() const;
};

struct SearchOptions {
  int restarts = 4;
  int iterations = 300;
  std::uint64_t seed = 0x5eed;
};

/// alpha_n = inf{||T - A|| : rank A <= n-1}, n = 1..n_max.
SNumberList approximation_numbers(const ComplexMatrix& t, NormKind nk, int n_max,
                                  const SearchOptions& opts = {});

/// delta_n = inf{||Q_G T|| : dim G <= n}, n = 0..n_max-1. Exact (s_{n+1}) for
/// the spectral norm; otherwise the best quotient norm found over frames G
/// optimized by random restarts and local descent.
SNumberList kolmogorov_diameters(const ComplexMatrix& t, NormKind nk, int n_max,
                                 const SearchOptions& opts = {});

/// Norm of the quotient map applied to T for the subspace spanned by the
/// orthonormal columns of g: sup_{||x|| <= 1} dist(Tx, span g). Exact for
/// spectral and one norms (up to the inner L1 regression), an upper bound for
/// inf.
double quotient_norm(const ComplexMatrix& t, const ComplexMatrix& g, NormKind nk, Rng& rng);

SNumberTable snumber_table(const ComplexMatrix& t, NormKind nk, int n_max,
                           const SearchOptions& opts = {});

struct AxiomsReport {
  bool alpha_monotone = true;
  bool delta_monotone = true;
  double additivity_lhs = 0.0;  // alpha_1(T + S)
  double additivity_rhs = 0.0;  // alpha_1(T) + alpha_1(S)
  bool additivity_holds = true;
  int rank = 0;
  /// alpha_{rank+1}, zero when T is rank deficient.
  double alpha_after_rank = 0.0;
  bool rank_deficiency_holds = true;
  bool ok() const {
    return alpha_monotone && delta_monotone && additivity_holds && rank_deficiency_holds;
  }
};

/// Monotonicity of the s-number lists of T, alpha_1(T+S) <= alpha_1(T) +
/// alpha_1(S), and alpha_{rank+1} = 0 for rank-deficient T.
AxiomsReport snumber_axioms_check(const ComplexMatrix& t, const ComplexMatrix& s, NormKind nk,
                                  const SearchOptions& opts = {});

/// Numerical rank: count of singular values above rel_tol * s_1.
int numerical_rank(const ComplexMatrix& t, double rel_tol = 1e-10);

}  // namespace snlab
