#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "snlab/operators.hpp"
#include "snlab/seqspace.hpp"

namespace snlab {

enum class CorpusKind { real_diagonal, conjugated_h, hermitian, random_dense };

std::string to_string(CorpusKind k);
/// Accepts "real-diagonal", "conjugated-H" (any case), "hermitian", "random-dense".
CorpusKind parse_corpus_kind(std::string_view text);

struct CorpusSpec {
  CorpusKind kind = CorpusKind::real_diagonal;
  int dim = 8;
  int count = 1;
  std::uint64_t seed = 0;
  double kappa_cap = 10.0;  // conjugated-H only

  static constexpr int max_dim = 500;
  static constexpr int max_count = 100000;
  /// Throws DomainError when a limit is exceeded.
  void validate() const;
};

/// Matrix k of the corpus depends only on (spec, k): each member draws from
/// its own generator seeded from the corpus seed and k.
ComplexMatrix corpus_member(const CorpusSpec& spec, int k);
std::vector<ComplexMatrix> gen_corpus(const CorpusSpec& spec);

/// Writes <dir>/<kind>_<dim>_<k>.json for k = 0..count-1; returns the paths.
std::vector<std::filesystem::path> write_corpus(const CorpusSpec& spec, const std::filesystem::path& dir);

/// Random orthogonal matrix (Haar, via sign-corrected QR of a Gaussian).
Eigen::MatrixXd random_orthogonal(int n, Rng& rng);

/// Real conjugating matrix with unit columns and condition number <= cap,
/// and the diagonal it conjugates. Returns P diag(d) P^{-1}.
ComplexMatrix conjugated_h(int n, double cap, Rng& rng);

/// Gaussian sequences of the given length.
std::vector<SeqSample> gaussian_sequences(std::size_t count, std::size_t length, Rng& rng);
/// Decaying sequences u_k k^{-beta} with beta uniform in [lo, hi], u_k in [0.5, 1].
std::vector<SeqSample> decaying_sequences(std::size_t count, std::size_t length, double beta_lo,
                                          double beta_hi, Rng& rng);

/// Seed for the k-th sub-stream of a base seed (splitmix64 mixing).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t k);

}  // namespace snlab
