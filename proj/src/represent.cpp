#include "snlab/represent.hpp"

#include <algorithm>
#include <cmath>

namespace snlab {

double eigen_approx_norm(const ComplexMatrix& t, const ApproxSpaceParams& ap) {
  std::vector<double> lam;
  for (const auto& z : eigenvalues(t)) lam.push_back(std::abs(z));
  return approx_space_norm(std::span<const double>(lam), ap).value;
}

OperatorApproxNorm operator_approx_norm(const ComplexMatrix& t, const HCertificate& cert,
                                        const ApproxSpaceParams& ap) {
  if (!cert.is_real_spectrum) {
    throw DomainError("operator_approx_norm: spectrum is not real, not an H-operator");
  }
  OperatorApproxNorm out;
  out.value_lambda = eigen_approx_norm(t, ap);
  const auto s = singular_values(t);
  out.value_alpha = approx_space_norm(std::span<const double>(s), ap).value;
  if (out.value_lambda > 0.0) {
    out.ratio = out.value_alpha / out.value_lambda;
  } else {
    out.ratio = out.value_alpha == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  }
  return out;
}

InclusionReport inclusion_experiment(std::span<const ComplexMatrix> corpus, double rho,
                                     const ExtendedReal& mu1, const ExtendedReal& mu2) {
  if (!(mu1 <= mu2)) throw DomainError("inclusion_experiment: needs mu1 <= mu2");
  const ApproxSpaceParams a1(rho, mu1), a2(rho, mu2);
  InclusionReport rep;
  rep.min_slack = std::numeric_limits<double>::infinity();
  for (const auto& t : corpus) {
    std::vector<double> lam;
    for (const auto& z : eigenvalues(t)) lam.push_back(std::abs(z));
    const double n1 = approx_space_norm(std::span<const double>(lam), a1).value;
    const double n2 = approx_space_norm(std::span<const double>(lam), a2).value;
    const double ratio = n1 > 0.0 ? n2 / n1 : (n2 == 0.0 ? 1.0 : std::numeric_limits<double>::infinity());
    rep.ratios.push_back(ratio);
    rep.max_ratio = std::max(rep.max_ratio, ratio);
    if (n1 > 0.0) rep.min_slack = std::min(rep.min_slack, (n1 - n2) / n1);
    if (!std::isfinite(ratio)) rep.finite = false;
  }
  if (rep.ratios.empty()) rep.min_slack = 0.0;
  return rep;
}

int dyadic_levels_for(Eigen::Index n) {
  int m = 0;
  while ((Eigen::Index{1} << m) - 1 < n) ++m;
  return std::max(m, 2);
}

double representation_norm(std::span<const double> block_norms, const ApproxSpaceParams& ap) {
  std::vector<double> w(block_norms.size());
  for (std::size_t n = 0; n < w.size(); ++n) w[n] = std::exp2(static_cast<double>(n) * ap.rho) * block_norms[n];
  return lebesgue_norm(w, ap.mu);
}

DyadicDecomposition dyadic_decompose(const ComplexMatrix& t, const ApproxSpaceParams& ap, int levels) {
  if (levels < 2) throw DomainError("dyadic_decompose: need at least 2 levels");
  if (levels > 30) throw DomainError("dyadic_decompose: too many levels");
  require_finite(t, "dyadic_decompose");
  DyadicDecomposition dec;
  dec.levels = levels;
  Eigen::JacobiSVD<ComplexMatrix> svd(t, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  const Eigen::Index terms = s.size();
  const double s1 = terms > 0 ? s(0) : 0.0;

  // g*_n: the first 2^n - 1 terms of the singular expansion.
  std::vector<ComplexMatrix> approx;
  ComplexMatrix partial = ComplexMatrix::Zero(t.rows(), t.cols());
  Eigen::Index used = 0;
  for (int n = 0; n <= levels; ++n) {
    const Eigen::Index want = std::min<Eigen::Index>((Eigen::Index{1} << n) - 1, terms);
    for (; used < want; ++used) {
      partial += s(used) * svd.matrixU().col(used) * svd.matrixV().col(used).adjoint();
    }
    approx.push_back(partial);
    const Eigen::Index idx = (Eigen::Index{1} << n) - 1;  // alpha_{2^n} = s_{2^n}
    dec.alpha_dyadic.push_back(idx < terms ? s(idx) : 0.0);
  }
  dec.floor_residual = (Eigen::Index{1} << levels) - 1 < numerical_rank(t);

  dec.blocks.push_back(ComplexMatrix::Zero(t.rows(), t.cols()));
  dec.blocks.push_back(ComplexMatrix::Zero(t.rows(), t.cols()));
  for (int n = 0; n + 1 <= levels; ++n) dec.blocks.push_back(approx[n + 1] - approx[n]);

  ComplexMatrix sum = ComplexMatrix::Zero(t.rows(), t.cols());
  for (const auto& g : dec.blocks) {
    dec.block_norms.push_back(op_norm(g));
    const auto gs = singular_values(g);
    dec.block_ranks.push_back(static_cast<int>(
        std::count_if(gs.begin(), gs.end(), [&](double v) { return v > 1e-10 * s1; })));
    sum += g;
    dec.residuals.push_back(op_norm(t - sum));
  }
  dec.rep_norm = representation_norm(dec.block_norms, ap);
  return dec;
}

namespace {

// Block norms of the decomposition that puts weight w[n][k] of the k-th
// singular term into block n; the terms are orthogonal so each block norm is
// the largest weighted singular value it holds.
std::vector<double> block_norms_of(const std::vector<std::vector<double>>& w,
                                   const std::vector<double>& s) {
  std::vector<double> out(w.size(), 0.0);
  for (std::size_t n = 0; n < w.size(); ++n)
    for (std::size_t k = 0; k < s.size(); ++k) out[n] = std::max(out[n], w[n][k] * s[k]);
  return out;
}

std::size_t capacity(std::size_t block) { return (std::size_t{1} << block) - 1; }

}  // namespace

RepEquivalenceReport representation_equivalence(const ComplexMatrix& t, const ApproxSpaceParams& ap,
                                                int levels, int trials, std::uint64_t seed,
                                                double band_lo, double band_hi) {
  if (t.rows() != t.cols()) throw DomainError("representation_equivalence: matrix is not square");
  const auto ev = eigenvalues(t);
  const double nrm = op_norm(t);
  for (const auto& z : ev) {
    if (std::abs(z.imag()) > 1e-8 * nrm) {
      throw DomainError("representation_equivalence: spectrum is not real, not an H-operator");
    }
  }
  RepEquivalenceReport rep;
  rep.trials = trials;
  rep.band_lo = band_lo;
  rep.band_hi = band_hi;
  const auto dec = dyadic_decompose(t, ap, levels);
  rep.canonical_rep_norm = dec.rep_norm;
  rep.rep_norm = dec.rep_norm;
  rep.a_norm = eigen_approx_norm(t, ap);

  std::vector<double> s = singular_values(t);
  while (!s.empty() && s.back() <= 1e-14 * std::max(s.front(), 1e-300)) s.pop_back();
  const std::size_t r = s.size();
  std::size_t blocks = static_cast<std::size_t>(levels) + 2;
  while (capacity(blocks - 1) < r) ++blocks;

  // Greedy: fill blocks 1, 2, ... to capacity 2^n - 1 with the largest terms.
  {
    std::vector<std::vector<double>> w(blocks, std::vector<double>(r, 0.0));
    std::size_t block = 1, used = 0;
    for (std::size_t k = 0; k < r; ++k) {
      while (used == capacity(block)) {
        ++block;
        used = 0;
      }
      w[block][k] = 1.0;
      ++used;
    }
    rep.rep_norm = std::min(rep.rep_norm, representation_norm(block_norms_of(w, s), ap));
  }

  // Randomized: each term goes to a random block with room left, sometimes
  // split across two blocks.
  Rng rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<std::vector<double>> w(blocks, std::vector<double>(r, 0.0));
    std::vector<std::size_t> room(blocks);
    for (std::size_t n = 0; n < blocks; ++n) room[n] = capacity(n);
    for (std::size_t k = 0; k < r; ++k) {
      std::vector<std::size_t> open;
      for (std::size_t n = 1; n < w.size(); ++n)
        if (room[n] > 0) open.push_back(n);
      if (open.empty()) {
        w.emplace_back(r, 0.0);
        room.push_back(capacity(w.size() - 1));
        open.push_back(w.size() - 1);
      }
      // Bias towards early blocks: take the minimum of two uniform picks.
      auto pick = [&]() {
        const auto a = static_cast<std::size_t>(unif(rng) * open.size());
        const auto b = static_cast<std::size_t>(unif(rng) * open.size());
        return open[std::min({a, b, open.size() - 1})];
      };
      const std::size_t first = pick();
      std::size_t second = pick();
      if (unif(rng) < 0.3 && second != first) {
        const double frac = unif(rng);
        w[first][k] = frac;
        w[second][k] = 1.0 - frac;
        --room[first];
        --room[second];
      } else {
        w[first][k] = 1.0;
        --room[first];
      }
    }
    rep.rep_norm = std::min(rep.rep_norm, representation_norm(block_norms_of(w, s), ap));
  }

  if (rep.a_norm > 0.0) {
    rep.ratio = rep.rep_norm / rep.a_norm;
  } else {
    rep.ratio = rep.rep_norm == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  }
  rep.within_band = rep.ratio >= band_lo && rep.ratio <= band_hi;
  return rep;
}

}  // namespace snlab
