#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "snlab/common.hpp"

namespace snlab {

/// Finite sequence of complex scalars together with the non-increasing
/// rearrangement of its absolute values. Immutable after construction.
class SeqSample {
 public:
  explicit SeqSample(std::vector<Complex> values);
  static SeqSample from_real(std::span<const double> values);

  std::size_t size() const { return values_.size(); }
  const std::vector<Complex>& values() const { return values_; }

  /// s_1 >= s_2 >= ... >= s_N >= 0, ties kept in original index order.
  const std::vector<double>& rearrangement() const { return rearranged_; }
  /// order()[k] is the original (0-based) index of s_{k+1}.
  const std::vector<std::size_t>& order() const { return order_; }

  SeqSample scaled(Complex c) const;

 private:
  std::vector<Complex> values_;
  std::vector<double> rearranged_;
  std::vector<std::size_t> order_;
};

struct LorentzParams {
  double p;
  ExtendedReal q;

  LorentzParams(double p_, ExtendedReal q_);
};

struct ApproxSpaceParams {
  double rho;
  ExtendedReal mu;

  ApproxSpaceParams(double rho_, ExtendedReal mu_);
};

/// Quasi-triangle constant c_X >= 1.
struct QuasiNormSpec {
  double c_x = 1.0;

  explicit QuasiNormSpec(double c = 1.0);
};

/// A partial norm over a finite horizon. tail_last_term is the magnitude of
/// the last summand, an indicator of how much the truncation may hide.
struct NormValue {
  double value = 0.0;
  std::size_t horizon = 0;
  double tail_last_term = 0.0;
};

/// The sequence formed by the rearrangement itself (as nonnegative reals).
/// Idempotent.
SeqSample rearrange(const SeqSample& x);

/// (sum_k (k^{1/p-1/q} s_k)^q)^{1/q}, or sup_k k^{1/p} s_k when q = inf.
NormValue lorentz_norm(const SeqSample& x, const LorentzParams& lp);

/// ell_mu norm of (n^{rho - 1/mu} alpha_n), n = 1..N. The input must be
/// non-increasing and nonnegative.
NormValue approx_space_norm(std::span<const double> alphas, const ApproxSpaceParams& ap);
NormValue approx_space_norm(const SeqSample& alphas, const ApproxSpaceParams& ap);

/// Largest observed ||x+y|| / (||x|| + ||y||) for the Lorentz quasi-norm, and
/// whether it respects the given quasi-triangle constant.
struct QuasiTriangleCheck {
  double ratio = 0.0;
  bool holds = true;
};
QuasiTriangleCheck quasi_triangle_check(const SeqSample& x, const SeqSample& y,
                                        const LorentzParams& lp, const QuasiNormSpec& spec);

enum class DecayVerdict { divergent, boundary, compatible, indeterminate };
std::string to_string(DecayVerdict v);

/// Scan of the statistic n * s_n^q over n = 1..horizon. If it stays >= 1
/// then s_n^q decays no faster than 1/n and the sequence is in no ell_q.
struct DecayReport {
  double q = 0.0;
  std::size_t horizon = 0;
  /// Smallest N with n * s_n^q >= 1 for every n in [N, horizon].
  std::optional<std::size_t> first_dominating_index;
  double last_statistic = 0.0;
  double max_tail_statistic = 0.0;
  double min_tail_statistic = 0.0;
  DecayVerdict verdict = DecayVerdict::indeterminate;
};

/// term(n) gives s_n for n >= 1; must be non-increasing and nonnegative.
DecayReport decay_class(const std::function<double(std::size_t)>& term, double q,
                        std::size_t horizon);
/// Terms beyond the sample length are zero. horizon < x.size() is an error.
DecayReport decay_class(const SeqSample& x, double q, std::size_t horizon);

}  // namespace snlab
