#pragma once

#include <span>
#include <string>
#include <vector>

#include "snlab/seqspace.hpp"

namespace snlab {

struct InterpParams {
  double theta;
  ExtendedReal p;

  InterpParams(double theta_, ExtendedReal p_);
};

/// The sequence couple (ell_r, ell_s), 1 <= r, s <= inf.
struct CoupleSpec {
  ExtendedReal r;
  ExtendedReal s;

  CoupleSpec(ExtendedReal r_, ExtendedReal s_);
  bool is_l1_linf() const { return r == ExtendedReal(1.0) && s.is_infinite(); }
};

enum class KMethod { closed_form, convex_search };
std::string to_string(KMethod m);

struct KValue {
  double value = 0.0;
  KMethod method = KMethod::closed_form;
};

/// K(f, t) = inf over f = f0 + f1 of ||f0||_r + t ||f1||_s. Closed form for
/// (ell_1, ell_inf), convex search otherwise.
KValue k_functional(const SeqSample& f, double t, const CoupleSpec& cs);

/// Sum of the first floor(t) rearranged terms plus the fractional part of the
/// next one: the (ell_1, ell_inf) K-functional.
double k_functional_closed_form(const SeqSample& f, double t);

/// Convex minimization over splittings, for any couple. The split is taken
/// along the direction of each entry of f.
double k_functional_search(const SeqSample& f, double t, const CoupleSpec& cs);

struct KCurve {
  std::vector<double> t;
  std::vector<double> k;
  std::vector<KMethod> method;
};

/// K on t = 2^{j / points_per_octave}, j in [-J*ppo, J*ppo].
KCurve k_curve(const SeqSample& f, const CoupleSpec& cs, int j_max, int points_per_octave = 1);

struct KCurveCheck {
  bool monotone = true;
  bool concave = true;
  bool bounded = true;
  bool ok() const { return monotone && concave && bounded; }
};
KCurveCheck check_k_curve(const KCurve& curve, const SeqSample& f, const CoupleSpec& cs);

/// Geometric grid t = 2^{j/ppo}, j in [-J*ppo, J*ppo]; trapezoid in log t.
struct QuadratureSpec {
  int j_max = 40;
  int points_per_octave = 8;
  /// Fraction of integrand mass allowed in the outermost decade at either end.
  double coverage_threshold = 1e-6;
};

struct InterpNorm {
  double value = 0.0;
  double head_mass = 0.0;  // fraction of mass in the first decade of t
  double tail_mass = 0.0;  // fraction in the last decade
  bool under_covered = false;
};

/// (int_0^inf (t^{-theta} K(f,t))^p dt/t)^{1/p}, or sup_t t^{-theta} K(f,t).
InterpNorm interp_norm(const SeqSample& f, const InterpParams& ip, const CoupleSpec& cs,
                       const QuadratureSpec& quad = {});

/// Constant from the proof of the embedding (X0,X1)_{theta,mu1} into
/// (X0,X1)_{theta,mu2}: sup-norm <= (theta mu1)^{1/mu1} times the mu1-norm,
/// then Hoelder for finite mu2.
double embedding_constant_bound(double theta, const ExtendedReal& mu1, const ExtendedReal& mu2);

struct RatioStats {
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 0;
  std::size_t argmax = 0;
  /// max / min, the multiplicative width of the band.
  double width() const { return min > 0.0 ? max / min : std::numeric_limits<double>::infinity(); }
};

struct EmbeddingReport {
  std::vector<double> ratios;  // ||f||_{theta,mu2} / ||f||_{theta,mu1}
  RatioStats stats;
  double cap = 0.0;
  bool within_cap = true;
};

/// Requires ip1.theta == ip2.theta and ip1.p <= ip2.p. cap <= 0 selects
/// embedding_constant_bound.
EmbeddingReport embedding_check(std::span<const SeqSample> corpus, const InterpParams& ip1,
                                const InterpParams& ip2, const CoupleSpec& cs, double cap = 0.0,
                                const QuadratureSpec& quad = {});

/// Lorentz exponent p with 1/p = (1 - theta)/r + theta/s.
double lorentz_exponent(double theta, const CoupleSpec& cs);

struct LorentzIdReport {
  double p = 0.0;  // Lorentz exponent
  std::vector<double> ratios;  // interp_norm / lorentz_norm
  RatioStats stats;
  double band_lo = 0.0;
  double band_hi = 0.0;
  bool within_band = true;
};

/// Compares ||f||_{(ell_r, ell_s)_{theta,q}} against lambda_{p,q}(f).
LorentzIdReport lorentz_identification(std::span<const SeqSample> corpus, const InterpParams& ip,
                                       const CoupleSpec& cs, double band_lo = 1e-3,
                                       double band_hi = 1e3, const QuadratureSpec& quad = {});

/// Jackson and Bernstein inequalities for the scheme X = ell_inf, A_n = at most
/// n nonzero coordinates, Y = X^rho_mu:
///   E_n(f) <= C_J (n+1)^{-sigma} ||f||_Y,
///   ||p||_Y <= C_B (n+1)^{sigma} ||p||_X  for p in A_n,
/// where E_n(f) = dist_X(f, A_n) = s_{n+1}(f).
struct JacksonBernsteinReport {
  double sigma = 0.0;
  double rho = 0.0;
  ExtendedReal mu;
  double c_jackson = 0.0;
  double c_bernstein = 0.0;
  double min_jackson_residual = 0.0;    // min of C_J bound - lhs over the corpus
  double min_bernstein_residual = 0.0;
  /// Exponent fitted from the worst-case Jackson ratio per n (log-log slope).
  double r_exponent = 0.0;
  std::size_t samples = 0;
  bool verdict = false;
};

JacksonBernsteinReport jackson_bernstein_scan(std::span<const SeqSample> corpus,
                                              const ApproxSpaceParams& ap, double sigma);

}  // namespace snlab
