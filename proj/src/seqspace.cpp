#include "snlab/seqspace.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

namespace snlab {

ExtendedReal ExtendedReal::parse(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "inf" || s == "infinity" || s == "+inf") return infinity();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw DomainError("not an extended real: '" + std::string(text) + "'");
  }
  if (used != s.size() || !std::isfinite(v)) {
    throw DomainError("not an extended real: '" + std::string(text) + "'");
  }
  return ExtendedReal(v);
}

std::string ExtendedReal::to_string() const {
  if (infinite_) return "inf";
  std::ostringstream os;
  os << value_;
  return os.str();
}

SeqSample::SeqSample(std::vector<Complex> values) : values_(std::move(values)) {
  if (values_.empty()) throw DomainError("SeqSample: empty sequence");
  for (const auto& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw DomainError("SeqSample: non-finite entry");
    }
  }
  order_.resize(values_.size());
  std::iota(order_.begin(), order_.end(), std::size_t{0});
  std::vector<double> mags(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) mags[i] = std::abs(values_[i]);
  std::stable_sort(order_.begin(), order_.end(),
                   [&](std::size_t a, std::size_t b) { return mags[a] > mags[b]; });
  rearranged_.reserve(values_.size());
  for (auto i : order_) rearranged_.push_back(mags[i]);
}

SeqSample SeqSample::from_real(std::span<const double> values) {
  return SeqSample(std::vector<Complex>(values.begin(), values.end()));
}

SeqSample SeqSample::scaled(Complex c) const {
  std::vector<Complex> v(values_);
  for (auto& z : v) z *= c;
  return SeqSample(std::move(v));
}

LorentzParams::LorentzParams(double p_, ExtendedReal q_) : p(p_), q(q_) {
  if (!(p > 0.0) || !std::isfinite(p)) throw DomainError("Lorentz p must be finite and positive");
  if (q.is_finite() && !(q.value() > 0.0)) throw DomainError("Lorentz q must be positive");
}

ApproxSpaceParams::ApproxSpaceParams(double rho_, ExtendedReal mu_) : rho(rho_), mu(mu_) {
  if (!(rho > 0.0) || !std::isfinite(rho)) throw DomainError("rho must be finite and positive");
  if (mu.is_finite() && !(mu.value() > 0.0)) throw DomainError("mu must be positive");
}

QuasiNormSpec::QuasiNormSpec(double c) : c_x(c) {
  if (!(c >= 1.0)) throw DomainError("quasi-triangle constant must be >= 1");
}

SeqSample rearrange(const SeqSample& x) {
  const auto& s = x.rearrangement();
  return SeqSample::from_real(s);
}

namespace {

// ell_q norm of (k^exponent * s_k), with the sup case for q = inf.
NormValue weighted_norm(std::span<const double> s, double exponent, const ExtendedReal& q) {
  NormValue out;
  out.horizon = s.size();
  std::vector<double> terms(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) {
    terms[k] = s[k] == 0.0 ? 0.0 : std::pow(static_cast<double>(k + 1), exponent) * s[k];
  }
  out.value = lebesgue_norm(terms, q);
  out.tail_last_term = terms.back();
  return out;
}

}  // namespace

NormValue lorentz_norm(const SeqSample& x, const LorentzParams& lp) {
  return weighted_norm(x.rearrangement(), 1.0 / lp.p - lp.q.reciprocal(), lp.q);
}

NormValue approx_space_norm(std::span<const double> alphas, const ApproxSpaceParams& ap) {
  if (alphas.empty()) throw DomainError("approx_space_norm: empty sequence");
  double peak = 0.0;
  for (double a : alphas) {
    if (!(a >= 0.0) || !std::isfinite(a)) throw DomainError("approx_space_norm: entries must be nonnegative");
    peak = std::max(peak, a);
  }
  // Roundoff in computed singular values may break exact monotonicity.
  const double slack = 1e-12 * peak;
  for (std::size_t n = 1; n < alphas.size(); ++n) {
    if (alphas[n] > alphas[n - 1] + slack) {
      throw DomainError("approx_space_norm: sequence increases at n = " + std::to_string(n + 1));
    }
  }
  return weighted_norm(alphas, ap.rho - ap.mu.reciprocal(), ap.mu);
}

NormValue approx_space_norm(const SeqSample& alphas, const ApproxSpaceParams& ap) {
  std::vector<double> a;
  a.reserve(alphas.size());
  for (const auto& z : alphas.values()) {
    if (std::abs(z.imag()) > 0.0 || z.real() < 0.0) {
      throw DomainError("approx_space_norm: entries must be nonnegative reals");
    }
    a.push_back(z.real());
  }
  return approx_space_norm(std::span<const double>(a), ap);
}

QuasiTriangleCheck quasi_triangle_check(const SeqSample& x, const SeqSample& y,
                                        const LorentzParams& lp, const QuasiNormSpec& spec) {
  if (x.size() != y.size()) throw DomainError("quasi_triangle_check: length mismatch");
  std::vector<Complex> sum(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) sum[i] = x.values()[i] + y.values()[i];
  const double lhs = lorentz_norm(SeqSample(std::move(sum)), lp).value;
  const double rhs = lorentz_norm(x, lp).value + lorentz_norm(y, lp).value;
  QuasiTriangleCheck out;
  out.ratio = rhs > 0.0 ? lhs / rhs : 0.0;
  out.holds = lhs <= spec.c_x * rhs * (1.0 + 1e-12);
  return out;
}

std::string to_string(DecayVerdict v) {
  switch (v) {
    case DecayVerdict::divergent: return "no-ell_q (s_n^q decays slower than 1/n)";
    case DecayVerdict::boundary: return "boundary (n*s_n^q == 1)";
    case DecayVerdict::compatible: return "ell_q-compatible decay";
    case DecayVerdict::indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

DecayReport decay_class(const std::function<double(std::size_t)>& term, double q,
                        std::size_t horizon) {
  if (!(q > 0.0)) throw DomainError("decay_class: q must be positive");
  if (horizon < 2) throw DomainError("decay_class: horizon must be at least 2");
  DecayReport rep;
  rep.q = q;
  rep.horizon = horizon;

  const std::size_t tail_start = horizon / 2 + 1;
  rep.max_tail_statistic = 0.0;
  rep.min_tail_statistic = std::numeric_limits<double>::infinity();
  bool tail_boundary = true;
  double prev = std::numeric_limits<double>::infinity();
  std::optional<std::size_t> last_below;  // last n with statistic < 1
  for (std::size_t n = 1; n <= horizon; ++n) {
    const double s = term(n);
    if (!(s >= 0.0) || s > prev * (1.0 + 1e-12)) {
      throw DomainError("decay_class: sequence must be non-increasing and nonnegative (n = " +
                        std::to_string(n) + ")");
    }
    prev = s;
    const double stat = static_cast<double>(n) * std::pow(s, q);
    if (stat < 1.0 && std::abs(stat - 1.0) > 1e-9) last_below = n;
    if (n >= tail_start) {
      rep.max_tail_statistic = std::max(rep.max_tail_statistic, stat);
      rep.min_tail_statistic = std::min(rep.min_tail_statistic, stat);
      if (std::abs(stat - 1.0) > 1e-9) tail_boundary = false;
    }
    if (n == horizon) rep.last_statistic = stat;
  }
  if (!last_below) {
    rep.first_dominating_index = 1;
  } else if (*last_below < horizon) {
    rep.first_dominating_index = *last_below + 1;
  }

  if (tail_boundary) {
    rep.verdict = DecayVerdict::boundary;
  } else if (rep.min_tail_statistic >= 1.0 - 1e-9) {
    rep.verdict = DecayVerdict::divergent;
  } else if (rep.max_tail_statistic < 1.0) {
    rep.verdict = DecayVerdict::compatible;
  } else {
    rep.verdict = DecayVerdict::indeterminate;
  }
  return rep;
}

DecayReport decay_class(const SeqSample& x, double q, std::size_t horizon) {
  if (horizon < x.size()) throw DomainError("decay_class: horizon shorter than the sample");
  const auto& v = x.values();
  return decay_class(
      [&](std::size_t n) { return n <= v.size() ? std::abs(v[n - 1]) : 0.0; }, q, horizon);
}

}  // namespace snlab
