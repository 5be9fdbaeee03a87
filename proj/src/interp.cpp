#include "snlab/interp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace snlab {

InterpParams::InterpParams(double theta_, ExtendedReal p_) : theta(theta_), p(p_) {
  if (!(theta > 0.0 && theta < 1.0)) throw DomainError("theta must lie in (0, 1)");
  if (p.is_finite() && !(p.value() >= 1.0)) throw DomainError("interpolation p must be >= 1");
}

CoupleSpec::CoupleSpec(ExtendedReal r_, ExtendedReal s_) : r(r_), s(s_) {
  if (r.is_finite() && !(r.value() >= 1.0)) throw DomainError("couple exponent r must be >= 1");
  if (s.is_finite() && !(s.value() >= 1.0)) throw DomainError("couple exponent s must be >= 1");
}

std::string to_string(KMethod m) {
  return m == KMethod::closed_form ? "closed-form" : "convex-search";
}

double k_functional_closed_form(const SeqSample& f, double t) {
  if (!(t > 0.0)) throw DomainError("k_functional: t must be positive");
  const auto& s = f.rearrangement();
  const double n = static_cast<double>(s.size());
  if (t >= n) {
    double total = 0.0;
    for (double v : s) total += v;
    return total;
  }
  const auto whole = static_cast<std::size_t>(std::floor(t));
  double acc = 0.0;
  for (std::size_t k = 0; k < whole; ++k) acc += s[k];
  return acc + (t - static_cast<double>(whole)) * s[whole];
}

namespace {

double pnorm_of_excess(const std::vector<double>& a, double level, const ExtendedReal& q) {
  std::vector<double> ex(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) ex[i] = std::max(a[i] - level, 0.0);
  return lebesgue_norm(ex, q);
}

template <typename F>
double golden_min(F&& f, double lo, double hi) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  double best = std::min({f(lo), f(hi), f1, f2});
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = f(x1);
      best = std::min(best, f1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = f(x2);
      best = std::min(best, f2);
    }
  }
  return best;
}

double powq(double x, double q) { return x <= 0.0 ? 0.0 : std::pow(x, q); }
double rootq(double x, double q) { return x <= 0.0 ? 0.0 : std::pow(x, 1.0 / q); }

}  // namespace

double k_functional_search(const SeqSample& f, double t, const CoupleSpec& cs) {
  if (!(t > 0.0)) throw DomainError("k_functional: t must be positive");
  const auto& a = f.rearrangement();
  const double top = a.front();
  if (top == 0.0) return 0.0;

  if (cs.s.is_infinite()) {
    // With ||f1||_inf = tau fixed, clipping f at tau minimizes ||f0||_r.
    return golden_min([&](double tau) { return pnorm_of_excess(a, tau, cs.r) + t * tau; }, 0.0, top);
  }
  if (cs.r.is_infinite()) {
    return golden_min([&](double tau) { return tau + t * pnorm_of_excess(a, tau, cs.s); }, 0.0, top);
  }

  // Both exponents finite: cyclic coordinate descent on the magnitudes u_k of
  // f1, u_k in [0, a_k], with running power sums. u = 0 is a kink of the
  // second norm where single-coordinate moves can stall, so every start is
  // nonzero and the best of two is kept.
  const double r = cs.r.value(), s = cs.s.value();
  double result = std::numeric_limits<double>::infinity();
  for (double frac : {1.0, 0.5}) {
  std::vector<double> u(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) u[k] = frac * a[k];
  double sum0 = 0.0, sum1 = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    sum0 += powq(a[k] - u[k], r);
    sum1 += powq(u[k], s);
  }
  auto objective = [&](double s0, double s1) { return rootq(s0, r) + t * rootq(s1, s); };
  double current = objective(sum0, sum1);
  for (int sweep = 0; sweep < 500; ++sweep) {
    const double before = current;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k] == 0.0) continue;
      const double rest0 = sum0 - powq(a[k] - u[k], r);
      const double rest1 = sum1 - powq(u[k], s);
      auto phi = [&](double x) { return objective(rest0 + powq(a[k] - x, r), rest1 + powq(x, s)); };
      // Re-run the golden search and keep the argmin.
      double lo = 0.0, hi = a[k];
      const double g = (std::sqrt(5.0) - 1.0) / 2.0;
      double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
      double f1 = phi(x1), f2 = phi(x2);
      for (int it = 0; it < 80; ++it) {
        if (f1 <= f2) {
          hi = x2; x2 = x1; f2 = f1; x1 = hi - g * (hi - lo); f1 = phi(x1);
        } else {
          lo = x1; x1 = x2; f1 = f2; x2 = lo + g * (hi - lo); f2 = phi(x2);
        }
      }
      double best_x = u[k], best_v = phi(u[k]);
      for (double x : {0.0, a[k], 0.5 * (lo + hi)}) {
        const double v = phi(x);
        if (v < best_v) {
          best_v = v;
          best_x = x;
        }
      }
      u[k] = best_x;
      sum0 = rest0 + powq(a[k] - best_x, r);
      sum1 = rest1 + powq(best_x, s);
      current = objective(sum0, sum1);
    }
    // Rescaling u as a whole: the collective move that single coordinates
    // only approach geometrically (e.g. shrinking towards u = 0).
    double cmax = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < a.size(); ++k)
      if (u[k] > 0.0) cmax = std::min(cmax, a[k] / u[k]);
    if (std::isfinite(cmax)) {
      auto along = [&](double c) {
        double s0 = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k) s0 += powq(a[k] - c * u[k], r);
        return objective(s0, std::pow(c, s) * sum1);
      };
      double lo = 0.0, hi = cmax;
      const double g = (std::sqrt(5.0) - 1.0) / 2.0;
      double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
      double f1 = along(x1), f2 = along(x2);
      for (int it = 0; it < 100; ++it) {
        if (f1 <= f2) {
          hi = x2; x2 = x1; f2 = f1; x1 = hi - g * (hi - lo); f1 = along(x1);
        } else {
          lo = x1; x1 = x2; f1 = f2; x2 = lo + g * (hi - lo); f2 = along(x2);
        }
      }
      double best_c = 1.0, best_v = current;
      for (double c : {0.0, 0.5 * (lo + hi)}) {
        const double v = along(c);
        if (v < best_v) {
          best_v = v;
          best_c = c;
        }
      }
      if (best_c != 1.0) {
        for (auto& x : u) x *= best_c;
        sum0 = 0.0;
        sum1 = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k) {
          sum0 += powq(a[k] - u[k], r);
          sum1 += powq(u[k], s);
        }
        current = objective(sum0, sum1);
      }
    }
    if (before - current <= 1e-14 * before) break;
  }
  result = std::min(result, current);
  }
  // The trivial splits f = f + 0 and f = 0 + f.
  double all0 = 0.0, all1 = 0.0;
  for (double x : a) {
    all0 += powq(x, r);
    all1 += powq(x, s);
  }
  return std::min({result, rootq(all0, r), t * rootq(all1, s)});
}

KValue k_functional(const SeqSample& f, double t, const CoupleSpec& cs) {
  if (cs.is_l1_linf()) return {k_functional_closed_form(f, t), KMethod::closed_form};
  return {k_functional_search(f, t, cs), KMethod::convex_search};
}

KCurve k_curve(const SeqSample& f, const CoupleSpec& cs, int j_max, int points_per_octave) {
  if (j_max < 0 || points_per_octave < 1) throw DomainError("k_curve: bad grid");
  KCurve c;
  const int lim = j_max * points_per_octave;
  for (int j = -lim; j <= lim; ++j) {
    const double t = std::exp2(static_cast<double>(j) / points_per_octave);
    const auto kv = k_functional(f, t, cs);
    c.t.push_back(t);
    c.k.push_back(kv.value);
    c.method.push_back(kv.method);
  }
  return c;
}

KCurveCheck check_k_curve(const KCurve& curve, const SeqSample& f, const CoupleSpec& cs) {
  KCurveCheck chk;
  std::vector<double> mags(f.rearrangement());
  const double n0 = lebesgue_norm(mags, cs.r);
  const double n1 = lebesgue_norm(mags, cs.s);
  const double scale = std::max(n0, 1e-300);
  for (std::size_t i = 0; i < curve.t.size(); ++i) {
    // Search values carry the optimizer's stopping error.
    const bool searched = curve.method[i] == KMethod::convex_search;
    const double tol = (searched ? 1e-7 : 1e-9) * scale;
    if (curve.k[i] > std::min(n0, curve.t[i] * n1) + tol) chk.bounded = false;
    if (i > 0 && curve.k[i] < curve.k[i - 1] - tol) chk.monotone = false;
    if (i > 0 && i + 1 < curve.t.size()) {
      const double w = (curve.t[i] - curve.t[i - 1]) / (curve.t[i + 1] - curve.t[i - 1]);
      const double chord = (1.0 - w) * curve.k[i - 1] + w * curve.k[i + 1];
      if (curve.k[i] < chord - tol) chk.concave = false;
    }
  }
  return chk;
}

InterpNorm interp_norm(const SeqSample& f, const InterpParams& ip, const CoupleSpec& cs,
                       const QuadratureSpec& quad) {
  if (quad.j_max < 1 || quad.points_per_octave < 1) throw DomainError("interp_norm: bad quadrature grid");
  InterpNorm out;
  const int lim = quad.j_max * quad.points_per_octave;
  const double h = std::log(2.0) / quad.points_per_octave;
  const int decade = static_cast<int>(std::ceil(std::log2(10.0) * quad.points_per_octave));
  std::vector<double> g;
  g.reserve(2 * lim + 1);
  for (int j = -lim; j <= lim; ++j) {
    const double t = std::exp2(static_cast<double>(j) / quad.points_per_octave);
    g.push_back(std::pow(t, -ip.theta) * k_functional(f, t, cs).value);
  }
  if (ip.p.is_infinite()) {
    const auto it = std::max_element(g.begin(), g.end());
    out.value = *it;
    const auto idx = static_cast<int>(it - g.begin());
    out.under_covered = out.value > 0.0 && (idx < decade || idx >= static_cast<int>(g.size()) - decade);
    out.head_mass = out.value > 0.0 ? *std::max_element(g.begin(), g.begin() + decade) / out.value : 0.0;
    out.tail_mass = out.value > 0.0 ? *std::max_element(g.end() - decade, g.end()) / out.value : 0.0;
    return out;
  }
  const double p = ip.p.value();
  std::vector<double> w(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) w[i] = std::pow(g[i], p);
  double total = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double weight = (i == 0 || i + 1 == w.size()) ? 0.5 : 1.0;
    total += weight * w[i];
  }
  total *= h;
  double head = 0.0, tail = 0.0;
  for (int i = 0; i < decade; ++i) {
    head += w[i];
    tail += w[w.size() - 1 - i];
  }
  head *= h;
  tail *= h;
  out.value = std::pow(total, 1.0 / p);
  if (total > 0.0) {
    out.head_mass = head / total;
    out.tail_mass = tail / total;
  }
  out.under_covered = out.head_mass > quad.coverage_threshold || out.tail_mass > quad.coverage_threshold;
  return out;
}

double embedding_constant_bound(double theta, const ExtendedReal& mu1, const ExtendedReal& mu2) {
  if (!(mu1 <= mu2)) throw DomainError("embedding bound needs mu1 <= mu2");
  if (mu1.is_infinite()) return 1.0;
  const double m1 = mu1.value();
  const double sup_const = std::pow(theta * m1, 1.0 / m1);
  if (mu2.is_infinite()) return sup_const;
  return std::pow(sup_const, 1.0 - m1 / mu2.value());
}

namespace {

RatioStats ratio_stats(const std::vector<double>& r) {
  RatioStats st;
  st.count = r.size();
  if (r.empty()) return st;
  st.min = *std::min_element(r.begin(), r.end());
  const auto it = std::max_element(r.begin(), r.end());
  st.max = *it;
  st.argmax = static_cast<std::size_t>(it - r.begin());
  return st;
}

}  // namespace

EmbeddingReport embedding_check(std::span<const SeqSample> corpus, const InterpParams& ip1,
                                const InterpParams& ip2, const CoupleSpec& cs, double cap,
                                const QuadratureSpec& quad) {
  if (ip1.theta != ip2.theta) throw DomainError("embedding_check: theta mismatch");
  if (!(ip1.p <= ip2.p)) throw DomainError("embedding_check: needs mu1 <= mu2");
  EmbeddingReport rep;
  rep.cap = cap > 0.0 ? cap : embedding_constant_bound(ip1.theta, ip1.p, ip2.p);
  for (const auto& f : corpus) {
    const double lo = interp_norm(f, ip1, cs, quad).value;
    const double hi = ip1.p == ip2.p ? lo : interp_norm(f, ip2, cs, quad).value;
    rep.ratios.push_back(lo > 0.0 ? hi / lo : 1.0);
  }
  rep.stats = ratio_stats(rep.ratios);
  // The quadrature of the mu1 side carries a small discretization error.
  rep.within_cap = rep.stats.max <= rep.cap * (1.0 + 1e-3);
  return rep;
}

double lorentz_exponent(double theta, const CoupleSpec& cs) {
  const double inv = (1.0 - theta) * cs.r.reciprocal() + theta * cs.s.reciprocal();
  if (!(inv > 0.0)) throw DomainError("lorentz_exponent: both couple exponents infinite");
  return 1.0 / inv;
}

LorentzIdReport lorentz_identification(std::span<const SeqSample> corpus, const InterpParams& ip,
                                       const CoupleSpec& cs, double band_lo, double band_hi,
                                       const QuadratureSpec& quad) {
  LorentzIdReport rep;
  rep.p = lorentz_exponent(ip.theta, cs);
  rep.band_lo = band_lo;
  rep.band_hi = band_hi;
  const LorentzParams lp(rep.p, ip.p);
  for (const auto& f : corpus) {
    const double a = interp_norm(f, ip, cs, quad).value;
    const double b = lorentz_norm(f, lp).value;
    if (b == 0.0) continue;
    rep.ratios.push_back(a / b);
  }
  rep.stats = ratio_stats(rep.ratios);
  rep.within_band = rep.ratios.empty() || (rep.stats.min >= band_lo && rep.stats.max <= band_hi);
  return rep;
}

JacksonBernsteinReport jackson_bernstein_scan(std::span<const SeqSample> corpus,
                                              const ApproxSpaceParams& ap, double sigma) {
  if (!(sigma > 0.0)) throw DomainError("jackson_bernstein_scan: sigma must be positive");
  JacksonBernsteinReport rep;
  rep.sigma = sigma;
  rep.rho = ap.rho;
  rep.mu = ap.mu;
  std::vector<double> worst_per_n;

  struct Sample {
    const std::vector<double>* s;
    double y_norm;
  };
  std::vector<Sample> usable;
  for (const auto& f : corpus) {
    const auto& s = f.rearrangement();
    if (s.front() == 0.0) continue;
    usable.push_back({&s, approx_space_norm(std::span<const double>(s), ap).value});
  }
  if (usable.empty()) throw DomainError("jackson_bernstein_scan: corpus is all zero");
  rep.samples = usable.size();

  // Jackson: E_n(f) = s_{n+1}, n = 0..N-1.
  for (const auto& smp : usable) {
    const auto& s = *smp.s;
    if (worst_per_n.size() < s.size()) worst_per_n.resize(s.size(), 0.0);
    for (std::size_t n = 0; n < s.size(); ++n) {
      const double ratio = s[n] / smp.y_norm;
      worst_per_n[n] = std::max(worst_per_n[n], ratio);
      rep.c_jackson = std::max(rep.c_jackson, ratio * std::pow(static_cast<double>(n + 1), sigma));
    }
  }
  // Bernstein: p_n = the n largest entries of f, an element of A_n.
  std::vector<std::pair<double, double>> bern;  // (||p||_Y, (n+1)^sigma ||p||_X)
  for (const auto& smp : usable) {
    const auto& s = *smp.s;
    std::vector<double> p(s.size(), 0.0);
    for (std::size_t n = 1; n <= s.size(); ++n) {
      p[n - 1] = s[n - 1];
      const double py = approx_space_norm(std::span<const double>(p), ap).value;
      const double px = s.front();
      const double rhs = std::pow(static_cast<double>(n + 1), sigma) * px;
      bern.emplace_back(py, rhs);
      rep.c_bernstein = std::max(rep.c_bernstein, py / rhs);
    }
  }

  rep.min_jackson_residual = std::numeric_limits<double>::infinity();
  for (const auto& smp : usable) {
    const auto& s = *smp.s;
    for (std::size_t n = 0; n < s.size(); ++n) {
      const double bound = rep.c_jackson * std::pow(static_cast<double>(n + 1), -sigma) * smp.y_norm;
      rep.min_jackson_residual = std::min(rep.min_jackson_residual, bound - s[n]);
    }
  }
  rep.min_bernstein_residual = std::numeric_limits<double>::infinity();
  for (const auto& [py, rhs] : bern) {
    rep.min_bernstein_residual = std::min(rep.min_bernstein_residual, rep.c_bernstein * rhs - py);
  }

  // Least-squares slope of log(worst ratio) against log(n+1).
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (std::size_t n = 1; n < worst_per_n.size(); ++n) {
    if (worst_per_n[n] <= 0.0) continue;
    const double x = std::log(static_cast<double>(n + 1)), y = std::log(worst_per_n[n]);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
    ++m;
  }
  if (m >= 2 && m * sxx - sx * sx > 0.0) rep.r_exponent = -(m * sxy - sx * sy) / (m * sxx - sx * sx);

  const double tol = 1e-12;
  rep.verdict = std::isfinite(rep.c_jackson) && std::isfinite(rep.c_bernstein) && rep.c_jackson > 0.0 &&
                rep.c_bernstein > 0.0 && rep.min_jackson_residual >= -tol * rep.c_jackson &&
                rep.min_bernstein_residual >= -tol * rep.c_bernstein;
  return rep;
}

}  // namespace snlab
