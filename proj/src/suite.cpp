#include "snlab/suite.hpp"

#include <cmath>
#include <limits>

#include "snlab/corpus.hpp"
#include "snlab/interp.hpp"
#include "snlab/io.hpp"
#include "snlab/lethargy.hpp"
#include "snlab/represent.hpp"
#include "snlab/seqspace.hpp"
#include "snlab/snumbers.hpp"

namespace snlab {

using nlohmann::json;

double drift(double a, double b) {
  if (a == 0.0) return b == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return std::abs(b - a) / std::abs(a);
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

ComplexMatrix real_matrix(std::initializer_list<std::initializer_list<double>> rows) {
  ComplexMatrix t(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (double v : r) t(i, j++) = v;
    ++i;
  }
  return t;
}

}  // namespace

void suite_fixtures(ExperimentReport& rep) {
  {
    const auto t = real_matrix({{2, 1, 0}, {0, 2, 0}, {1, 1, 1}});
    const auto ev = eigenvalues(t);
    const double want_ev[] = {2, 2, 1};
    double ev_err = 0.0;
    for (int k = 0; k < 3; ++k) ev_err = std::max(ev_err, std::abs(ev[k] - want_ev[k]));
    const ComplexMatrix gram = t.adjoint() * t;
    const auto gev = eigenvalues(gram);
    const double want_gev[] = {8.796, 2.466, 0.738};
    double gev_err = 0.0;
    for (int k = 0; k < 3; ++k) gev_err = std::max(gev_err, std::abs(gev[k] - want_gev[k]));
    const auto cp = characteristic_polynomial(gram);
    const double want_cp[] = {-16, 30, -12};
    double cp_err = 0.0;
    for (int k = 0; k < 3; ++k) cp_err = std::max(cp_err, std::abs(cp[k] - want_cp[k]));
    json gj = json::array(), cj = json::array();
    for (const auto& z : gev) gj.push_back(z.real());
    for (int k = 0; k < 3; ++k) cj.push_back(cp[k].real());
    rep.add("fixture.nonnormal.eigenvalues", "nonnormal-fixture",
            {{"eigenvalues", to_json(SpectrumResult{ev, {}})["eigenvalues"]}, {"max_error", ev_err}},
            ev_err <= 1e-8, 1e-8 - ev_err);
    rep.add("fixture.nonnormal.gram_eigenvalues", "singular-values", {{"values", gj}, {"max_error", gev_err}},
            gev_err <= 1e-3, 1e-3 - gev_err);
    rep.add("fixture.nonnormal.gram_charpoly", "singular-values",
            {{"c0_c1_c2", cj}, {"max_error", cp_err}}, cp_err <= 1e-6, 1e-6 - cp_err);
    const double schmidt = schmidt_reconstruct(t);
    rep.add("fixture.nonnormal.schmidt_rebuild", "schmidt-representation", {{"error", schmidt}},
            schmidt <= 1e-12, 1e-12 - schmidt);
  }
  {
    const auto t = real_matrix({{2, -3}, {3, 2}});
    const auto sp = spectrum(t);
    const double ev_err = std::max(std::abs(sp.eigenvalues[0] - Complex(2, 3)), std::abs(sp.eigenvalues[1] - Complex(2, -3)));
    double sv_err = 0.0;
    for (double s : sp.singular_values) sv_err = std::max(sv_err, std::abs(s - std::sqrt(13.0)));
    const auto cert = certify_h(t);
    rep.add("fixture.rotation.spectrum", "nonreal-spectrum-fixture",
            {{"spectrum", to_json(sp)}, {"eigen_error", ev_err}, {"singular_error", sv_err}},
            ev_err <= 1e-10 && sv_err <= 1e-10, 1e-10 - std::max(ev_err, sv_err));
    rep.add("fixture.rotation.not_h", "h-operator-resolvent-bound",
            {{"is_real_spectrum", cert.is_real_spectrum}, {"max_abs_imag", cert.max_abs_imag}},
            !cert.is_real_spectrum && !cert.is_h());
  }
}

void suite_markus(ExperimentReport& rep, const SuiteOptions& opts) {
  Rng rng(derive_seed(opts.seed, 3));
  std::uniform_int_distribution<int> dims(4, 16);
  double min_slack = kInf, max_c = 0.0, min_sandwich = kInf;
  int refused = 0, failed = 0, not_h = 0, sandwich_fail = 0;
  for (int k = 0; k < opts.markus_count; ++k) {
    const int n = dims(rng);
    Rng member(derive_seed(opts.seed ^ 0x3a3a, static_cast<std::uint64_t>(k)));
    const ComplexMatrix t = conjugated_h(n, 10.0, member);
    const auto cert = certify_h(t, 1e-8, opts.markus_grid);
    if (!cert.is_h()) {
      ++not_h;
      continue;
    }
    max_c = std::max(max_c, *cert.c_upper);
    const auto table = snumber_table(t, NormKind::spectral, n);
    const auto mr = markus_verify(t, cert, table);
    if (mr.refused) {
      ++refused;
      continue;
    }
    if (!mr.verdict) ++failed;
    min_slack = std::min(min_slack, mr.min_slack);
    const double c = *cert.c_upper;
    const auto oa = operator_approx_norm(t, cert, ApproxSpaceParams(1.0, 1.0));
    const double lo = 1.0 / (8.0 * c * (c + 1.0)), hi = 2.0 * std::sqrt(2.0) * c;
    const double s = std::min(oa.ratio - lo, hi - oa.ratio) / hi;
    min_sandwich = std::min(min_sandwich, s);
    if (s < -1e-8) ++sandwich_fail;
  }
  const bool ok = failed == 0 && refused == 0 && not_h == 0 && max_c <= 10.0;
  rep.add("markus.conjugated_h", "markus-chain",
          {{"count", opts.markus_count},
           {"dims", "4..16"},
           {"kappa_cap", 10.0},
           {"grid", opts.markus_grid.describe()},
           {"not_certified", not_h},
           {"refused", refused},
           {"failed", failed},
           {"max_c_upper", max_c},
           {"min_relative_slack", min_slack}},
          ok && min_slack >= -1e-8, min_slack);
  rep.add("markus.eigen_alpha_sandwich", "eigenvalue-equivalence",
          {{"rho", 1.0}, {"mu", 1.0}, {"violations", sandwich_fail}, {"min_relative_slack", min_sandwich}},
          sandwich_fail == 0, min_sandwich);
}

void suite_hermitian(ExperimentReport& rep, const SuiteOptions& opts) {
  Rng rng(derive_seed(opts.seed, 4));
  std::uniform_int_distribution<int> dims(4, 16);
  double lo = kInf, hi = 0.0;
  for (int k = 0; k < opts.hermitian_count; ++k) {
    CorpusSpec spec{CorpusKind::hermitian, dims(rng), 1, derive_seed(opts.seed ^ 0x4b4b, static_cast<std::uint64_t>(k))};
    const auto cert = certify_h(corpus_member(spec, 0));
    lo = std::min(lo, cert.c_estimate);
    hi = std::max(hi, cert.c_estimate);
  }
  const double slack = std::min(lo - (1.0 - 1e-4), 1.01 - hi);
  rep.add("hermitian.c_estimate", "self-adjoint-constant",
          {{"count", opts.hermitian_count}, {"min_c", lo}, {"max_c", hi}, {"band", {1.0 - 1e-4, 1.01}}},
          slack >= 0.0, slack);
}

void suite_decay(ExperimentReport& rep, const SuiteOptions& opts) {
  const auto slow = [](std::size_t n) { return 1.0 / std::log(static_cast<double>(n) + 1.0); };
  const auto fast = [](std::size_t n) { return std::exp2(-static_cast<double>(n)); };
  for (double q : {1.0, 2.0, 4.0}) {
    const auto r = decay_class(slow, q, opts.decay_horizon);
    const bool ok = r.first_dominating_index.has_value() && r.verdict == DecayVerdict::divergent;
    rep.add("decay.inverse_log.q" + std::to_string(static_cast<int>(q)), "slow-decay-fixture", to_json(r), ok,
            r.min_tail_statistic - 1.0);
    const auto f = decay_class(fast, q, opts.decay_horizon);
    rep.add("decay.geometric.q" + std::to_string(static_cast<int>(q)), "approximation-space", to_json(f),
            f.last_statistic <= 1e-12 && f.verdict == DecayVerdict::compatible);
  }
}

namespace {

// Grid minimization over the clip level with two zoom passes.
double k_grid(const SeqSample& f, double t) {
  const auto& s = f.rearrangement();
  auto objective = [&](double tau) {
    double v = t * tau;
    for (double x : s) v += std::max(x - tau, 0.0);
    return v;
  };
  double lo = 0.0, hi = s.front();
  double best = objective(0.0), arg = 0.0;
  for (int pass = 0; pass < 3; ++pass) {
    const int pts = 2000;
    const double h = (hi - lo) / pts;
    for (int i = 0; i <= pts; ++i) {
      const double tau = lo + h * i;
      const double v = objective(tau);
      if (v < best) {
        best = v;
        arg = tau;
      }
    }
    lo = std::max(0.0, arg - h);
    hi = arg + h;
  }
  return best;
}

}  // namespace

void suite_kfunctional(ExperimentReport& rep, const SuiteOptions& opts) {
  Rng rng(derive_seed(opts.seed, 6));
  const auto corpus = gaussian_sequences(static_cast<std::size_t>(opts.kfunc_count), 8, rng);
  const CoupleSpec cs(1.0, ExtendedReal::infinity());
  double worst_grid = 0.0, worst_closed = 0.0;
  for (const auto& f : corpus) {
    for (double t : {0.1, 1.0, 10.0}) {
      const double search = k_functional_search(f, t, cs);
      const double closed = k_functional_closed_form(f, t);
      const double grid = k_grid(f, t);
      worst_grid = std::max(worst_grid, std::abs(search - grid) / grid);
      worst_closed = std::max(worst_closed, std::abs(search - closed) / closed);
    }
  }
  rep.add("kfunc.search_vs_grid", "k-functional",
          {{"count", opts.kfunc_count}, {"t", {0.1, 1.0, 10.0}}, {"max_relative_error", worst_grid}},
          worst_grid <= 5e-3, 5e-3 - worst_grid);
  rep.add("kfunc.search_vs_closed_form", "k-functional", {{"max_relative_error", worst_closed}},
          worst_closed <= 1e-6, 1e-6 - worst_closed);

  // K-curve shape on a few samples of the general couple (1, 2).
  bool shape = true;
  const CoupleSpec c12(1.0, 2.0);
  for (std::size_t i = 0; i < 5 && i < corpus.size(); ++i) shape = shape && check_k_curve(k_curve(corpus[i], c12, 6), corpus[i], c12).ok();
  rep.add("kfunc.curve_shape_l1_l2", "k-functional", {{"samples", 5}}, shape);
}

void suite_lorentz(ExperimentReport& rep, const SuiteOptions& opts) {
  Rng rng(derive_seed(opts.seed, 7));
  const auto corpus = gaussian_sequences(2 * opts.lorentz_count, 64, rng);
  const InterpParams ip(0.5, 2.0);
  const CoupleSpec cs(1.0, ExtendedReal::infinity());
  const std::span<const SeqSample> all(corpus);
  const auto a = lorentz_identification(all.first(opts.lorentz_count), ip, cs);
  const auto b = lorentz_identification(all, ip, cs);
  const double d = drift(a.stats.width(), b.stats.width());
  rep.add("lorentz_id.band_doubling", "lorentz-identification",
          {{"p", a.p}, {"n", to_json(a)}, {"2n", to_json(b)}, {"width_drift", d}},
          a.within_band && b.within_band && d < 0.1, 0.1 - d);

  // Quadrature refinement on a handful of samples.
  QuadratureSpec dense;
  dense.points_per_octave *= 2;
  double worst = 0.0;
  for (std::size_t i = 0; i < 10; ++i) {
    const double v1 = interp_norm(corpus[i], ip, cs).value, v2 = interp_norm(corpus[i], ip, cs, dense).value;
    worst = std::max(worst, drift(v2, v1));
  }
  rep.add("interp_norm.quadrature_doubling", "real-interpolation-norm", {{"max_relative_change", worst}},
          worst < 1e-3, 1e-3 - worst);
}

void suite_jackson(ExperimentReport& rep, const SuiteOptions& opts) {
  Rng rng(derive_seed(opts.seed, 11));
  const auto corpus = decaying_sequences(opts.embed_count, 64, 1.0, 3.0, rng);
  const auto jb = jackson_bernstein_scan(corpus, ApproxSpaceParams(1.0, ExtendedReal::infinity()), 1.0);
  // The fitted constants are attained, so the smallest residual is zero up to
  // roundoff; the scan's verdict applies a relative tolerance.
  const bool ok = jb.verdict && std::isfinite(jb.c_jackson) && std::isfinite(jb.c_bernstein);
  rep.add("jackson_bernstein.decaying", "jackson-bernstein", to_json(jb), ok,
          std::min(jb.min_jackson_residual, jb.min_bernstein_residual));
}

void suite_embedding(ExperimentReport& rep, const SuiteOptions& opts) {
  Rng rng(derive_seed(opts.seed, 8));
  const auto corpus = gaussian_sequences(2 * opts.embed_count, 64, rng);
  const InterpParams ip1(0.5, 1.0), ip2(0.5, ExtendedReal::infinity());
  const CoupleSpec cs(1.0, ExtendedReal::infinity());
  const std::span<const SeqSample> all(corpus);
  const auto a = embedding_check(all.first(opts.embed_count), ip1, ip2, cs);
  const auto b = embedding_check(all, ip1, ip2, cs);
  const double recorded = a.stats.max;
  const double d = drift(recorded, b.stats.max);
  const bool ok = b.stats.max <= recorded * 1.1 && d < 0.1 && a.within_cap && b.within_cap;
  rep.add("embed.constant_doubling", "interpolation-embedding",
          {{"theta", 0.5},
           {"mu1", 1.0},
           {"mu2", "inf"},
           {"recorded_constant", recorded},
           {"doubled_max", b.stats.max},
           {"drift", d},
           {"proof_cap", a.cap}},
          ok, recorded * 1.1 - b.stats.max);
}

void suite_inclusion(ExperimentReport& rep, const SuiteOptions& opts) {
  CorpusSpec spec{CorpusKind::real_diagonal, 32, opts.inclusion_count, derive_seed(opts.seed, 9)};
  const auto corpus = gen_corpus(spec);
  int certified = 0;
  for (const auto& t : corpus) certified += certify_h(t).is_h() ? 1 : 0;
  const auto inc = inclusion_experiment(corpus, 1.0, 1.0, 2.0);
  rep.add("inclusion.l1_l2", "inclusion",
          {{"count", opts.inclusion_count}, {"certified_h", certified}, {"report", to_json(inc)}},
          certified == opts.inclusion_count && inc.finite && inc.max_ratio <= 1.0 + 1e-12 && inc.min_slack >= -1e-10,
          inc.min_slack);
}

namespace {

struct BlockCheck {
  bool ranks = true;
  bool bounds = true;
  double min_bound_slack = kInf;
  double final_residual = 0.0;
};

BlockCheck check_blocks(const ComplexMatrix& t, const DyadicDecomposition& d) {
  BlockCheck c;
  for (std::size_t n = 0; n < d.blocks.size(); ++n) {
    if (d.block_ranks[n] > (1 << n)) c.ranks = false;
    if (n >= 2) {
      const double slack = 4.0 * d.alpha_dyadic[n - 2] + 1e-10 - d.block_norms[n];
      c.min_bound_slack = std::min(c.min_bound_slack, slack);
      if (slack < 0.0) c.bounds = false;
    }
  }
  c.final_residual = d.residuals.back() / std::max(op_norm(t), 1e-300);
  return c;
}

}  // namespace

void suite_representation(ExperimentReport& rep, const SuiteOptions& opts) {
  const ApproxSpaceParams ap(1.0, 1.0);
  {
    ComplexMatrix t = ComplexMatrix::Zero(16, 16);
    for (int n = 0; n < 16; ++n) t(n, n) = std::exp2(-(n + 1));
    const auto d = dyadic_decompose(t, ap, dyadic_levels_for(16));
    const auto c = check_blocks(t, d);
    rep.add("decompose.geometric16", "dyadic-representation", to_json(d),
            c.ranks && c.bounds && c.final_residual <= 1e-10, c.min_bound_slack);
  }
  CorpusSpec spec{CorpusKind::real_diagonal, 32, opts.rep_count, derive_seed(opts.seed, 10)};
  const auto corpus = gen_corpus(spec);
  bool blocks_ok = true;
  double min_slack = kInf, worst_residual = 0.0;
  double lo1 = kInf, hi1 = 0.0, lo2 = kInf, hi2 = 0.0;
  bool in_band = true;
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const auto& t = corpus[k];
    const int levels = dyadic_levels_for(32);
    const auto d = dyadic_decompose(t, ap, levels);
    const auto c = check_blocks(t, d);
    blocks_ok = blocks_ok && c.ranks && c.bounds && c.final_residual <= 1e-10;
    min_slack = std::min(min_slack, c.min_bound_slack);
    worst_residual = std::max(worst_residual, c.final_residual);
    const auto seed = derive_seed(opts.seed ^ 0x5050, k);
    const auto r1 = representation_equivalence(t, ap, levels, opts.rep_trials, seed);
    const auto r2 = representation_equivalence(t, ap, levels, 2 * opts.rep_trials, seed);
    lo1 = std::min(lo1, r1.ratio);
    hi1 = std::max(hi1, r1.ratio);
    lo2 = std::min(lo2, r2.ratio);
    hi2 = std::max(hi2, r2.ratio);
    in_band = in_band && r1.within_band && r2.within_band;
  }
  rep.add("decompose.random_diagonal32", "dyadic-representation",
          {{"count", opts.rep_count}, {"min_bound_slack", min_slack}, {"max_final_residual", worst_residual}},
          blocks_ok, min_slack);
  const double w1 = hi1 / lo1, w2 = hi2 / lo2, d = drift(w1, w2);
  rep.add("rep_equiv.band_doubling", "representation-equivalence",
          {{"trials", opts.rep_trials},
           {"band_trials", {lo1, hi1}},
           {"band_doubled_trials", {lo2, hi2}},
           {"width_drift", d}},
          in_band && d < 0.1, 0.1 - d);
}

void suite_lethargy(ExperimentReport& rep) {
  const int n = 64;
  std::vector<double> harmonic(n), geometric(n);
  for (int k = 0; k < n; ++k) {
    harmonic[k] = 1.0 / (k + 1.0);
    geometric[k] = std::exp2(-k);
  }
  for (const auto& [name, d] : {std::pair{"harmonic", harmonic}, std::pair{"geometric", geometric}}) {
    const LethargyTarget target(d);
    const auto built = build_prescribed_widths(target);
    const auto table = snumber_table(built.op, NormKind::spectral, n);
    double worst = 0.0;
    for (int k = 0; k < n; ++k) worst = std::max(worst, std::abs(table.delta[k] - d[k]) / d[k]);
    const auto floor = verify_width_floor(built.op, target);
    rep.add(std::string("lethargy.") + name, "prescribed-widths",
            {{"n", n}, {"max_relative_error", worst}, {"floor", to_json(floor)}},
            worst <= 1e-10 && floor.floors_met && floor.order_holds, floor.min_slack);
    rep.add_bound(std::string("lethargy.") + name + ".kernel", "kernel-operator", to_json(built.kernel));
  }
}

ExperimentReport run_suite(const SuiteOptions& opts) {
  ExperimentReport rep("suite", {{"seed", opts.seed},
                                 {"markus_count", opts.markus_count},
                                 {"hermitian_count", opts.hermitian_count},
                                 {"decay_horizon", opts.decay_horizon},
                                 {"kfunc_count", opts.kfunc_count},
                                 {"lorentz_count", opts.lorentz_count},
                                 {"embed_count", opts.embed_count},
                                 {"inclusion_count", opts.inclusion_count},
                                 {"rep_count", opts.rep_count},
                                 {"rep_trials", opts.rep_trials}});
  suite_fixtures(rep);
  suite_markus(rep, opts);
  suite_hermitian(rep, opts);
  suite_decay(rep, opts);
  suite_kfunctional(rep, opts);
  suite_lorentz(rep, opts);
  suite_jackson(rep, opts);
  suite_embedding(rep, opts);
  suite_inclusion(rep, opts);
  suite_representation(rep, opts);
  suite_lethargy(rep);
  return rep;
}

}  // namespace snlab
