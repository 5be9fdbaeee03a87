#include "snlab/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "snlab/corpus.hpp"
#include "snlab/interp.hpp"
#include "snlab/io.hpp"
#include "snlab/lethargy.hpp"
#include "snlab/represent.hpp"
#include "snlab/suite.hpp"

namespace snlab {

using nlohmann::json;

namespace {

/// Input or configuration problem that maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Every flag is captured as text and converted on use, so bad values surface
// as usage errors naming the flag.
struct Flags {
  std::map<std::string, std::string> values;

  bool has(const std::string& name) const { return values.count(name) && !values.at(name).empty(); }
  std::string str(const std::string& name, const std::string& fallback = "") const {
    return has(name) ? values.at(name) : fallback;
  }
  double real(const std::string& name, double fallback) const {
    if (!has(name)) return fallback;
    try {
      std::size_t used = 0;
      const double v = std::stod(values.at(name), &used);
      if (used != values.at(name).size() || !std::isfinite(v)) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      throw UsageError("--" + name + ": expected a finite number, got '" + values.at(name) + "'");
    }
  }
  long long integer(const std::string& name, long long fallback) const {
    if (!has(name)) return fallback;
    try {
      std::size_t used = 0;
      const long long v = std::stoll(values.at(name), &used);
      if (used != values.at(name).size()) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      throw UsageError("--" + name + ": expected an integer, got '" + values.at(name) + "'");
    }
  }
  ExtendedReal extended(const std::string& name, ExtendedReal fallback) const {
    if (!has(name)) return fallback;
    try {
      return ExtendedReal::parse(values.at(name));
    } catch (const std::exception&) {
      throw UsageError("--" + name + ": expected a number or 'inf', got '" + values.at(name) + "'");
    }
  }
};

std::uint64_t parse_seed_text(const std::string& text, const std::string& source) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(text, &used, 0);
    if (used != text.size() || text.front() == '-') throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw UsageError(source + ": expected a non-negative 64-bit integer, got '" + text + "'");
  }
}

struct Seed {
  std::uint64_t value = 0;
  std::string source = "default";
};

Seed resolve_seed(const Flags& f) {
  if (f.has("seed")) return {parse_seed_text(f.str("seed"), "--seed"), "flag"};
  if (const char* env = std::getenv("SNLAB_SEED"); env && *env) return {parse_seed_text(env, "SNLAB_SEED"), "env"};
  return {};
}

NormKind norm_of(const Flags& f) {
  try {
    return parse_norm_kind(f.str("norm", "spectral"));
  } catch (const std::exception&) {
    throw UsageError("--norm: expected spectral, one or inf, got '" + f.str("norm") + "'");
  }
}

GridSpec grid_of(const Flags& f) {
  GridSpec g;
  g.re_points = static_cast<int>(f.integer("re-points", g.re_points));
  g.im_points = static_cast<int>(f.integer("im-points", g.im_points));
  g.im_min = f.real("im-min", g.im_min);
  g.im_max = f.real("im-max", g.im_max);
  if (g.re_points < 1 || g.im_points < 1 || !(g.im_min > 0.0) || !(g.im_max >= g.im_min)) {
    throw UsageError("grid: need re/im points >= 1 and 0 < im-min <= im-max");
  }
  return g;
}

std::string require_in(const Flags& f) {
  if (!f.has("in")) throw UsageError("--in is required for this command");
  return f.str("in");
}

ComplexMatrix matrix_in(const Flags& f) { return read_matrix(require_in(f)); }
SeqSample sequence_in(const Flags& f) { return read_sequence(require_in(f)); }

// A sequence corpus file is a JSON array whose entries are sequences.
std::vector<SeqSample> sequence_corpus_in(const std::string& path) {
  const std::string text = read_text(path);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": byte " + std::to_string(e.byte) + ": invalid JSON");
  }
  if (!j.is_array() || j.empty()) throw ParseError(path + ": expected a non-empty array of sequences");
  std::vector<SeqSample> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    try {
      out.push_back(sequence_from_json(j[k]));
    } catch (const ParseError& e) {
      throw ParseError(path + ": corpus entry " + std::to_string(k) + ": " + e.what());
    }
  }
  return out;
}

json base_config(const std::string& cmd, const Flags& f, const Seed& seed) {
  json cfg = {{"command", cmd}, {"seed", seed.value}, {"seed_source", seed.source}};
  json flags = json::object();
  for (const auto& [k, v] : f.values)
    if (!v.empty() && k != "seed") flags[k] = v;
  cfg["flags"] = flags;
  return cfg;
}

struct Outcome {
  ExperimentReport report;
  std::optional<std::string> csv;  // overrides the generic CSV rendering
};

using Handler = std::function<Outcome(const Flags&, const Seed&, const std::string&)>;

Outcome cmd_spectrum(const Flags& f, const Seed& seed, const std::string& cmd) {
  const auto t = matrix_in(f);
  ExperimentReport rep(cmd, base_config(cmd, f, seed));
  const auto sp = spectrum(t);
  const double rebuild = schmidt_reconstruct(t);
  const double tol = 1e-10 * std::max(op_norm(t), 1.0);
  rep.add("spectrum", "singular-values", to_json(sp), true);
  rep.add("schmidt_rebuild", "schmidt-representation", {{"error", rebuild}, {"tolerance", tol}}, rebuild <= tol,
          tol - rebuild);
  return {std::move(rep), std::nullopt};
}

Outcome cmd_snumbers(const Flags& f, const Seed& seed, const std::string& cmd) {
  const auto t = matrix_in(f);
  const NormKind nk = norm_of(f);
  const int dim = static_cast<int>(std::min(t.rows(), t.cols()));
  const int n = static_cast<int>(f.integer("horizon", dim));
  if (n < 1 || n > dim) throw UsageError("--horizon must lie in [1, " + std::to_string(dim) + "]");
  SearchOptions so;
  so.seed = seed.value;
  const auto table = snumber_table(t, nk, n, so);
  ExperimentReport rep(cmd, base_config(cmd, f, seed));
  bool mono = true;
  for (int k = 1; k < n; ++k) mono = mono && table.alpha[k] <= table.alpha[k - 1] * (1 + 1e-12) && table.delta[k] <= table.delta[k - 1] * (1 + 1e-12);
  bool order = true;
  for (int k = 0; k < n; ++k) order = order && table.delta[k] <= table.alpha[k] * (1 + 1e-9) + 1e-14;
  auto& r = rep.add("snumber_table", "approximation-numbers", to_json(table), mono);
  if (!table.all_exact() && mono) r.verdict = Verdict::bound_only;
  auto& o = rep.add("delta_below_alpha", "kolmogorov-diameters", {{"holds", order}}, order);
  if (!table.all_exact() && order) o.verdict = Verdict::bound_only;
  return {std::move(rep), snumber_table_csv(table)};
}

Outcome cmd_hcert(const Flags& f, const Seed& seed, const std::string& cmd) {
  const auto t = matrix_in(f);
  const auto cert = certify_h(t, f.real("tol-real-spectrum", 1e-8), grid_of(f));
  ExperimentReport rep(cmd, base_config(cmd, f, seed));
  rep.add("h_certificate", "h-operator-resolvent-bound", to_json(cert), cert.is_h());
  return {std::move(rep), std::nullopt};
}

Outcome cmd_markus(const Flags& f, const Seed& seed, const std::string& cmd) {
  const auto t = matrix_in(f);
  const auto cert = certify_h(t, f.real("tol-real-spectrum", 1e-8), grid_of(f));
  SearchOptions so;
  so.seed = seed.value;
  const auto table = snumber_table(t, norm_of(f), static_cast<int>(std::min(t.rows(), t.cols())), so);
  const auto mr = markus_verify(t, cert, table);
  ExperimentReport rep(cmd, base_config(cmd, f, seed));
  json v = to_json(mr);
  v["certificate"] = to_json(cert);
  auto& r = rep.add("markus_chain", "markus-chain", v, !mr.refused && mr.verdict,
                    mr.rows.empty() ? std::nullopt : std::optional<double>(mr.min_slack));
  if (r.verdict == Verdict::pass && !table.all_exact()) r.verdict = Verdict::bound_only;
  return {std::move(rep), std::nullopt};
}

Outcome cmd_lorentz(const Flags& f, const Seed& seed, const std::string& cmd) {
  const auto x = sequence_in(f);
  const LorentzParams lp(f.real("p", 2.0), f.extended("q", 2.0));
  const auto v = lorentz_norm(x, lp);
  ExperimentReport rep(cmd, base_config(cmd, f, seed));
  rep.add("lorentz_norm", "lorentz-quasi-norm", to_json(v), true);
  return {std::move(rep), std::nullopt};
}

Outcome cmd_approx_norm(const Flags& f, const Seed& seed, const std::string& cmd) {
  const ApproxSpaceParams ap(f.real("rho", 1.0), f.extended("mu", 1.0));
  ExperimentReport rep(cmd, base_config(cmd, f, seed));
  const std::string path = require_in(f);
  const bool is_seq = std::filesystem::path(path).extension() == ".json" && json::parse(read_text(path), nullptr, false).is_array();
  if (is_seq) {
    const auto alphas = read_sequence(path);
    rep.add("approx_space_norm", "approximation-space", to_json(approx_space_norm(alphas, ap)), true);
    return {std::move(rep), std::nullopt};
  }
  const auto t = read_matrix(path);
  const auto cert = certify_h(t, f.real("tol-real-spectrum", 1e-8), grid_of(f));
  const auto s = singular_values(t);
  rep.add("alpha_norm", "approximation-space", to_json(approx_space_norm(std::span<const double>(s), ap)), true);
  if (!cert.is_h()) {
    rep.add("eigen_norm", "operator-approximation-space",
            {{"refused", true}, {"reason", "not a certified H-operator"}, {"certificate", to_json(cert)}}, false);
    return {std::move(rep), std::nullopt};
  }
  const auto oa = operator_approx_norm(t, cert, ap);
  const double c = *cert.c_upper;
  const double lo = 1.0 / (8.0 * c * (c + 1.0)), hi = 2.0 * std::sqrt(2.0) * c;
  json v = to_json(oa);
  v["c_upper"] = c;
  v["sandwich"] = {lo, hi};
  rep.add("eigen_norm", "operator-approximation-space", v, oa.ratio >= lo * (1 - 1e-9) && oa.ratio <= hi * (1 + 1e-9),
          std::min(oa.ratio - lo, hi - oa.ratio));
  return {std::move(rep), std::nullopt};
}

CoupleSpec couple_of(const Flags& f) {
  return CoupleSpec(f.extended("r", 1.0), f.extended("s", ExtendedReal::infinity()));
}

Outcome cmd_kfunc(const Flags& f, const Seed& seed, const std::string& cmd) {
  const auto x = sequence_in(f);
  const auto cs = couple_of(f);
  const int j = static_cast<int>(f.integer("grid-j", 10));
  if (j < 0 || j > 200) throw UsageError("--grid-j must lie in [0, 200]");
  const auto curve = k_curve(x, cs, j);
  const auto chk = check_k_curve(curve, x, cs);
  ExperimentReport rep(cmd, base_config(cmd, f, seed));
  json pts = json::array();
  for (std::size_t i = 0; i < curve.t.size(); ++i) pts.push_back({{"t", curve.t[i]}, {"K", curve.k[i]}, {"method", to_string(curve.method[i])}});
  rep.add("k_curve", "k-functional",
          {{"points", pts}, {"monotone", chk.monotone}, {"concave", chk.concave}, {"bounded", chk.bounded}}, chk.ok());
  return {std::move(rep), k_curve_csv(curve)};
}

QuadratureSpec quad_of(const Flags& f) {
  QuadratureSpec q;
  q.j_max = static_cast<int>(f.integer("grid-j", q.j_max));
  if (q.j_max < 1 || q.j_max > 200) throw UsageError("--grid-j must lie in [1, 200]");
  return q;
}

Outcome cmd_interp_norm(const Flags& f, const Seed& seed, const std::string& cmd) {
  const auto x = sequence_in(f);
  const InterpParams ip(f.real("theta", 0.5), f.extended("p", 2.0));
  const auto v = interp_norm(x, ip, couple_of(f), quad_of(f));
  ExperimentReport rep(cmd, base_config(cmd, f, seed));
  auto& r = rep.add("interp_norm", "real-interpolation-norm", to_json(v), true);
  if (v.under_covered) r.verdict = Verdict::bound_only;
  return {std::move(rep), std::nullopt};
}

std::vector<SeqSample> seq_corpus(const Flags& f, const Seed& seed, bool decaying) {
  if (f.has("in")) return sequence_corpus_in(f.str("in"));
  const auto count = f.integer("count", 1000), dim = f.integer("dim", 64);
  if (count < 1 || count > CorpusSpec::max_count || dim < 1 || dim > 100000) throw UsageError("--count/--dim out of range");
  Rng rng(seed.value);
  if (decaying) return decaying_sequences(static_cast<std::size_t>(count), static_cast<std::size_t>(dim), 1.0, 3.0, rng);
  return gaussian_sequences(static_cast<std::size_t>(count), static_cast<std::size_t>(dim), rng);
}

Outcome cmd_embed(const Flags& f, const Seed& seed, const std::string& cmd) {
  const auto corpus = seq_corpus(f, seed, false);
  const double theta = f.real("theta", 0.5);
  const InterpParams ip1(theta, f.extended("mu1", 1.0)), ip2(theta, f.extended("mu2", ExtendedReal::infinity()));
  const auto r = embedding_check(corpus, ip1, ip2, couple_of(f), 0.0, quad_of(f));
  ExperimentReport rep(cmd, base_config(cmd, f, seed));
  rep.add("embedding", "interpolation-embedding", to_json(r), r.within_cap, r.cap - r.stats.max);
  return {std::move(rep), std::nullopt};
}

Outcome cmd_lorentz_id(const Flags& f, const Seed& seed, const std::string& cmd) {
  const auto corpus = seq_corpus(f, seed, false);
  const InterpParams ip(f.real("theta", 0.5), f.extended("q", 2.0));
  const auto r = lorentz_identification(corpus, ip, couple_of(f), 1e-3, 1e3, quad_of(f));
  ExperimentReport rep(cmd, base_config(cmd, f, seed));
  rep.add("lorentz_identification", "lorentz-identification", to_json(r), r.within_band);
  return {std::move(rep), std::nullopt};
}

Outcome cmd_jackson(const Flags& f, const Seed& seed, const std::string& cmd) {
  const auto corpus = seq_corpus(f, seed, true);
  const ApproxSpaceParams ap(f.real("rho", 1.0), f.extended("mu", ExtendedReal::infinity()));
  const auto r = jackson_bernstein_scan(corpus, ap, f.real("sigma", ap.rho));
  ExperimentReport rep(cmd, base_config(cmd, f, seed));
  rep.add("jackson_bernstein", "jackson-bernstein", to_json(r), r.verdict,
          std::min(r.min_jackson_residual, r.min_bernstein_residual));
  return {std::move(rep), std::nullopt};
}

std::vector<ComplexMatrix> matrix_corpus(const Flags& f, const Seed& seed) {
  if (f.has("in")) {
    const std::filesystem::path dir = f.str("in");
    std::vector<std::filesystem::path> files;
    if (std::filesystem::is_directory(dir)) {
      for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.path().extension() == ".json" || e.path().extension() == ".csv") files.push_back(e.path());
      std::sort(files.begin(), files.end());
    } else {
      files.push_back(dir);
    }
    if (files.empty()) throw UsageError(dir.string() + ": no matrix files");
    std::vector<ComplexMatrix> out;
    for (const auto& p : files) out.push_back(read_matrix(p));
    return out;
  }
  CorpusSpec spec{CorpusKind::real_diagonal, static_cast<int>(f.integer("dim", 32)),
                  static_cast<int>(f.integer("count", 1000)), seed.value};
  spec.validate();
  return gen_corpus(spec);
}

Outcome cmd_inclusion(const Flags& f, const Seed& seed, const std::string& cmd) {
  const auto corpus = matrix_corpus(f, seed);
  const double tol = f.real("tol-real-spectrum", 1e-8);
  std::vector<ComplexMatrix> certified;
  for (const auto& t : corpus)
    if (certify_h(t, tol).is_h()) certified.push_back(t);
  ExperimentReport rep(cmd, base_config(cmd, f, seed));
  const auto r = inclusion_experiment(certified, f.real("rho", 1.0), f.extended("mu1", 1.0), f.extended("mu2", 2.0));
  json v = to_json(r);
  v["corpus"] = corpus.size();
  v["certified_h"] = certified.size();
  rep.add("inclusion", "inclusion", v, r.finite && r.min_slack >= -1e-10 && !certified.empty(), r.min_slack);
  return {std::move(rep), std::nullopt};
}

int levels_of(const Flags& f, const ComplexMatrix& t) {
  const auto lv = f.integer("levels", dyadic_levels_for(std::max(t.rows(), t.cols())));
  if (lv < 2 || lv > 30) throw UsageError("--levels must lie in [2, 30]");
  return static_cast<int>(lv);
}

Outcome cmd_decompose(const Flags& f, const Seed& seed, const std::string& cmd) {
  const auto t = matrix_in(f);
  const ApproxSpaceParams ap(f.real("rho", 1.0), f.extended("mu", 1.0));
  const auto d = dyadic_decompose(t, ap, levels_of(f, t));
  bool ranks = true, bounds = true;
  double min_slack = std::numeric_limits<double>::infinity();
  for (std::size_t n = 0; n < d.blocks.size(); ++n) {
    ranks = ranks && d.block_ranks[n] <= (1 << n);
    if (n >= 2) {
      const double s = 4.0 * d.alpha_dyadic[n - 2] + 1e-10 - d.block_norms[n];
      min_slack = std::min(min_slack, s);
      bounds = bounds && s >= 0.0;
    }
  }
  const double s1 = op_norm(t);
  const bool terminated = d.residuals.back() <= 1e-10 * std::max(s1, 1e-300);
  ExperimentReport rep(cmd, base_config(cmd, f, seed));
  rep.add("dyadic_blocks", "dyadic-representation", to_json(d), ranks && bounds, min_slack);
  if (d.floor_residual) {
    rep.add_bound("dyadic_residual", "dyadic-representation",
                  {{"final_residual", d.residuals.back()}, {"note", "levels too few for the rank; residual floor"}});
  } else {
    rep.add("dyadic_residual", "dyadic-representation", {{"final_residual", d.residuals.back()}}, terminated);
  }
  return {std::move(rep), std::nullopt};
}

Outcome cmd_rep_equiv(const Flags& f, const Seed& seed, const std::string& cmd) {
  const auto t = matrix_in(f);
  const ApproxSpaceParams ap(f.real("rho", 1.0), f.extended("mu", 1.0));
  const auto trials = f.integer("trials", 16);
  if (trials < 0 || trials > 1000000) throw UsageError("--trials out of range");
  const auto r = representation_equivalence(t, ap, levels_of(f, t), static_cast<int>(trials), seed.value);
  ExperimentReport rep(cmd, base_config(cmd, f, seed));
  rep.add("representation_equivalence", "representation-equivalence", to_json(r), r.within_band);
  return {std::move(rep), std::nullopt};
}

Outcome cmd_lethargy(const Flags& f, const Seed& seed, const std::string& cmd) {
  std::vector<double> d;
  if (f.has("in")) {
    for (const auto& z : sequence_in(f).values()) {
      if (z.imag() != 0.0) throw UsageError("lethargy target must be real");
      d.push_back(z.real());
    }
  } else {
    const auto n = f.integer("horizon", 64);
    if (n < 1 || n > CorpusSpec::max_dim) throw UsageError("--horizon must lie in [1, 500]");
    const std::string kind = f.str("target", "harmonic");
    for (long long k = 0; k < n; ++k) {
      if (kind == "harmonic") {
        d.push_back(1.0 / static_cast<double>(k + 1));
      } else if (kind == "geometric") {
        d.push_back(std::exp2(-static_cast<double>(k)));
      } else {
        throw UsageError("--target: expected harmonic or geometric");
      }
    }
  }
  const LethargyTarget target(d);
  const auto built = build_prescribed_widths(target);
  const auto floor = verify_width_floor(built.op, target);
  ExperimentReport rep(cmd, base_config(cmd, f, seed));
  rep.add("width_floor", "prescribed-widths", to_json(floor), floor.floors_met && floor.order_holds, floor.min_slack);
  rep.add_bound("kernel_condition", "kernel-operator", to_json(built.kernel));
  return {std::move(rep), std::nullopt};
}

Outcome cmd_suite(const Flags& f, const Seed& seed, const std::string&) {
  SuiteOptions so;
  so.seed = seed.value;
  auto rep = run_suite(so);
  return {std::move(rep), std::nullopt};
}

Outcome cmd_gen_corpus(const Flags& f, const Seed& seed, const std::string& cmd) {
  CorpusSpec spec;
  try {
    spec.kind = parse_corpus_kind(f.str("kind", "real-diagonal"));
  } catch (const DomainError& e) {
    throw UsageError(std::string("--kind: ") + e.what());
  }
  spec.dim = static_cast<int>(std::clamp<long long>(f.integer("dim", 8), -1, CorpusSpec::max_dim + 1));
  spec.count = static_cast<int>(std::clamp<long long>(f.integer("count", 1), -1, CorpusSpec::max_count + 1));
  spec.seed = seed.value;
  spec.kappa_cap = f.real("kappa-cap", 10.0);
  try {
    spec.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (!f.has("out")) throw UsageError("--out (corpus directory) is required for gen-corpus");
  const auto paths = write_corpus(spec, f.str("out"));
  ExperimentReport rep(cmd, base_config(cmd, f, seed));
  json names = json::array();
  for (const auto& p : paths) names.push_back(p.filename().string());
  rep.add("corpus", "artifact-plumbing", {{"kind", to_string(spec.kind)}, {"dim", spec.dim}, {"count", spec.count}, {"files", names}}, true);
  return {std::move(rep), std::nullopt};
}

struct Command {
  std::string name;
  std::string help;
  std::vector<std::string> flags;
  Handler handler;
  bool out_is_dir = false;  // --out names a directory; the report goes to stdout
};

const std::vector<std::string> kGrid = {"tol-real-spectrum", "re-points", "im-points", "im-min", "im-max"};

std::vector<std::string> join(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<Command> commands() {
  return {
      {"spectrum", "eigenvalues and singular values of a matrix", {"in"}, cmd_spectrum},
      {"snumbers", "approximation numbers and Kolmogorov diameters", {"in", "norm", "horizon"}, cmd_snumbers},
      {"hcert", "H-operator certificate with resolvent sampling", join({"in"}, kGrid), cmd_hcert},
      {"markus", "eigenvalue / s-number inequality chain", join({"in", "norm"}, kGrid), cmd_markus},
      {"lorentz", "Lorentz quasi-norm of a sequence", {"in", "p", "q"}, cmd_lorentz},
      {"approx-norm", "approximation-space quasi-norm", join({"in", "rho", "mu"}, kGrid), cmd_approx_norm},
      {"kfunc", "K-functional curve of a sequence", {"in", "r", "s", "grid-j"}, cmd_kfunc},
      {"interp-norm", "real interpolation norm", {"in", "theta", "p", "r", "s", "grid-j"}, cmd_interp_norm},
      {"embed", "interpolation embedding constant over a corpus",
       {"in", "theta", "mu1", "mu2", "r", "s", "grid-j", "count", "dim"}, cmd_embed},
      {"lorentz-id", "interpolation norm versus Lorentz norm over a corpus",
       {"in", "theta", "q", "r", "s", "grid-j", "count", "dim"}, cmd_lorentz_id},
      {"jackson-bernstein", "Jackson and Bernstein constants over a corpus",
       {"in", "rho", "mu", "sigma", "count", "dim"}, cmd_jackson},
      {"inclusion", "approximation-space inclusion over a matrix corpus",
       {"in", "rho", "mu1", "mu2", "count", "dim", "tol-real-spectrum"}, cmd_inclusion},
      {"decompose", "dyadic block decomposition", {"in", "rho", "mu", "levels"}, cmd_decompose},
      {"rep-equiv", "representation norm versus eigenvalue norm", {"in", "rho", "mu", "levels", "trials"}, cmd_rep_equiv},
      {"lethargy", "operator with prescribed Kolmogorov widths", {"in", "horizon", "target"}, cmd_lethargy},
      {"suite", "full acceptance battery", {}, cmd_suite},
      {"gen-corpus", "write a seeded matrix corpus", {"kind", "dim", "count", "kappa-cap"}, cmd_gen_corpus, true},
  };
}

const std::map<std::string, std::string>& flag_help() {
  static const std::map<std::string, std::string> h = {
      {"in", "input matrix/sequence file (.json or .csv), or corpus"},
      {"out", "write the report here instead of stdout"},
      {"seed", "64-bit seed (fallback: SNLAB_SEED, then 0)"},
      {"format", "json or csv"},
      {"timing", "include wall time in the report"},
      {"norm", "spectral, one or inf"},
      {"rho", "approximation exponent rho"},
      {"mu", "approximation exponent mu (number or inf)"},
      {"mu1", "smaller exponent"},
      {"mu2", "larger exponent"},
      {"theta", "interpolation parameter in (0,1)"},
      {"p", "Lorentz p / interpolation p"},
      {"q", "Lorentz q"},
      {"r", "first couple exponent"},
      {"s", "second couple exponent"},
      {"sigma", "Jackson/Bernstein exponent"},
      {"horizon", "number of terms"},
      {"grid-j", "t = 2^j for |j| <= grid-j"},
      {"tol-real-spectrum", "tolerance on |Im lambda| relative to ||T||"},
      {"re-points", "resolvent grid: real points"},
      {"im-points", "resolvent grid: imaginary points"},
      {"im-min", "resolvent grid: smallest |Im z| relative to ||T||"},
      {"im-max", "resolvent grid: largest |Im z| relative to ||T||"},
      {"count", "corpus size"},
      {"dim", "corpus dimension"},
      {"levels", "dyadic levels"},
      {"trials", "randomized decomposition trials"},
      {"target", "harmonic or geometric"},
      {"kind", "real-diagonal, conjugated-H, hermitian or random-dense"},
      {"kappa-cap", "condition number cap for conjugated-H"},
  };
  return h;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"snlab: numerical laboratory for compact H-operators", "snlab"};
  app.require_subcommand(1);
  app.fallthrough(false);

  const auto cmds = commands();
  std::vector<std::pair<CLI::App*, Flags>> subs;
  subs.reserve(cmds.size());
  for (const auto& c : cmds) {
    auto* sub = app.add_subcommand(c.name, c.help);
    subs.emplace_back(sub, Flags{});
  }
  bool timing = false;
  for (std::size_t i = 0; i < cmds.size(); ++i) {
    auto& [sub, flags] = subs[i];
    auto names = join(cmds[i].flags, {"out", "seed", "format"});
    for (const auto& name : names) sub->add_option("--" + name, flags.values[name], flag_help().at(name));
    sub->add_flag("--timing", timing, flag_help().at("timing"));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "snlab: " << e.what() << "\n";
    if (argc <= 1) err << app.help();
    return 2;
  }

  for (std::size_t i = 0; i < cmds.size(); ++i) {
    auto& [sub, flags] = subs[i];
    if (!sub->parsed()) continue;
    try {
      const std::string format = flags.str("format", "json");
      if (format != "json" && format != "csv") throw UsageError("--format: expected json or csv");
      const auto seed = resolve_seed(flags);
      const auto start = std::chrono::steady_clock::now();
      auto outcome = cmds[i].handler(flags, seed, cmds[i].name);
      if (timing) {
        outcome.report.set_wall_time(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
      }
      const std::string text =
          format == "json" ? outcome.report.dump_json() : (outcome.csv ? *outcome.csv : outcome.report.dump_csv());
      if (flags.has("out") && !cmds[i].out_is_dir) {
        write_text(flags.str("out"), text);
      } else {
        out << text;
      }
      return outcome.report.exit_code();
    } catch (const ParseError& e) {
      err << "snlab " << cmds[i].name << ": parse error: " << e.what() << "\n";
      return 2;
    } catch (const UsageError& e) {
      err << "snlab " << cmds[i].name << ": " << e.what() << "\n";
      return 2;
    } catch (const DomainError& e) {
      err << "snlab " << cmds[i].name << ": invalid input: " << e.what() << "\n";
      return 2;
    }
  }
  err << app.help();
  return 2;
}

}  // namespace snlab
