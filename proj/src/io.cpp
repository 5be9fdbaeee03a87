#include "snlab/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace snlab {

using nlohmann::json;

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ParseError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw ParseError("trailing characters in number: '" + s + "'");
  if (!std::isfinite(v)) throw ParseError("non-finite value: '" + s + "'");
  return v;
}

double json_number(const json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(where + ": non-finite value");
  return v;
}

}  // namespace

json matrix_to_json(const ComplexMatrix& t) {
  json data = json::array();
  for (Eigen::Index i = 0; i < t.rows(); ++i)
    for (Eigen::Index j = 0; j < t.cols(); ++j) data.push_back({t(i, j).real(), t(i, j).imag()});
  return {{"rows", t.rows()}, {"cols", t.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("matrix JSON: expected an object");
  for (const char* key : {"rows", "cols", "data"}) {
    if (!j.contains(key)) throw ParseError(std::string("matrix JSON: missing key '") + key + "'");
  }
  if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer()) {
    throw ParseError("matrix JSON: rows/cols must be integers");
  }
  const auto rows = j["rows"].get<long long>(), cols = j["cols"].get<long long>();
  if (rows < 1 || cols < 1) throw ParseError("matrix JSON: rows and cols must be positive");
  const auto& data = j["data"];
  if (!data.is_array() || static_cast<long long>(data.size()) != rows * cols) {
    throw ParseError("matrix JSON: data must hold rows*cols = " + std::to_string(rows * cols) + " entries");
  }
  ComplexMatrix t(rows, cols);
  for (long long k = 0; k < rows * cols; ++k) {
    const auto& e = data[static_cast<std::size_t>(k)];
    const std::string where = "matrix JSON data[" + std::to_string(k) + "]";
    Complex z;
    if (e.is_array()) {
      if (e.size() != 2) throw ParseError(where + ": expected [re, im]");
      z = Complex(json_number(e[0], where), json_number(e[1], where));
    } else {
      z = Complex(json_number(e, where), 0.0);
    }
    t(k / cols, k % cols) = z;
  }
  return t;
}

std::string matrix_to_csv(const ComplexMatrix& t) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < t.rows(); ++i) {
    for (Eigen::Index j = 0; j < t.cols(); ++j) {
      if (j) os << ',';
      const auto z = t(i, j);
      os << fmt(z.real()) << (z.imag() < 0 || std::signbit(z.imag()) ? "-" : "+") << fmt(std::abs(z.imag())) << 'j';
    }
    os << '\n';
  }
  return os.str();
}

Complex parse_complex_cell(const std::string& raw) {
  const std::string cell = trim(raw);
  if (cell.empty()) throw ParseError("empty cell");
  if (cell.back() != 'j' && cell.back() != 'i') return {parse_double(cell), 0.0};
  const std::string body = cell.substr(0, cell.size() - 1);
  // Split at the last sign that is not the leading one or an exponent sign.
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      const std::string im = body.substr(k);
      return {parse_double(body.substr(0, k)), parse_double(im == "+" || im == "-" ? im + "1" : im)};
    }
  }
  if (body.empty() || body == "+" || body == "-") return {0.0, body == "-" ? -1.0 : 1.0};
  return {0.0, parse_double(body)};
}

ComplexMatrix matrix_from_csv(const std::string& text) {
  std::vector<std::vector<Complex>> rows;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    std::vector<Complex> row;
    std::istringstream ls(line);
    std::string cell;
    int col = 0;
    while (std::getline(ls, cell, ',')) {
      ++col;
      try {
        row.push_back(parse_complex_cell(cell));
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(lineno) + ", column " + std::to_string(col) + ": " + e.what());
      }
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(rows.front().size()) +
                       " cells, found " + std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("matrix CSV: no rows");
  ComplexMatrix t(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      t(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  return t;
}

std::string sequence_to_csv(const SeqSample& x) {
  std::ostringstream os;
  for (const auto& z : x.values()) {
    os << fmt(z.real());
    if (z.imag() != 0.0) os << ',' << fmt(z.imag());
    os << '\n';
  }
  return os.str();
}

SeqSample sequence_from_csv(const std::string& text) {
  std::vector<Complex> v;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty()) continue;
    try {
      const auto comma = t.find(',');
      if (comma == std::string::npos) {
        v.emplace_back(parse_double(t), 0.0);
      } else {
        if (t.find(',', comma + 1) != std::string::npos) throw ParseError("expected 're' or 're,im'");
        v.emplace_back(parse_double(trim(t.substr(0, comma))), parse_double(trim(t.substr(comma + 1))));
      }
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (v.empty()) throw ParseError("sequence CSV: no values");
  return SeqSample(std::move(v));
}

json sequence_to_json(const SeqSample& x) {
  json a = json::array();
  for (const auto& z : x.values()) {
    if (z.imag() == 0.0) {
      a.push_back(z.real());
    } else {
      a.push_back({z.real(), z.imag()});
    }
  }
  return a;
}

SeqSample sequence_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("sequence JSON: expected a non-empty array");
  std::vector<Complex> v;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string where = "sequence JSON [" + std::to_string(k) + "]";
    const auto& e = j[k];
    if (e.is_array()) {
      if (e.size() != 2) throw ParseError(where + ": expected [re, im]");
      v.emplace_back(json_number(e[0], where), json_number(e[1], where));
    } else {
      v.emplace_back(json_number(e, where), 0.0);
    }
  }
  return SeqSample(std::move(v));
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path.string() + ": cannot write");
  out << text;
}

namespace {

json parse_json_text(const std::string& text, const std::filesystem::path& path) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": byte " + std::to_string(e.byte) + ": invalid JSON");
  }
}

}  // namespace

ComplexMatrix read_matrix(const std::filesystem::path& path) {
  const std::string text = read_text(path);
  try {
    if (path.extension() == ".csv") return matrix_from_csv(text);
    return matrix_from_json(parse_json_text(text, path));
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    if (msg.rfind(path.string(), 0) == 0) throw;
    throw ParseError(path.string() + ": " + msg);
  }
}

SeqSample read_sequence(const std::filesystem::path& path) {
  const std::string text = read_text(path);
  try {
    if (path.extension() == ".csv") return sequence_from_csv(text);
    return sequence_from_json(parse_json_text(text, path));
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    if (msg.rfind(path.string(), 0) == 0) throw;
    throw ParseError(path.string() + ": " + msg);
  }
}

json to_json(const ExtendedReal& e) {
  if (e.is_infinite()) return "inf";
  return e.value();
}

json to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

json to_json(const NormValue& v) {
  return {{"value", v.value}, {"horizon", v.horizon}, {"tail_last_term", v.tail_last_term}};
}

json to_json(const DecayReport& r) {
  json j = {{"q", r.q},
            {"horizon", r.horizon},
            {"last_statistic", r.last_statistic},
            {"min_tail_statistic", r.min_tail_statistic},
            {"max_tail_statistic", r.max_tail_statistic},
            {"verdict", to_string(r.verdict)}};
  j["first_dominating_index"] = r.first_dominating_index ? json(*r.first_dominating_index) : json(nullptr);
  return j;
}

json to_json(const SpectrumResult& s) {
  json ev = json::array(), gram = json::array();
  for (const auto& z : s.eigenvalues) ev.push_back(to_json(z));
  for (double v : s.singular_values) gram.push_back(v * v);
  return {{"eigenvalues", ev}, {"singular_values", s.singular_values}, {"gram_eigenvalues", gram}};
}

json to_json(const SNumberTable& t) {
  json rows = json::array();
  for (int n = 0; n < t.n_max; ++n) {
    json r = {{"n", n + 1},
              {"alpha", t.alpha[n]},
              {"delta", t.delta[n]},
              {"singular", t.singular[n]},
              {"exact", t.alpha_exact[n] && t.delta_exact[n]}};
    r["abs_eigen"] = n < static_cast<int>(t.abs_eigen.size()) ? json(t.abs_eigen[n]) : json(nullptr);
    rows.push_back(std::move(r));
  }
  return {{"norm", to_string(t.norm)},
          {"n_max", t.n_max},
          {"index_convention", "alpha_n over rank <= n-1; delta in row n is delta_{n-1}"},
          {"restarts", t.restarts},
          {"rows", rows}};
}

json to_json(const HCertificate& c) {
  json j = {{"is_real_spectrum", c.is_real_spectrum},
            {"max_abs_imag", c.max_abs_imag},
            {"op_norm", c.op_norm},
            {"c_estimate", c.c_estimate},
            {"c_grid", c.c_grid},
            {"is_h_operator", c.is_h()},
            {"sample_grid", c.sample_grid},
            {"samples", c.samples},
            {"log", c.log}};
  j["c_upper"] = c.c_upper ? json(*c.c_upper) : json(nullptr);
  return j;
}

json to_json(const MarkusReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"n", row.n},
                    {"delta_prev", row.delta_prev},
                    {"alpha", row.alpha},
                    {"abs_lambda", row.abs_lambda},
                    {"slack_left", row.slack_left},
                    {"slack_mid", row.slack_mid},
                    {"slack_right", row.slack_right},
                    {"exact", row.exact}});
  }
  return {{"refused", r.refused},     {"reason", r.reason},   {"c_used", r.c_used},
          {"c_source", r.c_source},   {"rows", rows},         {"alpha_vs_eigen", r.alpha_vs_eigen},
          {"min_slack", r.rows.empty() ? 0.0 : r.min_slack}, {"verdict", r.verdict}};
}

json to_json(const CorollaryReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"dim", row.dim},
                    {"norm_lambda", row.norm_lambda},
                    {"norm_delta", row.norm_delta},
                    {"norm_alpha", row.norm_alpha},
                    {"max_ratio", row.max_ratio}});
  }
  return {{"mu", to_json(r.mu)},           {"c", r.c},
          {"factor_bound", r.factor_bound}, {"rows", rows},
          {"last_growth", r.last_growth},   {"saturated", r.saturated},
          {"within_factor", r.within_factor}};
}

json to_json(const InterpNorm& n) {
  return {{"value", n.value}, {"head_mass", n.head_mass}, {"tail_mass", n.tail_mass}, {"under_covered", n.under_covered}};
}

json to_json(const EmbeddingReport& r) {
  return {{"count", r.stats.count}, {"min_ratio", r.stats.min}, {"max_ratio", r.stats.max},
          {"argmax", r.stats.argmax}, {"cap", r.cap},          {"within_cap", r.within_cap}};
}

json to_json(const LorentzIdReport& r) {
  return {{"p", r.p},           {"count", r.stats.count},   {"min_ratio", r.stats.min},
          {"max_ratio", r.stats.max}, {"width", r.stats.width()}, {"band_lo", r.band_lo},
          {"band_hi", r.band_hi}, {"within_band", r.within_band}};
}

json to_json(const JacksonBernsteinReport& r) {
  return {{"sigma", r.sigma},
          {"rho", r.rho},
          {"mu", to_json(r.mu)},
          {"c_jackson", r.c_jackson},
          {"c_bernstein", r.c_bernstein},
          {"min_jackson_residual", r.min_jackson_residual},
          {"min_bernstein_residual", r.min_bernstein_residual},
          {"r_exponent", r.r_exponent},
          {"samples", r.samples},
          {"verdict", r.verdict}};
}

json to_json(const OperatorApproxNorm& r) {
  return {{"value_lambda", r.value_lambda}, {"value_alpha", r.value_alpha}, {"ratio", r.ratio}};
}

json to_json(const InclusionReport& r) {
  return {{"count", r.ratios.size()}, {"max_ratio", r.max_ratio}, {"min_slack", r.min_slack}, {"finite", r.finite}};
}

json to_json(const DyadicDecomposition& d) {
  json rows = json::array();
  for (std::size_t n = 0; n < d.blocks.size(); ++n) {
    json row = {{"n", n}, {"rank", d.block_ranks[n]}, {"norm", d.block_norms[n]}, {"residual", d.residuals[n]}};
    if (n >= 2 && n - 2 < d.alpha_dyadic.size()) {
      const double bound = 4.0 * d.alpha_dyadic[n - 2];
      row["bound"] = bound;
      row["slack"] = bound - d.block_norms[n];
    } else {
      row["bound"] = nullptr;
      row["slack"] = nullptr;
    }
    rows.push_back(std::move(row));
  }
  return {{"levels", d.levels}, {"rep_norm", d.rep_norm}, {"floor_residual", d.floor_residual}, {"blocks", rows}};
}

json to_json(const RepEquivalenceReport& r) {
  return {{"canonical_rep_norm", r.canonical_rep_norm},
          {"rep_norm_upper", r.rep_norm},
          {"a_norm", r.a_norm},
          {"ratio", r.ratio},
          {"trials", r.trials},
          {"band", {r.band_lo, r.band_hi}},
          {"within_band", r.within_band}};
}

json to_json(const WidthFloorReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"n", row.n}, {"target", row.target}, {"delta", row.delta}, {"alpha_next", row.alpha_next}, {"slack", row.slack}});
  }
  json j = {{"rows", rows}, {"min_slack", r.min_slack}, {"order_holds", r.order_holds}, {"floors_met", r.floors_met}};
  j["first_violation"] = r.first_violation ? json(*r.first_violation) : json(nullptr);
  return j;
}

json to_json(const KernelOperatorSpec& k) {
  return {{"coefficient_sum", k.coefficient_sum},
          {"tail_growth", k.tail_growth},
          {"summable", k.summable},
          {"kernel_condition", k.summable ? "satisfied (partial sums settled within horizon)"
                                          : "divergent within horizon: kernel condition not met by this construction"}};
}

std::string snumber_table_csv(const SNumberTable& t) {
  std::ostringstream os;
  os << "n,alpha,delta,singular,abs_eigen,exact\n";
  for (int n = 0; n < t.n_max; ++n) {
    os << (n + 1) << ',' << fmt(t.alpha[n]) << ',' << fmt(t.delta[n]) << ',' << fmt(t.singular[n]) << ','
       << (n < static_cast<int>(t.abs_eigen.size()) ? fmt(t.abs_eigen[n]) : "") << ','
       << ((t.alpha_exact[n] && t.delta_exact[n]) ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string k_curve_csv(const KCurve& c) {
  std::ostringstream os;
  os << "t,K,method\n";
  for (std::size_t i = 0; i < c.t.size(); ++i) os << fmt(c.t[i]) << ',' << fmt(c.k[i]) << ',' << to_string(c.method[i]) << '\n';
  return os.str();
}

}  // namespace snlab
