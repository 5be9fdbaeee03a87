#include "snlab/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace snlab {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::bound_only: return "bound-only";
  }
  return "?";
}

const std::vector<std::string>& anchor_registry() {
  static const std::vector<std::string> anchors = {
      "singular-values",
      "schmidt-representation",
      "approximation-numbers",
      "kolmogorov-diameters",
      "s-number-axioms",
      "nonnormal-fixture",
      "nonreal-spectrum-fixture",
      "h-operator-resolvent-bound",
      "self-adjoint-constant",
      "markus-chain",
      "eigenvalue-equivalence",
      "lorentz-quasi-norm",
      "approximation-space",
      "slow-decay-fixture",
      "k-functional",
      "real-interpolation-norm",
      "lorentz-identification",
      "jackson-bernstein",
      "interpolation-embedding",
      "operator-approximation-space",
      "inclusion",
      "dyadic-representation",
      "representation-equivalence",
      "prescribed-widths",
      "kernel-operator",
      "determinism",
      "artifact-plumbing",
  };
  return anchors;
}

bool is_known_anchor(std::string_view anchor) {
  const auto& a = anchor_registry();
  return std::find(a.begin(), a.end(), anchor) != a.end();
}

ExperimentReport::ExperimentReport(std::string command, nlohmann::json config)
    : command_(std::move(command)), config_(std::move(config)) {}

CheckRecord& ExperimentReport::add(CheckRecord record) {
  if (!is_known_anchor(record.anchor)) throw std::invalid_argument("unknown anchor '" + record.anchor + "'");
  records_.push_back(std::move(record));
  return records_.back();
}

CheckRecord& ExperimentReport::add(std::string name, std::string anchor, nlohmann::json values, bool ok,
                                   std::optional<double> slack) {
  return add(CheckRecord{std::move(name), std::move(anchor), std::move(values), slack,
                         ok ? Verdict::pass : Verdict::fail});
}

CheckRecord& ExperimentReport::add_bound(std::string name, std::string anchor, nlohmann::json values,
                                         std::optional<double> slack) {
  return add(CheckRecord{std::move(name), std::move(anchor), std::move(values), slack, Verdict::bound_only});
}

bool ExperimentReport::all_pass() const {
  return std::none_of(records_.begin(), records_.end(),
                      [](const CheckRecord& r) { return r.verdict == Verdict::fail; });
}

nlohmann::json ExperimentReport::to_json() const {
  nlohmann::json recs = nlohmann::json::array();
  for (const auto& r : records_) {
    recs.push_back({{"name", r.name},
                    {"paper_anchor", r.anchor},
                    {"values", r.values},
                    {"slack", r.slack ? nlohmann::json(*r.slack) : nlohmann::json(nullptr)},
                    {"verdict", to_string(r.verdict)}});
  }
  nlohmann::json j = {{"command", command_}, {"config", config_}, {"records", recs}, {"all_pass", all_pass()}};
  if (wall_time_) j["wall_time_s"] = *wall_time_;
  return j;
}

std::string ExperimentReport::dump_json() const { return to_json().dump(2) + "\n"; }

std::string ExperimentReport::dump_csv() const {
  std::ostringstream os;
  os << "name,paper_anchor,verdict,slack\n";
  for (const auto& r : records_) {
    os << r.name << ',' << r.anchor << ',' << to_string(r.verdict) << ',';
    if (r.slack) os << std::setprecision(17) << *r.slack;
    os << '\n';
  }
  return os.str();
}

}  // namespace snlab
