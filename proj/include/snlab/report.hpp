#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace snlab {

enum class Verdict { pass, fail, bound_only };
std::string to_string(Verdict v);

/// One checked statement. `anchor` names the mathematical statement the check
/// exercises and must come from anchor_registry().
struct CheckRecord {
  std::string name;
  std::string anchor;
  nlohmann::json values = nlohmann::json::object();
  std::optional<double> slack;
  Verdict verdict = Verdict::pass;
};

const std::vector<std::string>& anchor_registry();
bool is_known_anchor(std::string_view anchor);

class ExperimentReport {
 public:
  ExperimentReport(std::string command, nlohmann::json config);

  /// Throws std::invalid_argument for an anchor outside the registry.
  CheckRecord& add(CheckRecord record);
  CheckRecord& add(std::string name, std::string anchor, nlohmann::json values, bool ok,
                   std::optional<double> slack = std::nullopt);
  CheckRecord& add_bound(std::string name, std::string anchor, nlohmann::json values,
                         std::optional<double> slack = std::nullopt);

  const std::vector<CheckRecord>& records() const { return records_; }
  const nlohmann::json& config() const { return config_; }
  bool all_pass() const;
  int exit_code() const { return all_pass() ? 0 : 1; }

  /// Omitted from the output unless set, so default reports are reproducible.
  void set_wall_time(double seconds) { wall_time_ = seconds; }

  nlohmann::json to_json() const;
  /// Pretty JSON with a trailing newline.
  std::string dump_json() const;
  /// One line per record: name,anchor,verdict,slack.
  std::string dump_csv() const;

 private:
  std::string command_;
  nlohmann::json config_;
  std::vector<CheckRecord> records_;
  std::optional<double> wall_time_;
};

}  // namespace snlab
